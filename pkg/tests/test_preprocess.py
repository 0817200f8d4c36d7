from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mindscreen.dataset import Dataset, RespondentRecord, parse_answers
from mindscreen.errors import SchemaError
from mindscreen.preprocess import (
    FeatureVector,
    PreprocessorModel,
    fit_preprocessor,
    impute,
    normalize_value,
    transform,
)
from mindscreen.schema import FeatureKind, builtin_schema

SCHEMA = builtin_schema()


def _record(rid, overrides=None, fill=None):
    """Build a record from per-feature minimums (or a chosen fill rule)."""
    values = {}
    for spec in SCHEMA:
        if fill == "max":
            values[spec.name] = max(spec.code_values) if spec.codes else spec.bounds[1]
        else:
            values[spec.name] = min(spec.code_values) if spec.codes else spec.bounds[0]
    values.update(overrides or {})
    return RespondentRecord(rid, values)


def _dataset(records):
    return Dataset(tuple(records), SCHEMA)


def test_mean_imputation_for_numeric():
    rows = [_record(f"r{i}", {"age": age}) for i, age in enumerate((20, 24, 28))]
    rows.append(_record("r3", {"age": None}))
    model = fit_preprocessor(_dataset(rows))
    assert model.imputation["age"] == 24.0


def test_mode_imputation_for_binary():
    rows = [_record(f"r{i}", {"employed": v}) for i, v in enumerate((1, 1, 0))]
    model = fit_preprocessor(_dataset(rows))
    assert model.imputation["employed"] == 1.0


def test_mode_tie_breaks_to_smaller_code():
    values = [0.0, 0.0, 1.0, 1.0]
    # independent check that this really is a tie
    counts = Counter(values)
    assert counts[0.0] == counts[1.0]
    rows = [_record(f"r{i}", {"employed": v}) for i, v in enumerate(values)]
    model = fit_preprocessor(_dataset(rows))
    assert model.imputation["employed"] == 0.0


def test_fit_rejects_empty_and_fully_missing():
    with pytest.raises(ValueError):
        fit_preprocessor(_dataset([]))
    rows = [_record(f"r{i}", {"income": None}) for i in range(3)]
    with pytest.raises(ValueError, match="income"):
        fit_preprocessor(_dataset(rows))


def test_impute_fills_missing_and_keeps_present():
    train = _dataset([_record(f"r{i}", {"sleeping_hour": v, "sex": s})
                      for i, (v, s) in enumerate([(6.0, 0), (8.0, 1), (7.0, 1)])])
    model = fit_preprocessor(train)
    target = _record("q", {"sleeping_hour": None, "sex": None, "age": 30})
    filled = impute(target, model)
    assert filled.values["sleeping_hour"] == 7.0   # mean
    assert filled.values["sex"] == 1.0             # mode
    assert filled.values["age"] == 30              # untouched


def test_impute_is_identity_on_complete_records():
    train = _dataset([_record(f"r{i}") for i in range(3)])
    model = fit_preprocessor(train)
    record = _record("q", {"age": 44})
    assert impute(record, model) is record


def test_normalize_worked_example():
    assert normalize_value(5, (0, 10)) == 0.5


def test_normalize_endpoints():
    assert normalize_value(0, (0, 24)) == 0.0
    assert normalize_value(24, (0, 24)) == 1.0


def test_normalize_age_example():
    # (18 - 15) / (80 - 15) by hand
    assert normalize_value(18, (15, 80)) == pytest.approx(3 / 65, abs=1e-12)


def test_normalize_degenerate_bounds():
    with pytest.raises(SchemaError):
        normalize_value(1, (3, 3))


def test_normalize_out_of_bounds_value():
    with pytest.raises(ValueError):
        normalize_value(11, (0, 10))


def test_transform_all_minimum_is_zero_vector():
    train = _dataset([_record("r0"), _record("r1", fill="max")])
    model = fit_preprocessor(train)
    vec = transform(_record("q"), model)
    assert vec.values == tuple([0.0] * 18)
    assert vec.source_id == "q"


def test_transform_all_maximum_is_ones_vector():
    train = _dataset([_record("r0"), _record("r1", fill="max")])
    model = fit_preprocessor(train)
    vec = transform(_record("q", fill="max"), model)
    assert vec.values == tuple([1.0] * 18)


def test_transform_composed_example():
    train = _dataset([_record("r0"), _record("r1", fill="max")])
    model = fit_preprocessor(train)
    vec = transform(_record("q", {"sex": 1, "financial_status": 5}), model)
    by_name = dict(zip(model.feature_order, vec.values))
    assert by_name["sex"] == 1.0
    assert by_name["financial_status"] == 0.5
    others = [v for name, v in by_name.items() if name not in ("sex", "financial_status")]
    assert all(v == 0.0 for v in others)


def test_feature_vector_invariants():
    with pytest.raises(ValueError):
        FeatureVector((0.5,) * 17)
    with pytest.raises(ValueError):
        FeatureVector((0.5,) * 17 + (1.5,))


def test_model_serialization_round_trip():
    train = _dataset([_record("r0"), _record("r1", fill="max")])
    model = fit_preprocessor(train)
    clone = PreprocessorModel.from_dict(model.to_dict())
    assert clone == model


@st.composite
def valid_records(draw):
    values = {}
    for spec in SCHEMA:
        if spec.codes:
            values[spec.name] = float(draw(st.sampled_from(sorted(spec.code_values))))
        elif spec.kind is FeatureKind.ORDINAL or spec.integer:
            lo, hi = spec.bounds
            values[spec.name] = float(draw(st.integers(int(lo), int(hi))))
        else:
            lo, hi = spec.bounds
            values[spec.name] = draw(st.floats(lo, hi, allow_nan=False))
    return RespondentRecord(draw(st.uuids()).hex, values)


@settings(max_examples=150, deadline=None)
@given(valid_records())
def test_transform_always_lands_in_unit_cube(record):
    train = _dataset([_record("r0"), _record("r1", fill="max")])
    model = fit_preprocessor(train)
    vec = transform(record, model)
    assert len(vec) == 18
    assert all(0.0 <= v <= 1.0 for v in vec.values)
    # deterministic
    assert transform(record, model).values == vec.values
