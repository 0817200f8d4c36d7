"""Fitted preprocessing: imputation, encoding, min-max normalization.

Normalization always uses the bounds declared in the schema, never bounds
observed in the data. That keeps single-record inference well defined and
means fitting on one split can never make another split fail.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .dataset import Dataset, RespondentRecord
from .errors import SchemaError
from .schema import FEATURE_COUNT, FeatureKind, Schema


@dataclass(frozen=True)
class FeatureVector:
    """Normalized numeric view of one record: 18 components, each in [0, 1]."""

    values: tuple[float, ...]
    source_id: str = ""

    def __post_init__(self):
        if len(self.values) != FEATURE_COUNT:
            raise ValueError(f"feature vector must have {FEATURE_COUNT} components, got {len(self.values)}")
        for v in self.values:
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"feature vector component {v!r} outside [0, 1]")

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class PreprocessorModel:
    """Per-feature imputation values and normalization bounds, in fixed order."""

    feature_order: tuple[str, ...]
    imputation: dict[str, float]
    bounds: dict[str, tuple[float, float]]

    def __post_init__(self):
        for name in self.feature_order:
            if name not in self.imputation or name not in self.bounds:
                raise ValueError(f"preprocessor is missing statistics for {name!r}")
            lo, hi = self.bounds[name]
            if not lo <= self.imputation[name] <= hi:
                raise ValueError(
                    f"{name}: imputation value {self.imputation[name]!r} "
                    f"outside bounds [{lo}, {hi}]")

    def to_dict(self) -> dict:
        return {
            "feature_order": list(self.feature_order),
            "imputation": dict(self.imputation),
            "bounds": {name: list(b) for name, b in self.bounds.items()},
        }

    @classmethod
    def from_dict(cls, payload: dict) -> "PreprocessorModel":
        return cls(
            feature_order=tuple(payload["feature_order"]),
            imputation={k: float(v) for k, v in payload["imputation"].items()},
            bounds={k: (float(lo), float(hi)) for k, (lo, hi) in payload["bounds"].items()},
        )


def _mode(values: list[float]) -> float:
    # Ties break to the smallest code so refits are reproducible.
    counts = Counter(values)
    best = max(counts.values())
    return min(v for v, c in counts.items() if c == best)


def fit_preprocessor(train: Dataset) -> PreprocessorModel:
    """Compute imputation statistics on the training split only."""
    if len(train) == 0:
        raise ValueError("cannot fit a preprocessor on an empty dataset")
    schema = train.schema
    imputation: dict[str, float] = {}
    for spec in schema:
        present = [r.values[spec.name] for r in train
                   if r.values.get(spec.name) is not None]
        if not present:
            raise ValueError(f"feature {spec.name!r} has no observed values to fit on")
        if spec.kind in (FeatureKind.CONTINUOUS, FeatureKind.ORDINAL):
            imputation[spec.name] = sum(present) / len(present)
        else:
            imputation[spec.name] = _mode(present)
    bounds = {spec.name: spec.bounds for spec in schema}
    return PreprocessorModel(schema.names, imputation, bounds)


def impute(record: RespondentRecord, model: PreprocessorModel) -> RespondentRecord:
    """Fill missing values from the model; present values pass through untouched."""
    if all(record.values.get(name) is not None for name in model.feature_order):
        return record
    filled = dict(record.values)
    for name in model.feature_order:
        if filled.get(name) is None:
            filled[name] = model.imputation[name]
    return record.with_values(filled)


def normalize_value(x: float, bounds: tuple[float, float]) -> float:
    """Min-max rescale of ``x`` into [0, 1] using declared bounds."""
    lo, hi = bounds
    if lo >= hi:
        raise SchemaError(f"degenerate normalization bounds [{lo}, {hi}]")
    if not lo <= x <= hi:
        raise ValueError(f"value {x!r} outside normalization bounds [{lo}, {hi}]")
    return (x - lo) / (hi - lo)


def transform(record: RespondentRecord, model: PreprocessorModel) -> FeatureVector:
    """Impute, then normalize every feature into the fixed vector layout."""
    filled = impute(record, model)
    components = tuple(
        normalize_value(filled.values[name], model.bounds[name])
        for name in model.feature_order
    )
    return FeatureVector(components, source_id=record.id)


def transform_dataset(dataset: Dataset, model: PreprocessorModel) -> list[FeatureVector]:
    return [transform(record, model) for record in dataset.records]


def fit_transform(train: Dataset) -> tuple[PreprocessorModel, list[FeatureVector]]:
    model = fit_preprocessor(train)
    return model, transform_dataset(train, model)
