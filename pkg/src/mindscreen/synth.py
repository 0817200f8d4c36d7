"""Synthetic cohort generation.

Stands in for the unavailable survey data: marginals follow the published
cohort description (mean age 23, ~22% female, 489/1000 employed, 162/1000
with a chronic disease) and the class-conditional distributions are shifted
along the qualitative disorder narratives (depression with elevated chronic
disease / drug addiction, anxiety with short sleep and few extracurriculars,
internet addiction with unemployment and little hangout time).

The shift magnitudes are artifact parameters, not published facts. Profiles
are expressed as per-class values reached at separability 1 and are
recentered on the configured marginal target, so the global marginals hold
at every separability level. separability=0 collapses every profile to the
cohort mean; 1 applies the full shift.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .dataset import Dataset, RespondentRecord
from .schema import DisorderLabel, Schema, builtin_schema

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

# Per-class values at full separability, ordered (depression, internet
# addiction, anxiety). Probabilities for binary features, means for numeric
# ones. See configs/generator.example.toml for the annotated version.
BINARY_PROFILES: dict[str, tuple[float, float, float]] = {
    "employed": (0.58, 0.24, 0.66),
    "chronic_disease": (0.24, 0.04, 0.04),
    "drug_addiction": (0.16, 0.03, 0.03),
    "medication": (0.30, 0.10, 0.16),
    "result_satisfaction": (0.30, 0.52, 0.40),
    "feelings_of_overwhelm": (0.70, 0.42, 0.86),
    "extracurricular_activities": (0.45, 0.42, 0.12),
}
MEAN_PROFILES: dict[str, tuple[float, float, float]] = {
    "financial_status": (4.3, 5.2, 5.0),
    "sleeping_hour": (7.0, 5.6, 5.2),
    "hangout_hours": (3.2, 1.2, 2.6),
}
DIVORCED_PROFILE = (0.01, 0.10, 0.01)

_BASE_RATES = {"literacy": 0.97, "children": 0.10, "married": 0.12}
_EDUCATION_PROBS = (0.05, 0.55, 0.30, 0.08, 0.02)  # codes 1..5
_NOISE_SD = {"age": 3.0, "financial_status": 1.8, "sleeping_hour": 1.2,
             "hangout_hours": 1.5}


@dataclass(frozen=True)
class GeneratorConfig:
    n: int = 1000
    class_priors: tuple[float, float, float] = (0.61, 0.29, 0.10)
    seed: int = 42
    separability: float = 0.6
    mean_age: float = 23.0
    female_fraction: float = 0.22
    employed_fraction: float = 0.489
    chronic_fraction: float = 0.162
    profiles: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 30:
            raise ValueError(f"cohort size must be at least 30, got {self.n}")
        if len(self.class_priors) != 3 or any(p < 0 for p in self.class_priors):
            raise ValueError("class priors must be three non-negative numbers")
        if abs(sum(self.class_priors) - 1.0) > 1e-9:
            raise ValueError(f"class priors must sum to 1, got {sum(self.class_priors)!r}")
        if not 0.0 <= self.separability <= 1.0:
            raise ValueError(f"separability must be in [0, 1], got {self.separability}")


def load_generator_config(path) -> GeneratorConfig:
    """Read a GeneratorConfig from a TOML or JSON file."""
    path = Path(path)
    raw = path.read_bytes()
    if path.suffix.lower() == ".json":
        payload = json.loads(raw.decode("utf-8"))
    else:
        payload = tomllib.loads(raw.decode("utf-8"))
    if "class_priors" in payload:
        payload["class_priors"] = tuple(payload["class_priors"])
    if "profiles" in payload:
        payload["profiles"] = {k: tuple(v) for k, v in payload["profiles"].items()}
    return GeneratorConfig(**payload)


def _per_class(profile: tuple[float, float, float], priors, separability: float,
               target: float | None = None) -> np.ndarray:
    """Class-conditional values whose prior-weighted mean equals the target."""
    profile = np.asarray(profile, dtype=float)
    priors = np.asarray(priors, dtype=float)
    anchor = float(priors @ profile) if target is None else float(target)
    values = anchor + separability * (profile - float(priors @ profile))
    return values


def _profile(config: GeneratorConfig, name: str, default) -> tuple[float, float, float]:
    return tuple(config.profiles.get(name, default))


def generate(config: GeneratorConfig) -> Dataset:
    """Draw a labeled synthetic cohort; deterministic per seed."""
    rng = np.random.default_rng(config.seed)
    schema = builtin_schema()
    n = config.n
    priors = config.class_priors
    sep = config.separability

    labels = rng.choice((1, 2, 3), size=n, p=priors)
    cls = labels - 1  # 0-based profile index

    def bernoulli(p_per_class: np.ndarray) -> np.ndarray:
        p = np.clip(p_per_class, 0.01, 0.99)[cls]
        return (rng.random(n) < p).astype(float)

    def shifted_normal(name: str, default_profile) -> np.ndarray:
        means = _per_class(_profile(config, name, default_profile), priors, sep)[cls]
        return rng.normal(means, _NOISE_SD[name])

    values: dict[str, np.ndarray] = {}
    values["age"] = np.clip(np.rint(rng.normal(config.mean_age, _NOISE_SD["age"], n)), 15, 80)
    values["sex"] = (rng.random(n) >= config.female_fraction).astype(float)  # male=1
    values["literacy"] = (rng.random(n) < _BASE_RATES["literacy"]).astype(float)

    divorced_p = np.clip(
        _per_class(_profile(config, "divorced", DIVORCED_PROFILE), priors, sep), 0.001, 0.5
    )[cls]
    u = rng.random(n)
    marital = np.where(u < _BASE_RATES["married"], 0.0,
                       np.where(u >= 1.0 - divorced_p, 3.0, 1.0))
    values["marital_status"] = marital

    values["children"] = (rng.random(n) < _BASE_RATES["children"]).astype(float)
    values["employed"] = bernoulli(_per_class(
        _profile(config, "employed", BINARY_PROFILES["employed"]),
        priors, sep, target=config.employed_fraction))
    values["socio_economic_status"] = rng.integers(1, 6, size=n).astype(float)
    values["drug_addiction"] = bernoulli(_per_class(
        _profile(config, "drug_addiction", BINARY_PROFILES["drug_addiction"]), priors, sep))
    values["chronic_disease"] = bernoulli(_per_class(
        _profile(config, "chronic_disease", BINARY_PROFILES["chronic_disease"]),
        priors, sep, target=config.chronic_fraction))
    values["medication"] = bernoulli(_per_class(
        _profile(config, "medication", BINARY_PROFILES["medication"]), priors, sep))
    values["education"] = (rng.choice(np.arange(1, 6), size=n, p=_EDUCATION_PROBS)).astype(float)
    values["financial_status"] = np.clip(
        np.rint(shifted_normal("financial_status", MEAN_PROFILES["financial_status"])), 0, 10)
    employed = values["employed"] == 1.0
    income = np.where(employed, rng.normal(18_000, 8_000, n), rng.normal(2_500, 2_500, n))
    values["income"] = np.clip(np.rint(income), 0, 500_000)
    values["sleeping_hour"] = np.clip(
        np.round(shifted_normal("sleeping_hour", MEAN_PROFILES["sleeping_hour"]), 1), 0, 24)
    values["result_satisfaction"] = bernoulli(_per_class(
        _profile(config, "result_satisfaction", BINARY_PROFILES["result_satisfaction"]), priors, sep))
    values["feelings_of_overwhelm"] = bernoulli(_per_class(
        _profile(config, "feelings_of_overwhelm", BINARY_PROFILES["feelings_of_overwhelm"]), priors, sep))
    values["extracurricular_activities"] = bernoulli(_per_class(
        _profile(config, "extracurricular_activities",
                 BINARY_PROFILES["extracurricular_activities"]), priors, sep))
    values["hangout_hours"] = np.clip(
        np.rint(shifted_normal("hangout_hours", MEAN_PROFILES["hangout_hours"])), 0, 10)

    return _assemble(schema, values, labels, n, prefix="g")


def generate_separable(n: int, seed: int = 42) -> Dataset:
    """Three tightly clustered, linearly separable classes (test fixture).

    Each class carries its own binary signature plus near-constant numeric
    features, so post-transform clusters are far apart relative to their
    internal spread.
    """
    if n < 30:
        raise ValueError(f"cohort size must be at least 30, got {n}")
    rng = np.random.default_rng(seed)
    schema = builtin_schema()
    labels = np.array([(i % 3) + 1 for i in range(n)])

    base = {
        "sex": 1.0, "literacy": 1.0, "marital_status": 1.0, "children": 0.0,
        "employed": 1.0, "socio_economic_status": 3.0, "drug_addiction": 0.0,
        "chronic_disease": 0.0, "medication": 0.0, "education": 2.0,
        "financial_status": 5.0, "result_satisfaction": 1.0,
        "feelings_of_overwhelm": 0.0, "extracurricular_activities": 1.0,
        "hangout_hours": 8.0,
    }
    overrides = {
        1: {"chronic_disease": 1.0, "drug_addiction": 1.0, "medication": 1.0,
            "feelings_of_overwhelm": 1.0},
        2: {"employed": 0.0, "hangout_hours": 1.0, "marital_status": 3.0,
            "result_satisfaction": 0.0},
        3: {"extracurricular_activities": 0.0, "feelings_of_overwhelm": 1.0,
            "socio_economic_status": 2.0},
    }
    sleep_mean = {1: 8.0, 2: 8.0, 3: 4.0}

    values: dict[str, np.ndarray] = {name: np.empty(n) for name in schema.names}
    values["age"] = np.clip(np.rint(rng.normal(23.0, 0.8, n)), 15, 80)
    values["income"] = np.clip(np.rint(rng.normal(15_000, 300, n)), 0, 500_000)
    sleep_noise = rng.normal(0.0, 0.15, n)
    for i in range(n):
        label = int(labels[i])
        row = dict(base)
        row.update(overrides[label])
        for name, v in row.items():
            values[name][i] = v
        values["sleeping_hour"][i] = float(np.clip(round(sleep_mean[label] + sleep_noise[i], 2), 0, 24))
    return _assemble(schema, values, labels, n, prefix="s")


def _assemble(schema: Schema, values: dict[str, np.ndarray], labels: np.ndarray,
              n: int, prefix: str) -> Dataset:
    records = []
    for i in range(n):
        row = {name: float(values[name][i]) for name in schema.names}
        records.append(RespondentRecord(f"{prefix}{i:06d}", row, DisorderLabel(int(labels[i]))))
    return Dataset(tuple(records), schema)
