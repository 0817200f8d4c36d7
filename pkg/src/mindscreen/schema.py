"""Questionnaire feature registry and disorder labels.

The screening questionnaire has a fixed set of 18 features. Each feature is
described by a :class:`FeatureSpec` (kind, bounds, category codes) and the
full set lives in a :class:`Schema`, which is what ingestion, validation,
preprocessing and the HTTP form all share.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import SchemaError


class DisorderLabel(enum.IntEnum):
    """Target classes with their fixed numeric codes."""

    DEPRESSION = 1
    INTERNET_ADDICTION = 2
    ANXIETY = 3

    @property
    def slug(self) -> str:
        return self.name.lower()

    @classmethod
    def from_slug(cls, slug: str) -> "DisorderLabel":
        try:
            return cls[slug.strip().upper()]
        except KeyError:
            raise ValueError(f"unknown disorder name: {slug!r}") from None


LABEL_CODES = tuple(int(label) for label in DisorderLabel)


class FeatureKind(str, enum.Enum):
    BINARY = "binary"
    ORDINAL = "ordinal"
    CONTINUOUS = "continuous"
    CATEGORICAL = "categorical"


@dataclass(frozen=True)
class FeatureSpec:
    """Description of one questionnaire feature.

    ``codes`` maps category text to its integer code (binary/categorical
    kinds). ``aliases`` are extra ingestion spellings that map onto a numeric
    value without being categories in their own right (e.g. the hangout
    answer "No" meaning zero hours). ``integer`` marks continuous features
    that must still hold whole numbers (age).
    """

    name: str
    kind: FeatureKind
    bounds: tuple[float, float]
    codes: dict[str, int] = field(default_factory=dict)
    aliases: dict[str, float] = field(default_factory=dict)
    required: bool = True
    integer: bool = False
    prompt: str = ""

    def __post_init__(self):
        lo, hi = self.bounds
        if not lo < hi:
            raise SchemaError(f"{self.name}: bounds must satisfy min < max, got {self.bounds}")
        if self.kind in (FeatureKind.BINARY, FeatureKind.CATEGORICAL):
            if not self.codes:
                raise SchemaError(f"{self.name}: {self.kind.value} feature needs category codes")
            if len(set(self.codes.values())) != len(self.codes):
                raise SchemaError(f"{self.name}: category codes must be injective")

    @property
    def code_values(self) -> frozenset[int]:
        return frozenset(self.codes.values())

    def parse(self, raw) -> float | None:
        """Turn a raw cell/answer into the numeric value this feature stores.

        Returns None for a missing value. Raises ValueError when the raw
        text is not interpretable at all (validation of the parsed number
        happens separately in :func:`check_value`).
        """
        if raw is None:
            return None
        if isinstance(raw, str):
            text = raw.strip()
            if not text:
                return None
            lowered = text.lower()
            if lowered in self.aliases:
                return float(self.aliases[lowered])
            if lowered in self.codes:
                return float(self.codes[lowered])
            try:
                return float(text)
            except ValueError:
                raise ValueError(f"{self.name}: cannot interpret value {raw!r}") from None
        if isinstance(raw, bool):
            return float(int(raw))
        return float(raw)

    def check_value(self, x: float) -> str | None:
        """Return a violation message for ``x``, or None when it conforms."""
        if self.kind in (FeatureKind.BINARY, FeatureKind.CATEGORICAL):
            if x != int(x) or int(x) not in self.code_values:
                allowed = sorted(self.code_values)
                return f"value {x:g} is not an assigned code (allowed: {allowed})"
            return None
        lo, hi = self.bounds
        if not lo <= x <= hi:
            return f"value {x:g} outside bounds [{lo:g}, {hi:g}]"
        if (self.kind is FeatureKind.ORDINAL or self.integer) and x != int(x):
            return f"value {x:g} must be a whole number"
        return None

    def describe(self) -> dict:
        """JSON-friendly description (drives the questionnaire form)."""
        out = {
            "name": self.name,
            "kind": self.kind.value,
            "bounds": list(self.bounds),
            "required": self.required,
            "integer": self.kind is FeatureKind.ORDINAL or self.integer,
            "prompt": self.prompt,
        }
        if self.codes:
            out["codes"] = dict(self.codes)
        if self.aliases:
            out["aliases"] = dict(self.aliases)
        return out


class Schema:
    """Ordered, immutable registry of feature specs."""

    def __init__(self, features: list[FeatureSpec] | tuple[FeatureSpec, ...]):
        names = [f.name for f in features]
        if len(set(names)) != len(names):
            raise SchemaError("duplicate feature names in schema")
        self._features = tuple(features)
        self._by_name = {f.name: f for f in self._features}

    def __len__(self) -> int:
        return len(self._features)

    def __iter__(self):
        return iter(self._features)

    def __contains__(self, name: str) -> bool:
        return name in self._by_name

    def __getitem__(self, name: str) -> FeatureSpec:
        try:
            return self._by_name[name]
        except KeyError:
            raise SchemaError(f"unknown feature: {name!r}") from None

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(f.name for f in self._features)

    def describe(self) -> dict:
        return {
            "features": [f.describe() for f in self._features],
            "labels": [{"code": int(l), "name": l.slug} for l in DisorderLabel],
        }


YES_NO = {"no": 0, "yes": 1}

FEATURE_COUNT = 18


def builtin_schema() -> Schema:
    """The fixed 18-feature questionnaire registry."""
    return Schema([
        FeatureSpec("age", FeatureKind.CONTINUOUS, (15, 80), integer=True,
                    prompt="Age in years"),
        FeatureSpec("sex", FeatureKind.BINARY, (0, 1),
                    codes={"female": 0, "male": 1},
                    prompt="Sex"),
        FeatureSpec("literacy", FeatureKind.BINARY, (0, 1),
                    codes={"illiterate": 0, "literate": 1}, aliases=YES_NO,
                    prompt="Literate (minimum higher secondary school or equivalent)?"),
        FeatureSpec("marital_status", FeatureKind.CATEGORICAL, (0, 3),
                    codes={"married": 0, "unmarried": 1, "divorced": 3},
                    prompt="Marital status"),
        FeatureSpec("children", FeatureKind.BINARY, (0, 1), codes=dict(YES_NO),
                    prompt="Do you have children?"),
        FeatureSpec("employed", FeatureKind.BINARY, (0, 1),
                    codes={"unemployed": 0, "employed": 1}, aliases=YES_NO,
                    prompt="Are you employed?"),
        FeatureSpec("socio_economic_status", FeatureKind.ORDINAL, (1, 5),
                    prompt="Socio-economic status (1 poor .. 5 self-sufficient)"),
        FeatureSpec("drug_addiction", FeatureKind.BINARY, (0, 1), codes=dict(YES_NO),
                    prompt="Any drug addiction?"),
        FeatureSpec("chronic_disease", FeatureKind.BINARY, (0, 1), codes=dict(YES_NO),
                    prompt="Any chronic disease?"),
        FeatureSpec("medication", FeatureKind.BINARY, (0, 1), codes=dict(YES_NO),
                    prompt="Currently on medication?"),
        FeatureSpec("education", FeatureKind.ORDINAL, (1, 5),
                    prompt="Education (1 primary diploma, 2 HSC/A-level, 3 B.Sc., 4 Masters, 5 PhD)"),
        FeatureSpec("financial_status", FeatureKind.ORDINAL, (0, 10),
                    prompt="Financial status (0 poor .. 10 highly rich)"),
        FeatureSpec("income", FeatureKind.CONTINUOUS, (0, 500_000),
                    prompt="Monthly income in BDT"),
        FeatureSpec("sleeping_hour", FeatureKind.CONTINUOUS, (0, 24),
                    prompt="Sleeping hours per day (0-24)"),
        FeatureSpec("result_satisfaction", FeatureKind.BINARY, (0, 1), codes=dict(YES_NO),
                    prompt="Satisfied with your academic results?"),
        FeatureSpec("feelings_of_overwhelm", FeatureKind.BINARY, (0, 1), codes=dict(YES_NO),
                    prompt="Frequent feelings of overwhelm?"),
        FeatureSpec("extracurricular_activities", FeatureKind.BINARY, (0, 1), codes=dict(YES_NO),
                    prompt="Involved in extracurricular activities?"),
        FeatureSpec("hangout_hours", FeatureKind.ORDINAL, (0, 10), aliases={"no": 0},
                    prompt='Hangout with friends, hours per day ("No" or 1-10)'),
    ])
