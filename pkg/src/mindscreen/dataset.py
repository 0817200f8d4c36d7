"""Respondent records, datasets, and CSV ingestion.

A record stores one numeric value (or None for missing) per schema feature;
category text is already encoded to its integer code at ingestion time, so
the rest of the pipeline only ever sees numbers.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import IO, Iterable

from .errors import CsvParseError, RecordValidationError, SchemaError
from .schema import DisorderLabel, Schema

ID_COLUMN = "id"
TARGET_COLUMN = "target"


@dataclass(frozen=True)
class Violation:
    """One validation problem on one feature of one record."""

    feature: str
    message: str
    value: object = None

    def __str__(self) -> str:
        return f"{self.feature}: {self.message}"


@dataclass(frozen=True)
class RespondentRecord:
    """One questionnaire response; values are encoded, possibly missing."""

    id: str
    values: dict[str, float | None] = field(default_factory=dict)
    label: DisorderLabel | None = None

    def get(self, feature: str) -> float | None:
        return self.values.get(feature)

    def with_values(self, values: dict[str, float | None]) -> "RespondentRecord":
        return replace(self, values=dict(values))


def validate_record(record: RespondentRecord, schema: Schema) -> list[Violation]:
    """Collect all schema violations of a record (empty list means valid)."""
    violations = []
    for spec in schema:
        value = record.values.get(spec.name)
        if value is None:
            if spec.required:
                violations.append(Violation(spec.name, "required value is missing"))
            continue
        message = spec.check_value(value)
        if message is not None:
            violations.append(Violation(spec.name, message, value))
    return violations


@dataclass(frozen=True)
class Dataset:
    """Ordered collection of records sharing one schema."""

    records: tuple[RespondentRecord, ...]
    schema: Schema

    def __post_init__(self):
        ids = [r.id for r in self.records]
        if len(set(ids)) != len(ids):
            raise SchemaError("record ids must be unique within a dataset")

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    @property
    def labels(self) -> tuple[DisorderLabel | None, ...]:
        return tuple(r.label for r in self.records)

    def is_labeled(self) -> bool:
        return len(self) > 0 and all(r.label is not None for r in self.records)

    def subset(self, indices: Iterable[int]) -> "Dataset":
        return Dataset(tuple(self.records[i] for i in indices), self.schema)


def parse_answers(answers: dict, schema: Schema) -> tuple[dict[str, float | None], list[Violation]]:
    """Encode a raw answers mapping against the schema.

    Returns the encoded values plus any violations (unknown features,
    uninterpretable text, out-of-bounds values, missing required answers).
    """
    values: dict[str, float | None] = {}
    violations: list[Violation] = []
    for key in answers:
        if key not in schema:
            violations.append(Violation(key, "unknown feature"))
    for spec in schema:
        raw = answers.get(spec.name)
        try:
            value = spec.parse(raw)
        except ValueError:
            violations.append(Violation(spec.name, f"cannot interpret value {raw!r}", raw))
            values[spec.name] = None
            continue
        values[spec.name] = value
        if value is None:
            if spec.required:
                violations.append(Violation(spec.name, "required value is missing"))
            continue
        message = spec.check_value(value)
        if message is not None:
            violations.append(Violation(spec.name, message, raw))
    return values, violations


def _open_text(source) -> tuple[IO[str], bool]:
    if isinstance(source, (str, Path)):
        return open(source, "r", encoding="utf-8", newline=""), True
    if isinstance(source, (bytes, bytearray)):
        return io.StringIO(source.decode("utf-8")), True
    if hasattr(source, "read"):
        probe = source.read(0)
        if isinstance(probe, bytes):
            return io.TextIOWrapper(source, encoding="utf-8", newline=""), False
        return source, False
    raise TypeError(f"unsupported CSV source: {type(source)!r}")


def load_dataset(source, schema: Schema) -> Dataset:
    """Read a CSV into a Dataset.

    The header must name every schema feature; ``id`` and ``target`` columns
    are optional. Empty cells become missing values. Any out-of-bounds value
    or unknown category aborts the load with the offending feature, row and
    value spelled out.
    """
    handle, owned = _open_text(source)
    try:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise CsvParseError("empty input: missing header row") from None
        except csv.Error as exc:
            raise CsvParseError(str(exc), row=1) from None
        header = [h.strip() for h in header]
        known = set(schema.names) | {ID_COLUMN, TARGET_COLUMN}
        for column in header:
            if column not in known:
                raise SchemaError(f"unknown column in header: {column!r}")
        missing_columns = [name for name in schema.names if name not in header]
        if missing_columns:
            raise SchemaError(f"header is missing feature columns: {missing_columns}")
        if len(set(header)) != len(header):
            raise SchemaError("duplicate columns in header")

        records = []
        # Row numbers are 1-based over the whole file; header is row 1.
        for row_number, cells in enumerate(reader, start=2):
            if not cells:
                continue
            if len(cells) != len(header):
                raise CsvParseError(
                    f"expected {len(header)} cells, found {len(cells)}", row=row_number
                )
            cell_map = dict(zip(header, cells))
            record_id = cell_map.get(ID_COLUMN, "").strip() or f"r{row_number - 1:06d}"

            values: dict[str, float | None] = {}
            violations: list[Violation] = []
            for spec in schema:
                raw = cell_map[spec.name]
                try:
                    value = spec.parse(raw)
                except ValueError:
                    violations.append(Violation(spec.name, f"cannot interpret value {raw!r}", raw))
                    continue
                values[spec.name] = value
                if value is not None:
                    message = spec.check_value(value)
                    if message is not None:
                        violations.append(Violation(spec.name, message, raw))
            if violations:
                raise RecordValidationError(violations, row=row_number)

            label = None
            raw_label = cell_map.get(TARGET_COLUMN, "").strip()
            if raw_label:
                try:
                    label = DisorderLabel(int(float(raw_label)))
                except ValueError:
                    raise RecordValidationError(
                        [Violation(TARGET_COLUMN, f"not a valid label code: {raw_label!r}", raw_label)],
                        row=row_number,
                    ) from None
            records.append(RespondentRecord(record_id, values, label))
    finally:
        if owned:
            handle.close()
    return Dataset(tuple(records), schema)


def _format_cell(value: float | None) -> str:
    if value is None:
        return ""
    if value == int(value):
        return str(int(value))
    return repr(float(value))


def save_dataset(dataset: Dataset, destination) -> None:
    """Write a dataset back out in the canonical CSV layout."""
    if isinstance(destination, (str, Path)):
        handle = open(destination, "w", encoding="utf-8", newline="")
        owned = True
    else:
        handle = destination
        owned = False
    try:
        writer = csv.writer(handle)
        labeled = any(r.label is not None for r in dataset.records)
        header = [ID_COLUMN, *dataset.schema.names]
        if labeled:
            header.append(TARGET_COLUMN)
        writer.writerow(header)
        for record in dataset.records:
            row = [record.id]
            row.extend(_format_cell(record.values.get(name)) for name in dataset.schema.names)
            if labeled:
                row.append("" if record.label is None else str(int(record.label)))
            writer.writerow(row)
    finally:
        if owned:
            handle.close()
