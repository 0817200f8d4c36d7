"""Exception types shared across the package."""


class MindscreenError(Exception):
    """Base class for all package-specific failures."""


class SchemaError(MindscreenError):
    """A feature registry or configuration problem (unknown column, bad bounds)."""


class CsvParseError(MindscreenError):
    """Structurally broken CSV input."""

    def __init__(self, message: str, row: int | None = None):
        self.row = row
        if row is not None:
            message = f"row {row}: {message}"
        super().__init__(message)


class RecordValidationError(MindscreenError):
    """One or more record values failed schema validation."""

    def __init__(self, violations, row: int | None = None):
        self.violations = list(violations)
        self.row = row
        where = f"row {row}: " if row is not None else ""
        detail = "; ".join(str(v) for v in self.violations)
        super().__init__(f"{where}{detail}")


class ModelFormatError(MindscreenError):
    """A model file could not be read or has an unexpected layout."""
