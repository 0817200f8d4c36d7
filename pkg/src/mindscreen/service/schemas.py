"""Pydantic request/response models for the screening API."""

from __future__ import annotations

from pydantic import BaseModel, Field


class HealthOut(BaseModel):
    status: str
    model_kind: str | None = None


class LabelOut(BaseModel):
    code: int
    name: str


class AssessmentIn(BaseModel):
    """Raw questionnaire answers keyed by feature name."""

    answers: dict[str, float | int | str | None]
    idempotency_key: str | None = Field(default=None, max_length=128)


class AssessmentOut(BaseModel):
    assessment_id: str
    label: LabelOut
    disclaimer: str
    model_kind: str
    timestamp: str


class ConsentIn(BaseModel):
    agreed: bool


class ConsentOut(BaseModel):
    assessment_id: str
    agreed: bool
    route: str | None = None


class TherapyItemOut(BaseModel):
    title: str
    description: str
    kind: str
    link: str | None = None


class VcbtCatalogOut(BaseModel):
    disorder: str
    items: list[TherapyItemOut]
