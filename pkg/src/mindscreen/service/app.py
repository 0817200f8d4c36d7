"""The screening HTTP service: detection, consent, and therapy routing."""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Response, status
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from ..bundle import ModelBundle, load_bundle
from ..dataset import RespondentRecord, parse_answers
from ..schema import DisorderLabel, Schema, builtin_schema
from ..vcbt import CATALOG, route_for
from .config import ServiceSettings
from .schemas import (
    AssessmentIn,
    AssessmentOut,
    ConsentIn,
    ConsentOut,
    HealthOut,
    LabelOut,
    VcbtCatalogOut,
)
from .store import AssessmentStore, DuplicateConsentError, UnknownAssessmentError

# Shown with every result; the detection is a screening aid, not a diagnosis.
DISCLAIMER = (
    "This screening result is not an exact diagnosis and is not 100% accurate. "
    "It only indicates a likely condition; please consult a qualified mental "
    "health professional for an actual diagnosis and treatment."
)


def create_app(bundle: ModelBundle | None, store: AssessmentStore,
               schema: Schema | None = None, frontend_dir: str | None = None) -> FastAPI:
    """Assemble the API around a loaded model bundle and an assessment store."""
    schema = schema or builtin_schema()
    app = FastAPI(title="mindscreen", version="0.1.0")
    app.state.bundle = bundle
    app.state.store = store

    @app.get("/api/v1/health", response_model=HealthOut)
    def health():
        loaded = app.state.bundle is not None
        return HealthOut(status="ok" if loaded else "degraded",
                         model_kind=app.state.bundle.kind if loaded else None)

    @app.get("/api/v1/schema")
    def questionnaire_schema():
        return schema.describe()

    @app.post("/api/v1/assessments", response_model=AssessmentOut,
              status_code=status.HTTP_201_CREATED)
    def create_assessment(body: AssessmentIn, response: Response):
        if app.state.bundle is None:
            return JSONResponse(
                status_code=status.HTTP_503_SERVICE_UNAVAILABLE,
                content={"detail": "no model loaded"},
            )
        values, violations = parse_answers(body.answers, schema)
        if violations:
            return JSONResponse(
                status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
                content={"detail": "invalid answers", "errors": [
                    {"feature": v.feature, "message": v.message,
                     "value": v.value if isinstance(v.value, (int, float, str)) else None}
                    for v in violations
                ]},
            )
        record = RespondentRecord(id="pending", values=values)
        label, _ = app.state.bundle.predict_record(record)
        stored, created = store.record_assessment(
            answers=dict(body.answers),
            label_code=int(label),
            model_kind=app.state.bundle.kind,
            idempotency_key=body.idempotency_key,
        )
        if not created:
            response.status_code = status.HTTP_200_OK
        return AssessmentOut(
            assessment_id=stored.assessment_id,
            label=LabelOut(code=stored.label_code,
                           name=DisorderLabel(stored.label_code).slug),
            disclaimer=DISCLAIMER,
            model_kind=stored.model_kind,
            timestamp=stored.timestamp,
        )

    @app.post("/api/v1/assessments/{assessment_id}/consent", response_model=ConsentOut)
    def record_consent(assessment_id: str, body: ConsentIn):
        try:
            consent = store.record_consent(assessment_id, body.agreed)
        except UnknownAssessmentError:
            return JSONResponse(status_code=status.HTTP_404_NOT_FOUND,
                                content={"detail": f"unknown assessment {assessment_id!r}"})
        except DuplicateConsentError:
            return JSONResponse(status_code=status.HTTP_409_CONFLICT,
                                content={"detail": "consent already recorded"})
        route = None
        if consent.agreed:
            route = route_for(DisorderLabel(store.get(assessment_id).label_code))
        return ConsentOut(assessment_id=assessment_id, agreed=consent.agreed, route=route)

    @app.get("/api/v1/vcbt/{disorder}", response_model=VcbtCatalogOut)
    def vcbt(disorder: str):
        entry = CATALOG.get(disorder)
        if entry is None:
            return JSONResponse(status_code=status.HTTP_404_NOT_FOUND,
                                content={"detail": f"unknown disorder {disorder!r}"})
        return VcbtCatalogOut(
            disorder=entry.disorder,
            items=[{"title": i.title, "description": i.description,
                    "kind": i.kind, "link": i.link} for i in entry.items],
        )

    if frontend_dir and Path(frontend_dir).is_dir():
        app.mount("/", StaticFiles(directory=frontend_dir, html=True), name="frontend")

    return app


def build_app_from_settings(settings: ServiceSettings) -> FastAPI:
    """Load the model file and wire the app; used by the CLI serve command."""
    bundle = load_bundle(settings.model_path)
    store = AssessmentStore(settings.log_path)
    return create_app(bundle, store, frontend_dir=settings.frontend_dir)
