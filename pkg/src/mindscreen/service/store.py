"""Append-only assessment log with idempotent writes and replay.

Every assessment and every consent decision is one JSON line. Re-reading
the file reconstructs the full service state, which is also how duplicate
consents keep being rejected across restarts.
"""

from __future__ import annotations

import json
import secrets
import threading
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path


class UnknownAssessmentError(KeyError):
    pass


class DuplicateConsentError(ValueError):
    pass


@dataclass(frozen=True)
class StoredAssessment:
    assessment_id: str
    answers: dict
    label_code: int
    model_kind: str
    timestamp: str
    idempotency_key: str | None = None


@dataclass(frozen=True)
class ConsentRecord:
    assessment_id: str
    agreed: bool
    timestamp: str


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


class AssessmentStore:
    """Single-writer JSONL persistence for assessments and consents."""

    def __init__(self, log_path):
        self._path = Path(log_path)
        self._lock = threading.Lock()
        self._assessments: dict[str, StoredAssessment] = {}
        self._consents: dict[str, ConsentRecord] = {}
        self._by_key: dict[str, str] = {}
        if self._path.exists():
            self._replay()

    def _replay(self) -> None:
        with self._path.open("r", encoding="utf-8") as handle:
            for line in handle:
                line = line.strip()
                if not line:
                    continue
                event = json.loads(line)
                if event.get("event") == "assessment":
                    stored = StoredAssessment(
                        assessment_id=event["id"],
                        answers=event["answers"],
                        label_code=int(event["label"]),
                        model_kind=event["model_kind"],
                        timestamp=event["timestamp"],
                        idempotency_key=event.get("idempotency_key"),
                    )
                    self._assessments[stored.assessment_id] = stored
                    if stored.idempotency_key:
                        self._by_key[stored.idempotency_key] = stored.assessment_id
                elif event.get("event") == "consent":
                    record = ConsentRecord(event["id"], bool(event["agreed"]), event["timestamp"])
                    self._consents[record.assessment_id] = record

    def _append(self, payload: dict) -> None:
        self._path.parent.mkdir(parents=True, exist_ok=True)
        with self._path.open("a", encoding="utf-8") as handle:
            handle.write(json.dumps(payload, sort_keys=True) + "\n")
            handle.flush()

    def record_assessment(self, answers: dict, label_code: int, model_kind: str,
                          idempotency_key: str | None = None) -> tuple[StoredAssessment, bool]:
        """Persist one assessment; returns (record, created).

        A repeated idempotency key returns the original record without
        writing a second log line.
        """
        with self._lock:
            if idempotency_key and idempotency_key in self._by_key:
                return self._assessments[self._by_key[idempotency_key]], False
            stored = StoredAssessment(
                assessment_id=secrets.token_hex(16),
                answers=dict(answers),
                label_code=int(label_code),
                model_kind=model_kind,
                timestamp=_now(),
                idempotency_key=idempotency_key,
            )
            self._append({
                "event": "assessment",
                "id": stored.assessment_id,
                "timestamp": stored.timestamp,
                "answers": stored.answers,
                "label": stored.label_code,
                "model_kind": stored.model_kind,
                **({"idempotency_key": idempotency_key} if idempotency_key else {}),
            })
            self._assessments[stored.assessment_id] = stored
            if idempotency_key:
                self._by_key[idempotency_key] = stored.assessment_id
            return stored, True

    def get(self, assessment_id: str) -> StoredAssessment:
        try:
            return self._assessments[assessment_id]
        except KeyError:
            raise UnknownAssessmentError(assessment_id) from None

    def record_consent(self, assessment_id: str, agreed: bool) -> ConsentRecord:
        with self._lock:
            if assessment_id not in self._assessments:
                raise UnknownAssessmentError(assessment_id)
            if assessment_id in self._consents:
                raise DuplicateConsentError(assessment_id)
            record = ConsentRecord(assessment_id, bool(agreed), _now())
            self._append({
                "event": "consent",
                "id": record.assessment_id,
                "timestamp": record.timestamp,
                "agreed": record.agreed,
            })
            self._consents[assessment_id] = record
            return record

    def consent_for(self, assessment_id: str) -> ConsentRecord | None:
        return self._consents.get(assessment_id)

    @property
    def assessments(self) -> dict[str, StoredAssessment]:
        return dict(self._assessments)

    def __len__(self) -> int:
        return len(self._assessments)
