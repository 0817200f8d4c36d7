"""Trained-model bundle: preprocessor + classifier in one JSON envelope.

KNN and SVM model files share the same layout and are told apart by the
``model_kind`` discriminator, so every consumer (CLI, service) loads them
through the same door.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .dataset import Dataset, RespondentRecord
from .errors import ModelFormatError
from .knn import KnnModel, knn_fit, knn_predict
from .preprocess import PreprocessorModel, fit_preprocessor, transform, transform_dataset
from .schema import DisorderLabel
from .svm import MulticlassSvmModel, svm_predict, svm_train_multiclass

FORMAT_VERSION = 1


@dataclass
class ModelBundle:
    kind: str                       # "knn" | "svm"
    preprocessor: PreprocessorModel
    knn: KnnModel | None = None
    svm: MulticlassSvmModel | None = None
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in ("knn", "svm"):
            raise ModelFormatError(f"unknown model kind: {self.kind!r}")
        if self.kind == "knn" and self.knn is None:
            raise ModelFormatError("knn bundle without a knn model")
        if self.kind == "svm" and self.svm is None:
            raise ModelFormatError("svm bundle without an svm model")

    def predict_record(self, record: RespondentRecord) -> tuple[DisorderLabel, dict]:
        """Transform a validated record and classify it."""
        vector = transform(record, self.preprocessor)
        if self.kind == "knn":
            label, neighbors = knn_predict(self.knn, vector)
            diagnostics = {"neighbors": [
                {"distance": nb.distance, "label": int(nb.label)} for nb in neighbors
            ]}
        else:
            label, decisions = svm_predict(self.svm, vector)
            diagnostics = {"decision_values": {str(c): v for c, v in decisions.items()}}
        return label, diagnostics


def train_bundle(train: Dataset, kind: str, *, knn_k: int = 3, svm_c: float = 1.0,
                 svm_tol: float = 1e-3, svm_max_epochs: int = 10_000,
                 seed: int = 42) -> ModelBundle:
    """Fit the preprocessor and the chosen classifier on a labeled dataset."""
    if kind not in ("knn", "svm"):
        raise ValueError(f"unknown classifier kind: {kind!r}")
    if not train.is_labeled():
        raise ValueError("training requires a fully labeled dataset")
    pre = fit_preprocessor(train)
    pairs = list(zip(transform_dataset(train, pre), [r.label for r in train.records]))
    # no timestamps here: identical data + flags + seed must give
    # byte-identical model files
    metadata = {
        "training_rows": len(train),
        "seed": seed,
    }
    if kind == "knn":
        model = knn_fit(pairs, k=knn_k)
        metadata["k"] = knn_k
        return ModelBundle("knn", pre, knn=model, metadata=metadata)
    model = svm_train_multiclass(pairs, C=svm_c, tol=svm_tol,
                                 max_epochs=svm_max_epochs, seed=seed)
    metadata.update({
        "C": svm_c,
        "tol": svm_tol,
        "converged": {str(c): m.converged for c, m in model.binaries.items()},
    })
    return ModelBundle("svm", pre, svm=model, metadata=metadata)


def save_bundle(bundle: ModelBundle, path) -> None:
    payload = {
        "format_version": FORMAT_VERSION,
        "model_kind": bundle.kind,
        "preprocessor": bundle.preprocessor.to_dict(),
        "metadata": bundle.metadata,
        "model": bundle.knn.to_dict() if bundle.kind == "knn" else bundle.svm.to_dict(),
    }
    Path(path).write_text(json.dumps(payload, indent=2), encoding="utf-8")


def load_bundle(path) -> ModelBundle:
    path = Path(path)
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ModelFormatError(f"cannot read model file {path}: {exc}") from exc
    try:
        kind = payload["model_kind"]
        pre = PreprocessorModel.from_dict(payload["preprocessor"])
        metadata = payload.get("metadata", {})
        if kind == "knn":
            return ModelBundle(kind, pre, knn=KnnModel.from_dict(payload["model"]),
                               metadata=metadata)
        if kind == "svm":
            return ModelBundle(kind, pre, svm=MulticlassSvmModel.from_dict(payload["model"]),
                               metadata=metadata)
        raise ModelFormatError(f"unknown model kind: {kind!r}")
    except (KeyError, TypeError, ValueError) as exc:
        raise ModelFormatError(f"malformed model file {path}: {exc}") from exc
