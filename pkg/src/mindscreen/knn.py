"""K-nearest-neighbors classifier over normalized feature vectors.

Exact linear-scan search, Euclidean metric. All tie situations are resolved
deterministically: equal distances rank by exemplar index, vote ties go to
the label with the smaller summed distance, and a remaining tie goes to the
smaller label code.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .schema import DisorderLabel


@dataclass(frozen=True)
class NeighborInfo:
    """Diagnostic view of one voting neighbor."""

    distance: float
    label: DisorderLabel


def _as_matrix(vectors) -> np.ndarray:
    rows = [np.asarray(v.values if hasattr(v, "values") else v, dtype=float) for v in vectors]
    if not rows:
        return np.empty((0, 0))
    width = rows[0].shape[0]
    for r in rows:
        if r.shape[0] != width:
            raise ValueError("exemplar vectors must all have the same length")
    return np.vstack(rows)


def _as_vector(x) -> np.ndarray:
    return np.asarray(x.values if hasattr(x, "values") else x, dtype=float)


@dataclass(frozen=True)
class KnnModel:
    k: int
    exemplars: np.ndarray        # (n, d)
    labels: np.ndarray           # (n,) integer codes
    metric: str = "euclidean"

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "metric": self.metric,
            "exemplars": self.exemplars.tolist(),
            "labels": [int(l) for l in self.labels],
        }

    @classmethod
    def from_dict(cls, payload: dict) -> "KnnModel":
        exemplars = np.asarray(payload["exemplars"], dtype=float)
        k = int(payload["k"])
        if not 1 <= k <= len(exemplars):
            raise ValueError(f"k={k} out of range for {len(exemplars)} exemplars")
        return cls(
            k=k,
            exemplars=exemplars,
            labels=np.asarray(payload["labels"], dtype=int),
            metric=payload.get("metric", "euclidean"),
        )


def knn_fit(train: Sequence[tuple], k: int = 3) -> KnnModel:
    """Store the exemplars verbatim; no computation happens before prediction."""
    if not train:
        raise ValueError("cannot fit KNN on an empty training set")
    if not 1 <= k <= len(train):
        raise ValueError(f"k must be in [1, {len(train)}], got {k}")
    X = _as_matrix([x for x, _ in train])
    y = np.asarray([int(label) for _, label in train], dtype=int)
    return KnnModel(k=k, exemplars=X, labels=y)


def euclidean_distance(a, b) -> float:
    va, vb = _as_vector(a), _as_vector(b)
    if va.shape != vb.shape:
        raise ValueError(f"length mismatch: {va.shape[0]} vs {vb.shape[0]}")
    return float(np.sqrt(np.sum((va - vb) ** 2)))


def _vote(distances: np.ndarray, labels: np.ndarray, k: int) -> tuple[int, np.ndarray]:
    # Stable argsort ranks equal distances by exemplar index.
    nearest = np.argsort(distances, kind="stable")[:k]
    votes: dict[int, int] = {}
    summed: dict[int, float] = {}
    for idx in nearest:
        code = int(labels[idx])
        votes[code] = votes.get(code, 0) + 1
        summed[code] = summed.get(code, 0.0) + float(distances[idx])
    top = max(votes.values())
    tied = [code for code, count in votes.items() if count == top]
    winner = min(tied, key=lambda code: (summed[code], code))
    return winner, nearest


def knn_predict(model: KnnModel, x) -> tuple[DisorderLabel, list[NeighborInfo]]:
    """Majority label among the k nearest exemplars, with diagnostics."""
    query = _as_vector(x)
    if query.shape[0] != model.exemplars.shape[1]:
        raise ValueError(f"query has {query.shape[0]} components, model expects {model.exemplars.shape[1]}")
    distances = np.sqrt(np.sum((model.exemplars - query) ** 2, axis=1))
    winner, nearest = _vote(distances, model.labels, model.k)
    diagnostics = [NeighborInfo(float(distances[i]), DisorderLabel(int(model.labels[i]))) for i in nearest]
    return DisorderLabel(winner), diagnostics


def knn_predict_batch(model: KnnModel, queries) -> list[DisorderLabel]:
    """Predict many queries at once; output equals sequential knn_predict calls."""
    Q = _as_matrix(queries)
    if Q.size == 0:
        return []
    # (m, n) distance matrix; fine at the cohort sizes this package targets.
    diff = Q[:, None, :] - model.exemplars[None, :, :]
    distances = np.sqrt(np.sum(diff * diff, axis=2))
    out = []
    for row in distances:
        winner, _ = _vote(row, model.labels, model.k)
        out.append(DisorderLabel(winner))
    return out
