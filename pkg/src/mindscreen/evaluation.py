"""Splits, cross-validation, confusion matrices and the report arithmetic.

Reports follow the standard per-class precision/recall/F1/support layout
with accuracy, macro and support-weighted averages. Zero-denominator
metrics are defined as 0. Display rounding is two decimals, half-up.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from typing import Sequence

import numpy as np

from .dataset import Dataset
from .knn import knn_fit, knn_predict_batch
from .preprocess import fit_preprocessor, transform_dataset
from .schema import LABEL_CODES, DisorderLabel
from .svm import svm_predict_batch, svm_train_multiclass

CLASSIFIER_KINDS = ("knn", "svm")


def round2(x: float) -> float:
    """Two-decimal display rounding, half away from zero."""
    return float(Decimal(repr(x)).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def f1_score(precision: float, recall: float) -> float:
    """Harmonic mean of precision and recall; 0 when both are 0."""
    if precision + recall == 0:
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


@dataclass(frozen=True)
class ConfusionMatrix:
    """3x3 counts indexed (true label, predicted label), class order 1,2,3."""

    counts: tuple[tuple[int, ...], ...]

    @property
    def total(self) -> int:
        return sum(sum(row) for row in self.counts)

    def support(self, code: int) -> int:
        return sum(self.counts[code - 1])

    def predicted_total(self, code: int) -> int:
        return sum(row[code - 1] for row in self.counts)

    def true_positives(self, code: int) -> int:
        return self.counts[code - 1][code - 1]


def confusion(truth: Sequence, predicted: Sequence) -> ConfusionMatrix:
    if len(truth) != len(predicted):
        raise ValueError(f"length mismatch: {len(truth)} truth vs {len(predicted)} predicted")
    if len(truth) == 0:
        raise ValueError("cannot build a confusion matrix from zero samples")
    counts = [[0, 0, 0] for _ in LABEL_CODES]
    for t, p in zip(truth, predicted):
        t, p = int(t), int(p)
        if t not in LABEL_CODES or p not in LABEL_CODES:
            raise ValueError(f"label outside {LABEL_CODES}: ({t}, {p})")
        counts[t - 1][p - 1] += 1
    return ConfusionMatrix(tuple(tuple(row) for row in counts))


@dataclass(frozen=True)
class ClassMetrics:
    label: DisorderLabel
    precision: float
    recall: float
    f1: float
    support: int


@dataclass(frozen=True)
class ClassificationReport:
    per_class: tuple[ClassMetrics, ...]
    accuracy: float
    macro_precision: float
    macro_recall: float
    macro_f1: float
    weighted_precision: float
    weighted_recall: float
    weighted_f1: float
    total_support: int

    def to_dict(self) -> dict:
        return {
            "per_class": [
                {
                    "label": int(m.label),
                    "name": m.label.slug,
                    "precision": m.precision,
                    "recall": m.recall,
                    "f1": m.f1,
                    "support": m.support,
                }
                for m in self.per_class
            ],
            "accuracy": self.accuracy,
            "macro": {"precision": self.macro_precision, "recall": self.macro_recall, "f1": self.macro_f1},
            "weighted": {"precision": self.weighted_precision, "recall": self.weighted_recall, "f1": self.weighted_f1},
            "total_support": self.total_support,
        }

    def to_text(self) -> str:
        """Aligned table: per-class rows, then accuracy and the two averages."""
        rows = [("", "Precision", "Recall", "F1-score", "Support")]
        for m in self.per_class:
            rows.append((str(int(m.label)), f"{round2(m.precision):.2f}",
                         f"{round2(m.recall):.2f}", f"{round2(m.f1):.2f}", str(m.support)))
        rows.append(("Accuracy", "", "", f"{round2(self.accuracy):.2f}", str(self.total_support)))
        rows.append(("Macro avg", f"{round2(self.macro_precision):.2f}",
                     f"{round2(self.macro_recall):.2f}", f"{round2(self.macro_f1):.2f}",
                     str(self.total_support)))
        rows.append(("Weighted avg", f"{round2(self.weighted_precision):.2f}",
                     f"{round2(self.weighted_recall):.2f}", f"{round2(self.weighted_f1):.2f}",
                     str(self.total_support)))
        widths = [max(len(r[i]) for r in rows) for i in range(5)]
        lines = []
        for r in rows:
            cells = [r[0].ljust(widths[0])] + [r[i].rjust(widths[i] + 2) for i in range(1, 5)]
            lines.append("".join(cells).rstrip())
        return "\n".join(lines)


def report(cm: ConfusionMatrix) -> ClassificationReport:
    """Full metric suite from a confusion matrix."""
    if cm.total == 0:
        raise ValueError("empty confusion matrix")
    per_class = []
    for code in LABEL_CODES:
        tp = cm.true_positives(code)
        predicted = cm.predicted_total(code)
        support = cm.support(code)
        precision = tp / predicted if predicted else 0.0
        recall = tp / support if support else 0.0
        per_class.append(ClassMetrics(DisorderLabel(code), precision, recall,
                                      f1_score(precision, recall), support))
    accuracy = sum(cm.true_positives(code) for code in LABEL_CODES) / cm.total
    _, macro, weighted = aggregate([(m.precision, m.recall, m.f1, m.support) for m in per_class])
    return ClassificationReport(
        per_class=tuple(per_class),
        accuracy=accuracy,
        macro_precision=macro[0], macro_recall=macro[1], macro_f1=macro[2],
        weighted_precision=weighted[0], weighted_recall=weighted[1], weighted_f1=weighted[2],
        total_support=cm.total,
    )


def aggregate(per_class: Sequence[tuple[float, float, float, int]]):
    """Macro and support-weighted averages of per-class (P, R, F1, support).

    Returns (accuracy_proxy, macro, weighted) where the accuracy proxy is
    the weighted recall and macro/weighted are (precision, recall, f1)
    triples.
    """
    if not per_class:
        raise ValueError("no per-class metrics to aggregate")
    total = sum(s for _, _, _, s in per_class)
    if total <= 0:
        raise ValueError("total support must be positive")
    k = len(per_class)
    macro = tuple(sum(row[i] for row in per_class) / k for i in range(3))
    weighted = tuple(sum(row[i] * row[3] for row in per_class) / total for i in range(3))
    return weighted[1], macro, weighted


def train_test_split(ds: Dataset, test_fraction: float, seed: int) -> tuple[Dataset, Dataset]:
    """Seeded shuffle, then a disjoint train/test partition."""
    if not 0.0 < test_fraction < 1.0:
        raise ValueError(f"test fraction must be in (0, 1), got {test_fraction}")
    n = len(ds)
    if n < 2:
        raise ValueError("dataset too small to split")
    n_test = int(round(n * test_fraction))
    n_test = min(max(n_test, 1), n - 1)
    perm = np.random.default_rng(seed).permutation(n)
    return ds.subset(perm[n_test:]), ds.subset(perm[:n_test])


@dataclass(frozen=True)
class FoldPlan:
    """Assignment of each record index to one of k folds."""

    k: int
    assignments: tuple[int, ...]
    seed: int

    def fold_indices(self, fold: int) -> list[int]:
        return [i for i, f in enumerate(self.assignments) if f == fold]

    def complement_indices(self, fold: int) -> list[int]:
        return [i for i, f in enumerate(self.assignments) if f != fold]

    def sizes(self) -> list[int]:
        out = [0] * self.k
        for f in self.assignments:
            out[f] += 1
        return out


def kfold_indices(n: int, k: int, seed: int = 42,
                  stratify_labels: Sequence | None = None) -> FoldPlan:
    """Partition 0..n-1 into k folds whose sizes differ by at most one.

    With ``stratify_labels`` the assignment keeps each label spread evenly
    across folds (round-robin per label after a seeded shuffle).
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    if k > n:
        raise ValueError(f"k={k} exceeds the number of records {n}")
    rng = np.random.default_rng(seed)
    assignments = [0] * n
    if stratify_labels is None:
        perm = rng.permutation(n)
        base, extra = divmod(n, k)
        pos = 0
        for fold in range(k):
            size = base + (1 if fold < extra else 0)
            for i in perm[pos:pos + size]:
                assignments[int(i)] = fold
            pos += size
    else:
        if len(stratify_labels) != n:
            raise ValueError("stratify labels length must equal n")
        order = rng.permutation(n)
        fold_cycle = 0
        by_label: dict[int, list[int]] = {}
        for i in order:
            by_label.setdefault(int(stratify_labels[int(i)]), []).append(int(i))
        for label in sorted(by_label):
            for i in by_label[label]:
                assignments[i] = fold_cycle % k
                fold_cycle += 1
    return FoldPlan(k=k, assignments=tuple(assignments), seed=seed)


def _fit_and_predict(train: Dataset, test: Dataset, kind: str, *,
                     knn_k: int = 3, svm_c: float = 1.0, svm_tol: float = 1e-3,
                     svm_max_epochs: int = 10_000, seed: int = 0) -> list[DisorderLabel]:
    pre = fit_preprocessor(train)
    train_vectors = transform_dataset(train, pre)
    test_vectors = transform_dataset(test, pre)
    pairs = list(zip(train_vectors, [r.label for r in train.records]))
    if kind == "knn":
        model = knn_fit(pairs, k=knn_k)
        return knn_predict_batch(model, test_vectors)
    if kind == "svm":
        model = svm_train_multiclass(pairs, C=svm_c, tol=svm_tol,
                                     max_epochs=svm_max_epochs, seed=seed)
        return svm_predict_batch(model, test_vectors)
    raise ValueError(f"unknown classifier kind: {kind!r}")


@dataclass(frozen=True)
class CrossValidationResult:
    kind: str
    fold_reports: tuple[ClassificationReport, ...]
    pooled: ClassificationReport
    mean_weighted_f1: float
    std_weighted_f1: float
    seed: int

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "seed": self.seed,
            "mean_weighted_f1": self.mean_weighted_f1,
            "std_weighted_f1": self.std_weighted_f1,
            "pooled": self.pooled.to_dict(),
            "folds": [r.to_dict() for r in self.fold_reports],
        }


def cross_validate(ds: Dataset, kind: str, k: int = 10, seed: int = 42, *,
                   stratified: bool = False, knn_k: int = 3, svm_c: float = 1.0,
                   svm_tol: float = 1e-3, svm_max_epochs: int = 10_000) -> CrossValidationResult:
    """k-fold evaluation: fit on out-of-fold data, score on the fold."""
    if kind not in CLASSIFIER_KINDS:
        raise ValueError(f"unknown classifier kind: {kind!r}")
    if not ds.is_labeled():
        raise ValueError("cross-validation needs a fully labeled dataset")
    labels = [int(r.label) for r in ds.records]
    plan = kfold_indices(len(ds), k, seed,
                         stratify_labels=labels if stratified else None)
    reports = []
    all_truth: list[DisorderLabel] = []
    all_predictions: list[DisorderLabel] = []
    for fold in range(k):
        train = ds.subset(plan.complement_indices(fold))
        test = ds.subset(plan.fold_indices(fold))
        train_labels = {int(r.label) for r in train.records}
        missing = [c for c in LABEL_CODES if c not in train_labels]
        if missing:
            raise ValueError(f"fold {fold}: training portion is missing labels {missing}")
        predictions = _fit_and_predict(train, test, kind, knn_k=knn_k, svm_c=svm_c,
                                       svm_tol=svm_tol, svm_max_epochs=svm_max_epochs,
                                       seed=_fold_seed(seed, fold))
        truth = [r.label for r in test.records]
        all_truth.extend(truth)
        all_predictions.extend(predictions)
        reports.append(report(confusion(truth, predictions)))
    f1s = [r.weighted_f1 for r in reports]
    mean = sum(f1s) / len(f1s)
    std = math.sqrt(sum((v - mean) ** 2 for v in f1s) / len(f1s))
    pooled = report(confusion(all_truth, all_predictions))
    return CrossValidationResult(kind, tuple(reports), pooled, mean, std, seed)


def _fold_seed(seed: int, fold: int) -> int:
    # Deterministic per-fold seed so folds can run in any order.
    return seed * 1000 + fold


def evaluate_holdout(ds: Dataset, kind: str, test_fraction: float = 0.2, seed: int = 42, *,
                     test_size: int | None = None, knn_k: int = 3, svm_c: float = 1.0,
                     svm_tol: float = 1e-3, svm_max_epochs: int = 10_000) -> ClassificationReport:
    """Single train/test split evaluation.

    ``test_size`` forces an exact evaluation-set size (used to reproduce
    fixed-support reports regardless of the dataset size).
    """
    if not ds.is_labeled():
        raise ValueError("holdout evaluation needs a fully labeled dataset")
    if test_size is not None:
        if not 0 < test_size < len(ds):
            raise ValueError(f"test size must be in (0, {len(ds)}), got {test_size}")
        test_fraction = test_size / len(ds)
    train, test = train_test_split(ds, test_fraction, seed)
    if test_size is not None and len(test) != test_size:
        # Rounding can be off by one; move records between splits to pin the size.
        while len(test) > test_size:
            train = Dataset(train.records + (test.records[-1],), ds.schema)
            test = Dataset(test.records[:-1], ds.schema)
        while len(test) < test_size:
            test = Dataset(test.records + (train.records[-1],), ds.schema)
            train = Dataset(train.records[:-1], ds.schema)
    predictions = _fit_and_predict(train, test, kind, knn_k=knn_k, svm_c=svm_c,
                                   svm_tol=svm_tol, svm_max_epochs=svm_max_epochs, seed=seed)
    return report(confusion([r.label for r in test.records], predictions))


def select_model(reports: dict[str, ClassificationReport]) -> str:
    """Pick the classifier with the best weighted F1.

    Ties break by higher accuracy, then by fixed preference order (knn
    before svm, unknown kinds after).
    """
    if not reports:
        raise ValueError("no reports to select from")

    def preference(kind: str) -> int:
        return CLASSIFIER_KINDS.index(kind) if kind in CLASSIFIER_KINDS else len(CLASSIFIER_KINDS)

    return min(reports, key=lambda kind: (-reports[kind].weighted_f1,
                                          -reports[kind].accuracy,
                                          preference(kind)))
