"""Linear soft-margin SVM trained in the dual, plus a one-vs-rest wrapper.

The binary trainer is a sequential pair-optimization solver: it repeatedly
picks two dual variables, solves their restricted subproblem analytically,
and stops once no training point violates the KKT conditions by more than
``tol``. The kernel is always linear, so the weight vector is maintained
incrementally and decisions are plain dot products.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .schema import LABEL_CODES, DisorderLabel

_STEP_EPS = 1e-12        # minimum meaningful change of a dual variable
_BOUND_EPS = 1e-10       # how close to 0/C still counts as "at bound"


@dataclass
class BinarySvmModel:
    """One separating hyperplane: decision(x) = weights . x + bias."""

    weights: np.ndarray
    bias: float
    C: float
    alphas: np.ndarray = field(repr=False)
    epochs: int = 0
    converged: bool = True

    def decision(self, x) -> float:
        v = np.asarray(x.values if hasattr(x, "values") else x, dtype=float)
        return float(self.weights @ v + self.bias)

    def to_dict(self) -> dict:
        return {
            "weights": self.weights.tolist(),
            "bias": self.bias,
            "C": self.C,
            "alphas": self.alphas.tolist(),
            "epochs": self.epochs,
            "converged": self.converged,
        }

    @classmethod
    def from_dict(cls, payload: dict) -> "BinarySvmModel":
        C = float(payload["C"])
        alphas = np.asarray(payload["alphas"], dtype=float)
        if np.any(alphas < 0) or np.any(alphas > C):
            raise ValueError("dual variables must lie in [0, C]")
        return cls(
            weights=np.asarray(payload["weights"], dtype=float),
            bias=float(payload["bias"]),
            C=C,
            alphas=alphas,
            epochs=int(payload["epochs"]),
            converged=bool(payload["converged"]),
        )


def _as_xy(X, y) -> tuple[np.ndarray, np.ndarray]:
    rows = [np.asarray(x.values if hasattr(x, "values") else x, dtype=float) for x in X]
    mat = np.vstack(rows)
    labels = np.asarray(y, dtype=float)
    return mat, labels


def _final_bias(X: np.ndarray, y: np.ndarray, alpha: np.ndarray, w: np.ndarray, C: float) -> float:
    """Average the margin-exact bias over free support vectors.

    Without free support vectors the KKT inequalities of the bound points
    still box the feasible bias into a window; the midpoint of that window
    is the deterministic fallback.
    """
    eps = _BOUND_EPS * max(1.0, C)
    free = (alpha > eps) & (alpha < C - eps)
    t = y - X @ w  # per-point bias that puts the point exactly on the margin
    if np.any(free):
        return float(np.mean(t[free]))
    at_zero = alpha <= eps
    at_c = ~at_zero
    lower = t[(at_zero & (y > 0)) | (at_c & (y < 0))]
    upper = t[(at_zero & (y < 0)) | (at_c & (y > 0))]
    lo = float(np.max(lower)) if lower.size else None
    hi = float(np.min(upper)) if upper.size else None
    if lo is None and hi is None:
        return 0.0
    if lo is None:
        return hi
    if hi is None:
        return lo
    return (lo + hi) / 2.0


def kkt_residuals(X, y, alpha: np.ndarray, w: np.ndarray, b: float, C: float) -> np.ndarray:
    """Per-point violation of the dual optimality conditions (0 = satisfied)."""
    Xm, ym = _as_xy(X, y)
    margin = ym * (Xm @ w + b)
    eps = _BOUND_EPS * max(1.0, C)
    residuals = np.empty(len(ym))
    at_zero = alpha <= eps
    at_c = alpha >= C - eps
    free = ~(at_zero | at_c)
    residuals[at_zero] = np.maximum(0.0, 1.0 - margin[at_zero])
    residuals[at_c & ~at_zero] = np.maximum(0.0, margin[at_c & ~at_zero] - 1.0)
    residuals[free] = np.abs(margin[free] - 1.0)
    return residuals


def svm_train_binary(X, y, C: float = 1.0, tol: float = 1e-3,
                     max_epochs: int = 10_000, seed=0) -> BinarySvmModel:
    """Train one binary soft-margin separator on labels in {-1, +1}.

    Candidate order within each optimization pass is shuffled by a
    generator seeded with ``seed``, so training is reproducible. If the
    solver exhausts ``max_epochs`` the model is still returned, flagged
    with ``converged=False``.
    """
    Xm, ym = _as_xy(X, y)
    n = len(ym)
    if n < 2:
        raise ValueError("need at least two training points")
    if not (np.all(np.isin(ym, (-1.0, 1.0)))):
        raise ValueError("binary labels must be -1 or +1")
    if np.all(ym == ym[0]):
        raise ValueError("training data contains a single class")
    if C <= 0:
        raise ValueError(f"C must be positive, got {C}")

    rng = np.random.default_rng(seed)
    alpha = np.zeros(n)
    w = np.zeros(Xm.shape[1])
    b = 0.0

    def take_step(i: int, j: int) -> bool:
        nonlocal b, w
        if i == j:
            return False
        a1, a2 = alpha[i], alpha[j]
        y1, y2 = ym[i], ym[j]
        e1 = float(w @ Xm[i]) + b - y1
        e2 = float(w @ Xm[j]) + b - y2
        s = y1 * y2
        if s < 0:
            L, H = max(0.0, a2 - a1), min(C, C + a2 - a1)
        else:
            L, H = max(0.0, a1 + a2 - C), min(C, a1 + a2)
        if L >= H:
            return False
        k11 = float(Xm[i] @ Xm[i])
        k12 = float(Xm[i] @ Xm[j])
        k22 = float(Xm[j] @ Xm[j])
        eta = k11 + k22 - 2.0 * k12
        if eta > 0:
            a2_new = a2 + y2 * (e1 - e2) / eta
            a2_new = min(max(a2_new, L), H)
        else:
            # Flat direction: evaluate the subproblem objective at both ends.
            f1 = y1 * (e1 + b) - a1 * k11 - s * a2 * k12
            f2 = y2 * (e2 + b) - s * a1 * k12 - a2 * k22
            L1 = a1 + s * (a2 - L)
            H1 = a1 + s * (a2 - H)
            obj_l = L1 * f1 + L * f2 + 0.5 * L1 * L1 * k11 + 0.5 * L * L * k22 + s * L * L1 * k12
            obj_h = H1 * f1 + H * f2 + 0.5 * H1 * H1 * k11 + 0.5 * H * H * k22 + s * H * H1 * k12
            if obj_l < obj_h - _STEP_EPS:
                a2_new = L
            elif obj_l > obj_h + _STEP_EPS:
                a2_new = H
            else:
                return False
        if abs(a2_new - a2) < _STEP_EPS * (a2_new + a2 + _STEP_EPS):
            return False
        a1_new = a1 + s * (a2 - a2_new)
        a1_new = min(max(a1_new, 0.0), C)
        da1, da2 = a1_new - a1, a2_new - a2
        w += y1 * da1 * Xm[i] + y2 * da2 * Xm[j]
        b1 = b - e1 - y1 * da1 * k11 - y2 * da2 * k12
        b2 = b - e2 - y1 * da1 * k12 - y2 * da2 * k22
        if _BOUND_EPS < a1_new < C - _BOUND_EPS:
            b = b1
        elif _BOUND_EPS < a2_new < C - _BOUND_EPS:
            b = b2
        else:
            b = (b1 + b2) / 2.0
        alpha[i], alpha[j] = a1_new, a2_new
        return True

    def examine(i: int) -> bool:
        e_i = float(w @ Xm[i]) + b - ym[i]
        r = e_i * ym[i]
        if not ((r < -tol and alpha[i] < C) or (r > tol and alpha[i] > 0)):
            return False
        nonbound = np.flatnonzero((alpha > _BOUND_EPS) & (alpha < C - _BOUND_EPS))
        if nonbound.size > 1:
            errors = Xm[nonbound] @ w + b - ym[nonbound]
            j = int(nonbound[np.argmax(np.abs(errors - e_i))])
            if take_step(i, j):
                return True
        if nonbound.size:
            start = rng.integers(nonbound.size)
            for j in np.roll(nonbound, -start):
                if take_step(i, int(j)):
                    return True
        start = rng.integers(n)
        for j in np.roll(np.arange(n), -start):
            if take_step(i, int(j)):
                return True
        return False

    epochs = 0
    converged = False
    examine_all = True
    while epochs < max_epochs:
        epochs += 1
        if examine_all:
            candidates = rng.permutation(n)
        else:
            nonbound = np.flatnonzero((alpha > _BOUND_EPS) & (alpha < C - _BOUND_EPS))
            candidates = rng.permutation(nonbound)
        changed = sum(examine(int(i)) for i in candidates)
        if examine_all:
            if changed == 0:
                # No violations with the running bias; re-check against the
                # bias rule the model will actually ship with.
                b_final = _final_bias(Xm, ym, alpha, w, C)
                if float(np.max(kkt_residuals(Xm, ym, alpha, w, b_final, C), initial=0.0)) <= tol:
                    b = b_final
                    converged = True
                    break
                b = b_final
            else:
                examine_all = False
        elif changed == 0:
            examine_all = True

    if not converged:
        b = _final_bias(Xm, ym, alpha, w, C)

    return BinarySvmModel(weights=w, bias=float(b), C=C, alphas=alpha,
                          epochs=epochs, converged=converged)


def hinge_objective(model: BinarySvmModel, X, y, C: float | None = None) -> float:
    """Primal objective: 0.5 ||w||^2 + C * sum of hinge losses."""
    Xm, ym = _as_xy(X, y)
    C = model.C if C is None else C
    margins = ym * (Xm @ model.weights + model.bias)
    hinge = np.maximum(0.0, 1.0 - margins)
    return float(0.5 * model.weights @ model.weights + C * hinge.sum())


def dual_objective(model: BinarySvmModel, X, y) -> float:
    """Dual objective evaluated from the stored dual variables."""
    Xm, ym = _as_xy(X, y)
    w = (model.alphas * ym) @ Xm
    return float(model.alphas.sum() - 0.5 * w @ w)


def weights_from_duals(model: BinarySvmModel, X, y) -> np.ndarray:
    Xm, ym = _as_xy(X, y)
    return (model.alphas * ym) @ Xm


@dataclass
class MulticlassSvmModel:
    """One-vs-rest ensemble: one binary separator per disorder code."""

    binaries: dict[int, BinarySvmModel]

    def __post_init__(self):
        if sorted(self.binaries) != sorted(LABEL_CODES):
            raise ValueError(f"expected one binary model per label code {LABEL_CODES}")

    def to_dict(self) -> dict:
        return {str(code): model.to_dict() for code, model in sorted(self.binaries.items())}

    @classmethod
    def from_dict(cls, payload: dict) -> "MulticlassSvmModel":
        return cls({int(code): BinarySvmModel.from_dict(m) for code, m in payload.items()})


def svm_train_multiclass(train: Sequence[tuple], C: float = 1.0, tol: float = 1e-3,
                         max_epochs: int = 10_000, seed: int = 0) -> MulticlassSvmModel:
    """Train one binary model per label (that label +1, the rest -1)."""
    if not train:
        raise ValueError("empty training set")
    labels = [int(label) for _, label in train]
    missing = [code for code in LABEL_CODES if code not in labels]
    if missing:
        raise ValueError(f"training data is missing label codes {missing}")
    vectors = [x for x, _ in train]
    binaries = {}
    for code in LABEL_CODES:
        y = [1.0 if l == code else -1.0 for l in labels]
        binaries[code] = svm_train_binary(vectors, y, C=C, tol=tol,
                                          max_epochs=max_epochs, seed=(seed, code))
    return MulticlassSvmModel(binaries)


def svm_predict(model: MulticlassSvmModel, x) -> tuple[DisorderLabel, dict[int, float]]:
    """Argmax of the per-class decision values; ties go to the smaller code."""
    decisions = {code: model.binaries[code].decision(x) for code in sorted(model.binaries)}
    best_code = None
    best_value = -np.inf
    for code in sorted(decisions):
        if decisions[code] > best_value:
            best_code, best_value = code, decisions[code]
    return DisorderLabel(best_code), decisions


def svm_predict_batch(model: MulticlassSvmModel, queries) -> list[DisorderLabel]:
    return [svm_predict(model, x)[0] for x in queries]
