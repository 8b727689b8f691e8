"""Saaty pairwise comparison matrices: construction, priorities, consistency,
and the logarithmic mapping from raw criterion values onto the 1-9 scale."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .core import DecisionProblem
from .errors import (
    DuplicateComparison,
    InconsistentJudgments,
    MissingComparison,
    OrderOutOfRange,
    ScaleViolation,
    ValidationError,
)
from .linalg import principal_eigenpair
from .normalization import normalize_max

SCALE_MIN, SCALE_MAX = 1.0 / 9.0, 9.0
RECIPROCITY_TOL = 1e-9
CR_THRESHOLD = 0.1

# Saaty's random consistency index for n = 1..10
RANDOM_INDEX = (0.0, 0.0, 0.58, 0.90, 1.12, 1.24, 1.32, 1.41, 1.45, 1.49)


class ConsistencyWarning(UserWarning):
    pass


@dataclass(frozen=True, eq=False)
class PairwiseMatrix:
    entries: np.ndarray
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        a = np.array(self.entries, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
            raise ValidationError(f"pairwise matrix must be square and non-empty, got {a.shape}")
        n = a.shape[0]
        labels = tuple(self.labels) or tuple(str(i + 1) for i in range(n))
        if len(labels) != n:
            raise ValidationError(f"{len(labels)} labels for a matrix of order {n}")
        if len(set(labels)) != n:
            raise ValidationError("pairwise matrix labels must be unique")
        if not np.all(np.isfinite(a)) or np.any(a <= 0):
            raise ValidationError("pairwise entries must be finite and positive")
        if np.any(np.diag(a) != 1.0):
            raise ValidationError("diagonal entries of a pairwise matrix must be exactly 1")
        if np.max(np.abs(a * a.T - 1.0)) > RECIPROCITY_TOL:
            raise ValidationError("pairwise matrix is not reciprocal (a_ij * a_ji != 1)")
        _check_scale(a.ravel())
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)
        object.__setattr__(self, "labels", labels)

    @property
    def order(self) -> int:
        return self.entries.shape[0]

    def upper_triangle(self) -> list[tuple[str, str, float]]:
        n = self.order
        return [(self.labels[i], self.labels[j], float(self.entries[i, j]))
                for i in range(n) for j in range(i + 1, n)]


def _check_scale(values) -> None:
    values = np.asarray(values, dtype=float)
    # slack so that 1/9 typed as a rounded decimal or produced by division still passes
    if np.any(values < SCALE_MIN * (1 - 1e-9)) or np.any(values > SCALE_MAX * (1 + 1e-9)):
        bad = values[(values < SCALE_MIN * (1 - 1e-9)) | (values > SCALE_MAX * (1 + 1e-9))][0]
        raise ScaleViolation(f"judgment {bad!r} lies outside the Saaty range [1/9, 9]")


def build_pairwise(comparisons: Iterable[tuple], order: int | None = None,
                   labels: Sequence[str] | None = None) -> PairwiseMatrix:
    """Fill a reciprocal matrix from its upper-triangle judgments.

    ``comparisons`` holds ``(i, j, value)`` triples with 0-based integer
    indices or labels. A triple given with ``i > j`` is read as the lower
    entry and stored as its reciprocal. Every unordered pair must appear
    exactly once.
    """
    comparisons = list(comparisons)
    if labels is not None:
        labels = tuple(labels)
        order = len(labels) if order is None else order
    if order is None:
        raise ValidationError("order or labels must be supplied")
    index = {lab: k for k, lab in enumerate(labels)} if labels else {}

    def resolve(key):
        if isinstance(key, str):
            if key not in index:
                raise ValidationError(f"unknown label {key!r} in comparison")
            return index[key]
        k = int(key)
        if not 0 <= k < order:
            raise ValidationError(f"index {key!r} out of range for order {order}")
        return k

    a = np.ones((order, order))
    seen = set()
    for i, j, value in comparisons:
        i, j, value = resolve(i), resolve(j), float(value)
        if i == j:
            raise ValidationError("a node cannot be compared with itself")
        if i > j:
            i, j, value = j, i, 1.0 / value
        if (i, j) in seen:
            raise DuplicateComparison(f"pair ({i}, {j}) supplied more than once")
        _check_scale([value])
        seen.add((i, j))
        a[i, j] = value
        a[j, i] = 1.0 / value
    missing = [(i, j) for i in range(order) for j in range(i + 1, order) if (i, j) not in seen]
    if missing:
        raise MissingComparison(f"missing judgments for pairs {missing}")
    return PairwiseMatrix(a, labels or ())


def from_weights(weights, labels: Sequence[str] = ()) -> PairwiseMatrix:
    """Perfectly consistent matrix a_ij = w_i / w_j."""
    w = np.asarray(weights, dtype=float)
    a = np.outer(w, 1.0 / w)
    # w_i * (1 / w_i) is not always exactly 1 in floating point
    np.fill_diagonal(a, 1.0)
    return PairwiseMatrix(a, tuple(labels))


def priority_vector(M: PairwiseMatrix):
    """Sum-normalized principal eigenvector and the principal eigenvalue."""
    if M.order == 1:
        return np.ones(1), 1.0
    lam, v = principal_eigenpair(M.entries)
    return v, lam


@dataclass(frozen=True)
class ConsistencyReport:
    lambda_max: float
    ci: float
    ri: float
    cr: float
    acceptable: bool

    def as_dict(self) -> dict:
        return {"lambda_max": self.lambda_max, "ci": self.ci, "ri": self.ri,
                "cr": self.cr, "acceptable": self.acceptable}


def consistency(lambda_max: float, order: int) -> ConsistencyReport:
    if not 1 <= order <= len(RANDOM_INDEX):
        raise OrderOutOfRange(f"random index tabulated for orders 1..10 only, got {order}")
    ri = RANDOM_INDEX[order - 1]
    ci = 0.0 if order == 1 else (lambda_max - order) / (order - 1)
    # RI is zero for n <= 2 and such matrices are always consistent
    cr = 0.0 if order <= 2 else ci / ri
    return ConsistencyReport(float(lambda_max), float(ci), ri, float(cr), cr <= CR_THRESHOLD)


def check_judgments(report: ConsistencyReport, what: str, strict: bool = False) -> None:
    """Warn (or raise under ``strict``) when the consistency ratio exceeds 0.1."""
    if report.acceptable:
        return
    msg = f"{what}: consistency ratio {report.cr:.4f} exceeds {CR_THRESHOLD}"
    if strict:
        raise InconsistentJudgments(msg)
    warnings.warn(msg, ConsistencyWarning, stacklevel=3)


def log_ratio_judgment(ratio: float, r_max: float) -> float:
    """Map a performance ratio >= 1 onto [1, 9]; ``r_max`` maps to 9."""
    return math.log(ratio) / math.log(r_max) * (SCALE_MAX - 1.0) + 1.0


def acm_to_pairwise(problem: DecisionProblem, criterion_index: int) -> PairwiseMatrix:
    """Pairwise matrix of the alternatives under one criterion, from its raw values.

    The column is Max-normalized (cost columns inverted), and each pair is
    scored by the logarithm of its performance ratio relative to the widest
    ratio in the column. A constant column gives the all-ones matrix.
    """
    F = normalize_max(problem).values[:, criterion_index]
    m = len(F)
    r_max = F.max() / F.min()
    a = np.ones((m, m))
    if r_max > 1.0:
        for i in range(m):
            for k in range(m):
                if i != k and F[i] >= F[k]:
                    a[i, k] = log_ratio_judgment(F[i] / F[k], r_max)
                    a[k, i] = 1.0 / a[i, k]
    return PairwiseMatrix(a, problem.alternatives)
