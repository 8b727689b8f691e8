"""Decision problem, score containers and ranking results."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    DuplicateLabel,
    EmptyMatrix,
    NonPositiveValue,
    WeightSumError,
)

WEIGHT_SUM_TOL = 1e-6
# scores closer than this (relative to their magnitude, floor 1) count as tied
TIE_TOL = 1e-9


class Direction(str, Enum):
    MAX = "max"
    MIN = "min"

    @classmethod
    def parse(cls, text: str) -> "Direction":
        key = str(text).strip().lower()
        aliases = {"max": cls.MAX, "maximize": cls.MAX, "benefit": cls.MAX,
                   "min": cls.MIN, "minimize": cls.MIN, "cost": cls.MIN}
        if key not in aliases:
            raise ValueError(f"unknown criterion direction {text!r}")
        return aliases[key]


class Ordering(str, Enum):
    HIGHER_IS_BETTER = "higher"
    LOWER_IS_BETTER = "lower"


class Stage(str, Enum):
    NORMALIZED = "normalized"
    WEIGHTED = "weighted"


class Scheme(str, Enum):
    MAX = "max"
    SUM = "sum"
    VECTOR = "vector"


@dataclass(frozen=True)
class Criterion:
    label: str
    direction: Direction = Direction.MAX
    weight: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "direction", Direction(self.direction))
        object.__setattr__(self, "weight", float(self.weight))


def _frozen_array(values) -> np.ndarray:
    arr = np.array(values, dtype=float)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class DecisionProblem:
    """Alternatives x criteria matrix (the ACM) with per-criterion direction and weight.

    Construction only normalizes container types; invariants are checked by
    :func:`validate_problem`.
    """

    alternatives: tuple[str, ...]
    criteria: tuple[Criterion, ...]
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "alternatives", tuple(str(a) for a in self.alternatives))
        object.__setattr__(self, "criteria", tuple(self.criteria))
        vals = _frozen_array(self.values)
        if vals.ndim == 1 and len(self.criteria) == 1:
            vals = _frozen_array(vals.reshape(-1, 1))
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_lists(cls, alternatives, labels, directions, weights, values) -> "DecisionProblem":
        criteria = tuple(Criterion(lab, Direction.parse(d) if isinstance(d, str) else d, w)
                         for lab, d, w in zip(labels, directions, weights, strict=True))
        return cls(tuple(alternatives), criteria, values)

    @property
    def m(self) -> int:
        return len(self.alternatives)

    @property
    def n(self) -> int:
        return len(self.criteria)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(c.label for c in self.criteria)

    @property
    def weights(self) -> np.ndarray:
        return np.array([c.weight for c in self.criteria])

    @property
    def directions(self) -> tuple[Direction, ...]:
        return tuple(c.direction for c in self.criteria)

    @property
    def is_max(self) -> np.ndarray:
        return np.array([c.direction is Direction.MAX for c in self.criteria])

    def with_weights(self, weights: Sequence[float]) -> "DecisionProblem":
        weights = list(weights)
        if len(weights) != self.n:
            raise DimensionMismatch(f"expected {self.n} weights, got {len(weights)}")
        criteria = tuple(Criterion(c.label, c.direction, float(w))
                         for c, w in zip(self.criteria, weights))
        return DecisionProblem(self.alternatives, criteria, self.values)

    def permuted(self, order: Sequence[int]) -> "DecisionProblem":
        """Same problem with alternative rows reordered."""
        order = list(order)
        return DecisionProblem(tuple(self.alternatives[i] for i in order),
                               self.criteria, self.values[order])

    def __eq__(self, other):
        if not isinstance(other, DecisionProblem):
            return NotImplemented
        return (self.alternatives == other.alternatives
                and self.criteria == other.criteria
                and self.values.shape == other.values.shape
                and bool(np.array_equal(self.values, other.values)))

    __hash__ = None


def validate_problem(problem: DecisionProblem, renormalize: bool = False) -> DecisionProblem:
    """Check the problem's invariants and return it unchanged.

    With ``renormalize=True`` weights that do not sum to one are rescaled
    instead of rejected (they must still be positive).
    """
    values = problem.values
    if problem.m == 0 or problem.n == 0 or values.size == 0:
        raise EmptyMatrix("decision problem needs at least one alternative and one criterion")
    if values.shape != (problem.m, problem.n):
        raise DimensionMismatch(
            f"values have shape {values.shape}, expected ({problem.m}, {problem.n})")
    for kind, labels in (("alternative", problem.alternatives), ("criterion", problem.labels)):
        seen = set()
        for lab in labels:
            if not lab:
                raise DuplicateLabel(f"empty {kind} label")
            if lab in seen:
                raise DuplicateLabel(f"duplicate {kind} label {lab!r}")
            seen.add(lab)
    if not np.all(np.isfinite(values)):
        raise NonPositiveValue("values must be finite")
    bad = np.argwhere(values <= 0)
    if bad.size:
        i, j = bad[0]
        raise NonPositiveValue(
            f"value for {problem.alternatives[i]!r} on {problem.labels[j]!r} is "
            f"{values[i, j]!r}; all values must be strictly positive")
    weights = problem.weights
    if not np.all(np.isfinite(weights)) or np.any(weights <= 0):
        raise WeightSumError("criterion weights must be positive")
    total = float(weights.sum())
    if abs(total - 1.0) > WEIGHT_SUM_TOL:
        if not renormalize:
            raise WeightSumError(f"criterion weights sum to {total!r}, expected 1")
        return problem.with_weights(weights / total)
    if np.any(weights > 1):
        raise WeightSumError("criterion weights must lie in (0, 1]")
    return problem


@dataclass(frozen=True, eq=False)
class ScoreMatrix:
    """Normalized (F) or weighted normalized (v) matrix, tagged with its scheme.

    ``directions`` travels with the matrix: the Sum and Vector schemes leave
    cost columns uninverted and COPRAS/MOORA split on it later.
    """

    stage: Stage
    scheme: Scheme
    values: np.ndarray
    directions: tuple[Direction, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen_array(self.values))
        object.__setattr__(self, "directions", tuple(self.directions))


@dataclass(frozen=True, eq=False)
class RankingResult:
    method: str
    alternatives: tuple[str, ...]
    scores: np.ndarray
    ranks: np.ndarray
    ordering: Ordering
    diagnostics: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "alternatives", tuple(self.alternatives))
        object.__setattr__(self, "scores", _frozen_array(self.scores))
        object.__setattr__(self, "ranks", _frozen_array(self.ranks))
        object.__setattr__(self, "diagnostics", dict(self.diagnostics))

    @property
    def top(self) -> tuple[str, ...]:
        """Labels of the alternative(s) holding the best rank."""
        best = self.ranks.min()
        return tuple(a for a, r in zip(self.alternatives, self.ranks) if r == best)

    def order(self) -> list[list[str]]:
        """Alternatives grouped by rank, best group first; ties keep input order."""
        groups: dict[float, list[str]] = {}
        for a, r in zip(self.alternatives, self.ranks):
            groups.setdefault(float(r), []).append(a)
        return [groups[r] for r in sorted(groups)]

    def ranking_string(self) -> str:
        """Render as ``A3 > A4 > A1 = A2``."""
        return " > ".join(" = ".join(g) for g in self.order())


def _tied(a: float, b: float, tol: float) -> bool:
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def average_ranks(scores, ordering: Ordering = Ordering.HIGHER_IS_BETTER,
                  tie_tol: float = TIE_TOL) -> np.ndarray:
    """Rank 1 for the best score; tied scores share the mean of their positions."""
    scores = np.asarray(scores, dtype=float)
    key = -scores if ordering is Ordering.HIGHER_IS_BETTER else scores
    idx = np.argsort(key, kind="stable")
    ranks = np.empty(len(scores))
    start = 0
    while start < len(idx):
        stop = start + 1
        while stop < len(idx) and _tied(key[idx[stop - 1]], key[idx[stop]], tie_tol):
            stop += 1
        # positions start+1 .. stop, averaged
        ranks[idx[start:stop]] = (start + 1 + stop) / 2.0
        start = stop
    return ranks


def rank_from_scores(scores, ordering: Ordering = Ordering.HIGHER_IS_BETTER, *,
                     method: str = "custom", alternatives: Sequence[str] | None = None,
                     diagnostics: Mapping[str, float] | None = None) -> RankingResult:
    scores = np.asarray(scores, dtype=float)
    if not np.all(np.isfinite(scores)):
        raise ValueError("scores must be finite")
    if alternatives is None:
        alternatives = tuple(f"A{i + 1}" for i in range(len(scores)))
    elif len(alternatives) != len(scores):
        raise DimensionMismatch("one score per alternative expected")
    return RankingResult(method, tuple(alternatives), scores, average_ranks(scores, ordering),
                         Ordering(ordering), diagnostics or {})

