"""Column normalization schemes and weight application."""

from __future__ import annotations

import numpy as np

from .core import DecisionProblem, Direction, Scheme, ScoreMatrix, Stage
from .errors import DimensionMismatch, SchemeMismatch


def normalize_max(problem: DecisionProblem) -> ScoreMatrix:
    """Max normalization; cost columns are inverted (min/f) so every column becomes benefit-type."""
    f = problem.values
    out = np.where(problem.is_max, f / f.max(axis=0), f.min(axis=0) / f)
    return ScoreMatrix(Stage.NORMALIZED, Scheme.MAX, out, (Direction.MAX,) * problem.n)


def normalize_sum(problem: DecisionProblem) -> ScoreMatrix:
    f = problem.values
    return ScoreMatrix(Stage.NORMALIZED, Scheme.SUM, f / f.sum(axis=0), problem.directions)


def normalize_vector(problem: DecisionProblem) -> ScoreMatrix:
    f = problem.values
    return ScoreMatrix(Stage.NORMALIZED, Scheme.VECTOR, f / np.sqrt((f ** 2).sum(axis=0)),
                       problem.directions)


NORMALIZERS = {
    Scheme.MAX: normalize_max,
    Scheme.SUM: normalize_sum,
    Scheme.VECTOR: normalize_vector,
}


def apply_weights(normalized: ScoreMatrix, weights) -> ScoreMatrix:
    if normalized.stage is not Stage.NORMALIZED:
        raise SchemeMismatch("weights can only be applied to a normalized matrix")
    weights = np.asarray(weights, dtype=float)
    if weights.shape != (normalized.values.shape[1],):
        raise DimensionMismatch(
            f"{weights.size} weights for {normalized.values.shape[1]} criteria")
    return ScoreMatrix(Stage.WEIGHTED, normalized.scheme, normalized.values * weights,
                       normalized.directions)

