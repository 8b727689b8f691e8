"""COPRAS, MOORA and FUCA: methods that keep benefit and cost criteria apart."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    DecisionProblem,
    Direction,
    Ordering,
    RankingResult,
    ScoreMatrix,
    Stage,
    average_ranks,
    rank_from_scores,
    validate_problem,
)
from .errors import DimensionMismatch, SchemeMismatch
from .normalization import apply_weights, normalize_sum, normalize_vector


@dataclass(frozen=True, eq=False)
class SplitSums:
    s_plus: np.ndarray
    s_minus: np.ndarray
    g: int


def split_sums(weighted: ScoreMatrix, directions=None) -> SplitSums:
    """Row sums of the weighted matrix over benefit columns and over cost columns."""
    if weighted.stage is not Stage.WEIGHTED:
        raise SchemeMismatch("split_sums expects a weighted matrix")
    directions = tuple(Direction(d) for d in (directions or weighted.directions))
    if len(directions) != weighted.values.shape[1]:
        raise DimensionMismatch("one direction per criterion expected")
    benefit = np.array([d is Direction.MAX for d in directions])
    v = weighted.values
    return SplitSums(v[:, benefit].sum(axis=1), v[:, ~benefit].sum(axis=1), int(benefit.sum()))


def copras_scores(sums: SplitSums, n: int) -> np.ndarray:
    if sums.g == n:
        return sums.s_plus.copy()
    s_minus = sums.s_minus
    # total cost mass, redistributed in inverse proportion to each S-
    relative = s_minus.sum() / (s_minus * (1.0 / s_minus).sum())
    return relative if sums.g == 0 else sums.s_plus + relative


def copras(problem: DecisionProblem) -> RankingResult:
    problem = validate_problem(problem)
    weighted = apply_weights(normalize_sum(problem), problem.weights)
    scores = copras_scores(split_sums(weighted), problem.n)
    return rank_from_scores(scores, Ordering.HIGHER_IS_BETTER, method="copras",
                            alternatives=problem.alternatives)


def moora(problem: DecisionProblem) -> RankingResult:
    """Ratio-system MOORA: S+ - S- over the vector-normalized weighted matrix."""
    problem = validate_problem(problem)
    sums = split_sums(apply_weights(normalize_vector(problem), problem.weights))
    return rank_from_scores(sums.s_plus - sums.s_minus, Ordering.HIGHER_IS_BETTER,
                            method="moora", alternatives=problem.alternatives)


def criterion_ranks(problem: DecisionProblem) -> np.ndarray:
    """m x n matrix of per-criterion ranks (1 = best), ties averaged."""
    problem = validate_problem(problem)
    cols = [average_ranks(problem.values[:, j],
                          Ordering.HIGHER_IS_BETTER if c.direction is Direction.MAX
                          else Ordering.LOWER_IS_BETTER, tie_tol=0.0)
            for j, c in enumerate(problem.criteria)]
    return np.column_stack(cols)


def fuca(problem: DecisionProblem) -> RankingResult:
    """Weighted sum of per-criterion ranks; the lowest total wins."""
    problem = validate_problem(problem)
    scores = criterion_ranks(problem) @ problem.weights
    return rank_from_scores(scores, Ordering.LOWER_IS_BETTER, method="fuca",
                            alternatives=problem.alternatives)
