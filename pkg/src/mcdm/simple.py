"""SAW, MEW and WASPAS: aggregation over the Max-normalized matrix."""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .core import DecisionProblem, Ordering, RankingResult, rank_from_scores, validate_problem
from .errors import LambdaOutOfRange
from .normalization import normalize_max

DEFAULT_LAMBDA = 0.5


def saw_scores(problem: DecisionProblem) -> np.ndarray:
    return normalize_max(problem).values @ problem.weights


def mew_scores(problem: DecisionProblem) -> np.ndarray:
    # exp of the weighted log-sum; identical to the product since every F > 0
    return np.exp(np.log(normalize_max(problem).values) @ problem.weights)


def saw(problem: DecisionProblem) -> RankingResult:
    """Simple additive weighting (weighted sum of Max-normalized values)."""
    problem = validate_problem(problem)
    return rank_from_scores(saw_scores(problem), Ordering.HIGHER_IS_BETTER,
                            method="saw", alternatives=problem.alternatives)


def mew(problem: DecisionProblem) -> RankingResult:
    """Multiplicative exponent weighting (weighted product of Max-normalized values)."""
    problem = validate_problem(problem)
    return rank_from_scores(mew_scores(problem), Ordering.HIGHER_IS_BETTER,
                            method="mew", alternatives=problem.alternatives)


def _check_lambda(lam: float) -> float:
    lam = float(lam)
    if not 0.0 <= lam <= 1.0:
        raise LambdaOutOfRange(f"lambda must lie in [0, 1], got {lam!r}")
    return lam


def waspas(problem: DecisionProblem, lam: float = DEFAULT_LAMBDA) -> RankingResult:
    """Blend ``lam * SAW + (1 - lam) * MEW``; ``lam`` is recorded in the diagnostics."""
    lam = _check_lambda(lam)
    problem = validate_problem(problem)
    scores = lam * saw_scores(problem) + (1.0 - lam) * mew_scores(problem)
    return rank_from_scores(scores, Ordering.HIGHER_IS_BETTER, method="waspas",
                            alternatives=problem.alternatives, diagnostics={"lambda": lam})


def waspas_sweep(problem: DecisionProblem, lambdas: Iterable[float]) -> list[RankingResult]:
    lambdas = [_check_lambda(lam) for lam in lambdas]
    if not lambdas:
        return []
    problem = validate_problem(problem)
    additive, multiplicative = saw_scores(problem), mew_scores(problem)
    return [rank_from_scores(lam * additive + (1.0 - lam) * multiplicative,
                             Ordering.HIGHER_IS_BETTER, method="waspas",
                             alternatives=problem.alternatives, diagnostics={"lambda": lam})
            for lam in lambdas]
