"""Analytic hierarchy process over a Goal -> Criteria -> Alternatives hierarchy."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import DecisionProblem, Ordering, RankingResult, rank_from_scores, validate_problem
from .errors import DimensionMismatch, MissingProblem, ValidationError
from .pairwise import (
    ConsistencyReport,
    PairwiseMatrix,
    acm_to_pairwise,
    check_judgments,
    consistency,
    priority_vector,
)


@dataclass(frozen=True, eq=False)
class AhpModel:
    """Criteria judgments (or fixed weights) plus alternative judgments per criterion.

    ``alternative_matrices=None`` means the matrices are derived from a
    decision problem's raw values with :func:`acm_to_pairwise`.
    """

    criteria_matrix: PairwiseMatrix | None = None
    explicit_weights: tuple[float, ...] | None = None
    alternative_matrices: tuple[PairwiseMatrix, ...] | None = None

    def __post_init__(self):
        if (self.criteria_matrix is None) == (self.explicit_weights is None):
            raise ValidationError(
                "an AHP model needs exactly one of a criteria matrix or explicit weights")
        if self.explicit_weights is not None:
            object.__setattr__(self, "explicit_weights",
                               tuple(float(w) for w in self.explicit_weights))
        if self.alternative_matrices is not None:
            mats = tuple(self.alternative_matrices)
            if len({M.order for M in mats}) > 1:
                raise DimensionMismatch("alternative matrices must share one order")
            if len(mats) != self.n:
                raise DimensionMismatch(
                    f"{len(mats)} alternative matrices for {self.n} criteria")
            object.__setattr__(self, "alternative_matrices", mats)

    @property
    def n(self) -> int:
        if self.criteria_matrix is not None:
            return self.criteria_matrix.order
        return len(self.explicit_weights)


@dataclass(frozen=True, eq=False)
class AhpResult:
    weights: np.ndarray
    criteria_consistency: ConsistencyReport | None
    local: np.ndarray
    local_consistency: tuple[ConsistencyReport, ...]
    ranking: RankingResult
    alternative_matrices: tuple[PairwiseMatrix, ...] = field(default=())


def ahp_criteria_weights(M: PairwiseMatrix, strict: bool = False):
    """Criteria weights from the principal eigenvector, with the consistency report."""
    weights, lam = priority_vector(M)
    report = consistency(lam, M.order)
    check_judgments(report, "criteria comparison matrix", strict)
    return weights, report


def alternative_matrices(model: AhpModel, problem: DecisionProblem | None = None):
    if model.alternative_matrices is not None:
        return model.alternative_matrices
    if problem is None:
        raise MissingProblem("alternative matrices must be derived from a decision problem")
    problem = validate_problem(problem)
    if problem.n != model.n:
        raise DimensionMismatch(f"model has {model.n} criteria, problem has {problem.n}")
    return tuple(acm_to_pairwise(problem, j) for j in range(problem.n))


def ahp_local_priorities(model: AhpModel, problem: DecisionProblem | None = None,
                         strict: bool = False):
    """Local priority matrix (m x n, columns sum to 1) and one consistency report per criterion."""
    mats = alternative_matrices(model, problem)
    columns, reports = [], []
    for j, M in enumerate(mats):
        v, lam = priority_vector(M)
        report = consistency(lam, M.order)
        check_judgments(report, f"alternative comparisons under criterion {j + 1}", strict)
        columns.append(v)
        reports.append(report)
    return np.column_stack(columns), tuple(reports)


def ahp_rank(weights, local, alternatives=None, diagnostics=None) -> RankingResult:
    """Global priorities: local priorities weighted by the criteria weights."""
    weights = np.asarray(weights, dtype=float)
    local = np.asarray(local, dtype=float)
    if local.ndim != 2 or local.shape[1] != weights.size:
        raise DimensionMismatch(
            f"local priorities of shape {local.shape} do not match {weights.size} weights")
    return rank_from_scores(local @ weights, Ordering.HIGHER_IS_BETTER, method="ahp",
                            alternatives=alternatives, diagnostics=diagnostics)


def run_ahp(model: AhpModel, problem: DecisionProblem | None = None,
            strict: bool = False) -> AhpResult:
    if model.criteria_matrix is not None:
        weights, crit_report = ahp_criteria_weights(model.criteria_matrix, strict)
    else:
        weights, crit_report = np.array(model.explicit_weights), None
    mats = alternative_matrices(model, problem)
    local, reports = ahp_local_priorities(
        AhpModel(model.criteria_matrix, model.explicit_weights, mats), strict=strict)
    if problem is not None:
        labels = problem.alternatives
    else:
        labels = mats[0].labels
    diagnostics = {}
    if crit_report is not None:
        diagnostics = {"lambda_max": crit_report.lambda_max, "ci": crit_report.ci,
                       "cr": crit_report.cr}
    ranking = ahp_rank(weights, local, labels, diagnostics)
    return AhpResult(weights, crit_report, local, reports, ranking, mats)

