"""Aggregation-type multi-criteria decision-making: SAW, MEW, AHP, ANP,
COPRAS, MOORA, FUCA and WASPAS over an alternatives x criteria matrix."""

from .ahp import AhpModel, ahp_criteria_weights, ahp_local_priorities, ahp_rank, run_ahp
from .anp import (
    AnpNetwork,
    Cluster,
    InfluenceBlock,
    Supermatrix,
    anp_priorities,
    build_supermatrix,
    node_local_priorities,
)
from .core import (
    Criterion,
    DecisionProblem,
    Direction,
    Ordering,
    RankingResult,
    ScoreMatrix,
    rank_from_scores,
    validate_problem,
)
from .errors import *  # noqa: F401,F403
from .linalg import limit_supermatrix, principal_eigenpair
from .loaders import load_problem
from .normalization import apply_weights, normalize_max, normalize_sum, normalize_vector
from .pairwise import (
    ConsistencyReport,
    PairwiseMatrix,
    acm_to_pairwise,
    build_pairwise,
    consistency,
    priority_vector,
)
from .ratio import copras, criterion_ranks, fuca, moora, split_sums
from .simple import mew, saw, waspas, waspas_sweep

__version__ = "0.1.0"
