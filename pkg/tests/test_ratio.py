from fractions import Fraction

import numpy as np
import pytest

from mcdm import apply_weights, copras, criterion_ranks, fuca, moora, normalize_sum, split_sums
from mcdm.core import Ordering
from mcdm.errors import SchemeMismatch
from mcdm.ratio import copras_scores

import oracle
from conftest import SAMPLE, make_problem

IS_MAX = [True, True, False]
W = [0.25, 0.33, 0.42]
CRITERION_RANKS = [[1, 2, 4], [4, 1, 3], [3, 3, 2], [2, 4, 1]]


def test_copras_reference(table81):
    sums = split_sums(apply_weights(normalize_sum(table81), table81.weights))
    np.testing.assert_allclose(sums.s_plus, [0.1667, 0.1471, 0.1385, 0.1277], atol=5e-4)
    np.testing.assert_allclose(sums.s_minus, [0.1672, 0.1283, 0.0641, 0.0604], atol=5e-4)
    assert sums.g == 2
    r = copras(table81)
    np.testing.assert_allclose(r.scores, [0.2214, 0.2183, 0.2813, 0.2790], atol=5e-4)
    np.testing.assert_allclose(r.scores, oracle.copras(SAMPLE, W, IS_MAX), atol=1e-12)
    assert r.ranking_string() == "A3 > A4 > A1 > A2"


def test_copras_all_benefit_is_s_plus():
    p = make_problem([[1, 2], [3, 4]], ["max", "max"], [0.5, 0.5])
    sums = split_sums(apply_weights(normalize_sum(p), p.weights))
    np.testing.assert_allclose(copras(p).scores, sums.s_plus)


def test_copras_all_cost_prefers_small_values():
    p = make_problem([[1, 2], [3, 4], [2, 2]], ["min", "min"], [0.5, 0.5])
    r = copras(p)
    assert r.top == ("A1",)
    np.testing.assert_allclose(r.scores, oracle.copras([[1, 2], [3, 4], [2, 2]], [0.5, 0.5],
                                                       [False, False]))


def test_split_sums_needs_weighted_matrix(table81):
    with pytest.raises(SchemeMismatch):
        split_sums(normalize_sum(table81))


def test_copras_scores_directly():
    from mcdm.ratio import SplitSums

    s = SplitSums(np.array([0.1, 0.2]), np.array([0.1, 0.3]), 1)
    # relative term: 0.4 / (S- * (10 + 10/3))
    expected = np.array([0.1, 0.2]) + 0.4 / (np.array([0.1, 0.3]) * (10 + 10 / 3))
    np.testing.assert_allclose(copras_scores(s, 2), expected)


def test_moora_reference(table81):
    r = moora(table81)
    np.testing.assert_allclose(r.scores, [0.0193, 0.0523, 0.1537, 0.1391], atol=5e-4)
    np.testing.assert_allclose(r.scores, oracle.moora(SAMPLE, W, IS_MAX), atol=1e-12)
    assert r.ranking_string() == "A3 > A4 > A2 > A1"


def test_moora_can_be_negative():
    p = make_problem([[1, 9], [2, 1]], ["max", "min"], [0.5, 0.5])
    assert moora(p).scores[0] < 0


def test_fuca_rank_matrix(table81):
    assert criterion_ranks(table81).tolist() == CRITERION_RANKS


def test_fuca_reference(table81):
    r = fuca(table81)
    exact = oracle.fuca_exact(SAMPLE, W, IS_MAX)
    assert exact == [Fraction("2.59"), Fraction("2.59"), Fraction("2.58"), Fraction("2.24")]
    np.testing.assert_allclose(r.scores, [float(x) for x in exact], atol=1e-9)
    assert r.ordering is Ordering.LOWER_IS_BETTER
    assert r.ranks.tolist() == [3.5, 3.5, 2, 1]
    assert r.ranking_string() == "A4 > A3 > A1 = A2"


def test_fuca_tied_values_share_average_rank():
    p = make_problem([[5, 1], [5, 2], [3, 3]], ["max", "min"], [0.5, 0.5])
    assert criterion_ranks(p)[:, 0].tolist() == [1.5, 1.5, 3]
