import warnings

import numpy as np
import pytest

from mcdm import acm_to_pairwise, build_pairwise, consistency, priority_vector
from mcdm.errors import (
    DuplicateComparison,
    InconsistentJudgments,
    MissingComparison,
    OrderOutOfRange,
    ScaleViolation,
    ValidationError,
)
from mcdm.pairwise import ConsistencyWarning, PairwiseMatrix, check_judgments, from_weights

MAPPED_C1 = [[1, 9.0000, 3.5140, 2.6762], [0.1111, 1, 0.1542, 0.1365],
             [0.2846, 6.4860, 1, 0.5441], [0.3737, 7.3238, 1.8378, 1]]
MAPPED_C2 = [[1, 0.3121, 3.6051, 6.7958], [3.2042, 1, 5.8093, 9.0000],
             [0.2774, 0.1721, 1, 4.1907], [0.1471, 0.1111, 0.2386, 1]]
MAPPED_C3 = [[1, 0.3245, 0.1171, 0.1111], [3.0812, 1, 0.1548, 0.1445],
             [8.5392, 6.4580, 1, 0.6846], [9.0000, 6.9188, 1.4608, 1]]
LOCAL = [[0.5296, 0.2675, 0.0407], [0.0388, 0.5831, 0.0825],
         [0.1741, 0.1086, 0.3908], [0.2575, 0.0409, 0.4859]]
BLOCK_CR = (0.0427, 0.0677, 0.0389)


def test_reference_matrix_is_filled(criteria_matrix):
    np.testing.assert_allclose(criteria_matrix.entries,
                               [[1, 3, 5], [1 / 3, 1, 4], [1 / 5, 1 / 4, 1]])
    assert criteria_matrix.upper_triangle() == [("C1", "C2", 3.0), ("C1", "C3", 5.0),
                                                ("C2", "C3", 4.0)]


def test_reversed_triple_stored_as_reciprocal():
    M = build_pairwise([(1, 0, 3)], order=2)
    assert M.entries[0, 1] == pytest.approx(1 / 3)


@pytest.mark.parametrize("value", [10, 1 / 10, 0.1])
def test_out_of_scale_judgment(value):
    with pytest.raises(ScaleViolation):
        build_pairwise([(0, 1, value)], order=2)


def test_scale_bounds_accepted():
    build_pairwise([(0, 1, 9), (0, 2, 1 / 9), (1, 2, 0.1111111111)], order=3)


def test_missing_and_duplicate_pairs():
    with pytest.raises(MissingComparison):
        build_pairwise([(0, 1, 2)], order=3)
    with pytest.raises(DuplicateComparison):
        build_pairwise([(0, 1, 2), (1, 0, 0.5)], order=2)


def test_unknown_label():
    with pytest.raises(ValidationError):
        build_pairwise([("X", "B", 2)], labels=("A", "B"))


def test_non_reciprocal_matrix_rejected():
    with pytest.raises(ValidationError):
        PairwiseMatrix(np.array([[1, 2], [0.4, 1]]))


def test_order_one():
    v, lam = priority_vector(PairwiseMatrix(np.ones((1, 1))))
    assert v.tolist() == [1.0] and lam == 1.0
    assert consistency(lam, 1).cr == 0.0


def test_two_by_two_always_consistent():
    M = build_pairwise([(0, 1, 7)], order=2)
    v, lam = priority_vector(M)
    np.testing.assert_allclose(v, [7 / 8, 1 / 8], atol=1e-12)
    assert lam == pytest.approx(2.0)
    assert consistency(lam, 2).cr == 0.0


def test_consistent_three_by_three_oracle():
    M = build_pairwise([(0, 1, 5 / 3), (0, 2, 5 / 2), (1, 2, 3 / 2)], order=3)
    v, lam = priority_vector(M)
    np.testing.assert_allclose(v, [0.5, 0.3, 0.2], atol=1e-9)
    assert lam == pytest.approx(3.0, abs=1e-9)
    assert consistency(lam, 3).cr == pytest.approx(0.0, abs=1e-9)


def test_from_weights_roundtrip():
    w = np.array([0.1, 0.2, 0.3, 0.4])
    v, _ = priority_vector(from_weights(w))
    np.testing.assert_allclose(v, w, atol=1e-12)


def test_reference_consistency(criteria_matrix):
    v, lam = priority_vector(criteria_matrix)
    rep = consistency(lam, 3)
    assert rep.lambda_max == pytest.approx(3.0858, abs=1e-4)
    assert rep.ci == pytest.approx(0.0429, abs=1e-4)
    assert rep.cr == pytest.approx(0.0740, abs=1e-4)
    assert rep.acceptable


def test_order_out_of_range():
    with pytest.raises(OrderOutOfRange):
        consistency(11.0, 11)


def test_inconsistent_judgments_warn_or_raise():
    # a > b, b > c, c > a: strongly cyclic
    M = build_pairwise([(0, 1, 9), (1, 2, 9), (0, 2, 1 / 9)], order=3)
    _, lam = priority_vector(M)
    rep = consistency(lam, 3)
    assert not rep.acceptable
    with pytest.warns(ConsistencyWarning):
        check_judgments(rep, "cyclic")
    with pytest.raises(InconsistentJudgments):
        check_judgments(rep, "cyclic", strict=True)


def test_acceptable_judgments_silent(criteria_matrix):
    _, lam = priority_vector(criteria_matrix)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        check_judgments(consistency(lam, 3), "ok", strict=True)


@pytest.mark.parametrize("j, table, atol", [(0, MAPPED_C1, 5e-4), (1, MAPPED_C2, 2e-3),
                                            (2, MAPPED_C3, 5e-4)])
def test_log_mapping_tables(table81, j, table, atol):
    # reference C2 values were computed from 4-decimal normalized inputs, hence the looser bound
    np.testing.assert_allclose(acm_to_pairwise(table81, j).entries, table, atol=atol)


@pytest.mark.parametrize("j", range(3))
def test_log_mapping_local_priorities(table81, j):
    v, lam = priority_vector(acm_to_pairwise(table81, j))
    np.testing.assert_allclose(v, np.array(LOCAL)[:, j], atol=5e-4)
    assert consistency(lam, 4).cr == pytest.approx(BLOCK_CR[j], abs=2e-3)


def test_log_mapping_extremes(table81):
    for j in range(3):
        M = acm_to_pairwise(table81, j).entries
        assert M.max() == pytest.approx(9.0)
        assert M.min() == pytest.approx(1 / 9)


def test_constant_column_gives_ones():
    from conftest import make_problem

    p = make_problem([[2, 1], [2, 3], [2, 5]], ["max", "min"], [0.5, 0.5])
    np.testing.assert_array_equal(acm_to_pairwise(p, 0).entries, np.ones((3, 3)))
