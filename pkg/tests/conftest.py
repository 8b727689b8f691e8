import sys

import numpy as np
import pytest

from mcdm import DecisionProblem, build_pairwise
from mcdm.loaders import load_problem

SAMPLE = [[0.93, 600, 8.25], [0.51, 700, 6.33], [0.77, 500, 3.16], [0.82, 400, 2.98]]


def make_problem(values, directions, weights, alternatives=None, labels=None):
    values = np.asarray(values, dtype=float)
    m, n = values.shape
    alternatives = alternatives or [f"A{i + 1}" for i in range(m)]
    labels = labels or [f"C{j + 1}" for j in range(n)]
    return DecisionProblem.from_lists(alternatives, labels, directions, weights, values)


def random_problem(rng, m=None, n=None):
    m = m or int(rng.integers(2, 7))
    n = n or int(rng.integers(2, 6))
    values = rng.uniform(0.1, 1000, size=(m, n))
    directions = [("max", "min")[k] for k in rng.integers(0, 2, size=n)]
    w = rng.uniform(0.05, 1, size=n)
    return make_problem(values, directions, w / w.sum())


@pytest.fixture
def table81():
    return make_problem(SAMPLE, ["max", "max", "min"], [0.25, 0.33, 0.42])


@pytest.fixture
def criteria_matrix():
    """Criteria judgments for the reference AHP example: C1 vs C2 = 3, C1 vs C3 = 5, C2 vs C3 = 4."""
    return build_pairwise([(0, 1, 3), (0, 2, 5), (1, 2, 4)], labels=("C1", "C2", "C3"))


@pytest.fixture
def anp_file():
    return load_problem("anp_8_5")


def hierarchy_network(criteria_matrix, alternative_matrices):
    """Goal -> criteria -> alternatives hierarchy written as an ANP network."""
    from mcdm import AnpNetwork, Cluster, InfluenceBlock

    crit = criteria_matrix.labels
    alts = alternative_matrices[0].labels
    blocks = {"G": [InfluenceBlock("Criteria", criteria_matrix)]}
    for label, M in zip(crit, alternative_matrices):
        blocks[label] = [InfluenceBlock("Alternatives", M)]
    clusters = (Cluster("Goal", ("G",)), Cluster("Criteria", crit), Cluster("Alternatives", alts))
    return AnpNetwork(clusters, blocks)


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is not None and acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in acceptance.RESULTS:
            terminalreporter.write_line(line)
