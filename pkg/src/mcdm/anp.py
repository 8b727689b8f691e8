"""Analytic network process: network model, weighted and limit supermatrices."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Sequence

import numpy as np

from .core import Ordering, rank_from_scores
from .errors import ValidationError, ZeroGoalColumn
from .linalg import limit_supermatrix
from .pairwise import ConsistencyReport, PairwiseMatrix, check_judgments, consistency, priority_vector


@dataclass(frozen=True)
class Cluster:
    label: str
    nodes: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))


@dataclass(frozen=True, eq=False)
class InfluenceBlock:
    """Judgments of a parent node over the child nodes it influences in one cluster.

    The matrix labels name the child nodes.
    """

    cluster: str
    matrix: PairwiseMatrix

    @property
    def children(self) -> tuple[str, ...]:
        return self.matrix.labels


@dataclass(frozen=True, eq=False)
class AnpNetwork:
    clusters: tuple[Cluster, ...]
    influence_blocks: Mapping[str, Sequence[InfluenceBlock]]
    cluster_splits: Mapping[str, Mapping[str, float]] | None = None
    nodes: tuple[str, ...] | None = None

    def __post_init__(self):
        clusters = tuple(self.clusters)
        object.__setattr__(self, "clusters", clusters)
        member_of: dict[str, str] = {}
        for c in clusters:
            for node in c.nodes:
                if node in member_of:
                    raise ValidationError(f"node {node!r} belongs to more than one cluster")
                member_of[node] = c.label
        if len({c.label for c in clusters}) != len(clusters):
            raise ValidationError("cluster labels must be unique")
        nodes = tuple(self.nodes) if self.nodes is not None else tuple(member_of)
        if sorted(nodes) != sorted(member_of) or len(set(nodes)) != len(nodes):
            raise ValidationError("node order must list every clustered node exactly once")
        object.__setattr__(self, "nodes", nodes)

        blocks = {p: tuple(bs) for p, bs in self.influence_blocks.items()}
        splits = {p: dict(s) for p, s in (self.cluster_splits or {}).items()}
        for parent, bs in blocks.items():
            if parent not in member_of:
                raise ValidationError(f"unknown parent node {parent!r}")
            targets = [b.cluster for b in bs]
            if len(set(targets)) != len(targets):
                raise ValidationError(f"parent {parent!r} has two blocks for one cluster")
            for b in bs:
                for child in b.children:
                    if member_of.get(child) != b.cluster:
                        raise ValidationError(
                            f"child {child!r} of {parent!r} is not a node of cluster {b.cluster!r}")
            if parent not in splits:
                if len(bs) > 1:
                    raise ValidationError(
                        f"parent {parent!r} influences several clusters but has no split")
                splits[parent] = {targets[0]: 1.0} if bs else {}
            split = splits[parent]
            if set(split) != set(targets):
                raise ValidationError(
                    f"split of {parent!r} covers {sorted(split)}, blocks cover {sorted(targets)}")
            if bs and (any(w < 0 for w in split.values())
                       or not math.isclose(sum(split.values()), 1.0, abs_tol=1e-9)):
                raise ValidationError(f"cluster split of {parent!r} must be non-negative and sum to 1")
        extra = set(splits) - set(blocks)
        if extra:
            raise ValidationError(f"cluster splits given for parents without blocks: {sorted(extra)}")
        object.__setattr__(self, "influence_blocks", blocks)
        object.__setattr__(self, "cluster_splits", splits)

    def cluster(self, label: str) -> Cluster:
        for c in self.clusters:
            if c.label == label:
                return c
        raise ValidationError(f"unknown cluster {label!r}")


class SupermatrixKind(str, Enum):
    WEIGHTED = "weighted"
    LIMIT = "limit"


@dataclass(frozen=True, eq=False)
class Supermatrix:
    matrix: np.ndarray
    kind: SupermatrixKind
    nodes: tuple[str, ...]

    def column(self, node: str) -> np.ndarray:
        return self.matrix[:, self.nodes.index(node)]


def _block_priorities(parent, network, strict=False):
    weights: dict[str, float] = {}
    reports: dict[str, ConsistencyReport] = {}
    split = network.cluster_splits[parent]
    for block in network.influence_blocks[parent]:
        v, lam = priority_vector(block.matrix)
        if block.matrix.order > 1:
            report = consistency(lam, block.matrix.order)
            check_judgments(report, f"block {parent} -> {block.cluster}", strict)
            reports[block.cluster] = report
        for child, p in zip(block.children, v):
            weights[child] = split[block.cluster] * float(p)
    return weights, reports


def node_local_priorities(parent: str, network: AnpNetwork, strict: bool = False) -> dict[str, float]:
    """Child-node weights of one parent: block priorities scaled by the cluster split."""
    if not network.influence_blocks.get(parent):
        raise ValidationError(f"node {parent!r} has no influence blocks")
    return _block_priorities(parent, network, strict)[0]


def block_consistency(network: AnpNetwork, strict: bool = False) -> dict[tuple[str, str], ConsistencyReport]:
    """Consistency report of every block of order >= 2, keyed by (parent, cluster)."""
    out = {}
    for parent in network.nodes:
        if network.influence_blocks.get(parent):
            for cluster, rep in _block_priorities(parent, network, strict)[1].items():
                out[(parent, cluster)] = rep
    return out


def build_supermatrix(network: AnpNetwork, strict: bool = False) -> Supermatrix:
    index = {node: k for k, node in enumerate(network.nodes)}
    W = np.zeros((len(index), len(index)))
    for parent in network.nodes:
        if network.influence_blocks.get(parent):
            for child, w in _block_priorities(parent, network, strict)[0].items():
                W[index[child], index[parent]] = w
    return Supermatrix(W, SupermatrixKind.WEIGHTED, network.nodes)


def anp_priorities(network: AnpNetwork, goal: str, alternatives_cluster: str, *,
                   absorb_sinks: bool = True, strict: bool = False):
    """Alternative priorities read off the goal column of the limit supermatrix.

    With ``absorb_sinks`` every node other than the goal that influences
    nothing gets a unit self-loop before the limit is taken, the usual
    convention for the bottom level of a hierarchy. Without it a pure
    hierarchy drains to the zero matrix. Networks with no such sinks are
    unaffected.

    Returns ``(ranking, limit_supermatrix)``.
    """
    if goal not in network.nodes:
        raise ValidationError(f"unknown goal node {goal!r}")
    alts = network.cluster(alternatives_cluster).nodes
    if not alts:
        raise ValidationError(f"cluster {alternatives_cluster!r} has no nodes")
    W = build_supermatrix(network, strict).matrix.copy()
    if absorb_sinks:
        for k, node in enumerate(network.nodes):
            if node != goal and not W[:, k].any():
                W[k, k] = 1.0
    limit = Supermatrix(limit_supermatrix(W), SupermatrixKind.LIMIT, network.nodes)
    goal_col = limit.column(goal)
    raw = np.array([goal_col[network.nodes.index(a)] for a in alts])
    total = raw.sum()
    if not total > 1e-12:
        raise ZeroGoalColumn(
            f"goal {goal!r} places no limiting weight on cluster {alternatives_cluster!r}")
    ranking = rank_from_scores(raw / total, Ordering.HIGHER_IS_BETTER, method="anp",
                               alternatives=alts)
    return ranking, limit
