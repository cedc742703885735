"""The split-clique family ``bt``: complete graphs with within-part edges subdivided.

``bt(t, p)`` starts from a complete graph on ``t`` branch vertices split into
parts A (size ``p``) and B (size ``q = t - p``), subdivides exactly once every
edge whose endpoints lie in the same part, and keeps every cross edge.  The
result is connected, bipartite, has maximum degree ``t - 1``, and carries a
clique immersion of order exactly ``t`` (see certificates.canonical_bt_certificate).

Vertex order: the A branches ``a1..ap``, the B branches ``b1..bq``, then the
A-pair subdivision vertices in lexicographic pair order, then the B-pair ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .graph import BranchA, BranchB, Graph, SubA, SubB


@dataclass(frozen=True)
class BtParams:
    """Family parameters: ``t >= 3`` branch vertices, part sizes ``p`` and ``t - p``."""

    t: int
    p: int

    def __post_init__(self) -> None:
        if self.t < 3:
            raise ValueError(f"t must be at least 3, got {self.t}")
        if not (1 <= self.p <= self.t - 1):
            raise ValueError(f"p must satisfy 1 <= p <= t-1, got p={self.p} for t={self.t}")

    @property
    def q(self) -> int:
        return self.t - self.p


@dataclass(frozen=True)
class BtMetrics:
    """Closed-form structure of ``bt(t, p)`` for cross-checking built graphs."""

    vertex_count: int
    edge_count: int
    max_degree: int
    part_a_size: int  # A branches plus B-pair subdivision vertices
    part_b_size: int  # B branches plus A-pair subdivision vertices


def expected_metrics(params: BtParams) -> BtMetrics:
    p, q, t = params.p, params.q, params.t
    return BtMetrics(
        vertex_count=t + comb(p, 2) + comb(q, 2),
        edge_count=p * q + 2 * comb(p, 2) + 2 * comb(q, 2),
        max_degree=t - 1,
        part_a_size=p + comb(q, 2),
        part_b_size=q + comb(p, 2),
    )


def build_bt(params: BtParams) -> Graph:
    """Build the role-labeled graph for ``params``.

    Every branch vertex ends with degree ``t - 1`` and every subdivision
    vertex with degree 2.
    """
    p, q, t = params.p, params.q, params.t
    roles: list = [BranchA(i) for i in range(1, p + 1)]
    roles += [BranchB(j) for j in range(1, q + 1)]

    def a_id(i: int) -> int:  # 1-based branch index
        return i - 1

    def b_id(j: int) -> int:
        return p + j - 1

    edges = [(a_id(i), b_id(j)) for i in range(1, p + 1) for j in range(1, q + 1)]
    for i, j in combinations(range(1, p + 1), 2):
        s = len(roles)
        roles.append(SubA(i, j))
        edges.append((a_id(i), s))
        edges.append((s, a_id(j)))
    for i, j in combinations(range(1, q + 1), 2):
        s = len(roles)
        roles.append(SubB(i, j))
        edges.append((b_id(i), s))
        edges.append((s, b_id(j)))
    return Graph(len(roles), edges, roles)
