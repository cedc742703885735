"""Core graph representation and structural computations.

Graphs are loopless, simple and undirected, with dense integer vertex ids
``0..n-1`` fixed at construction.  Vertices may carry a structural role tag
(branch vertex, subdivision vertex, product pair) that downstream code uses
to address constructed vertices deterministically; roles never participate
in equality of vertices or edges.

All operations in this module are pure functions of their inputs, and Graph
instances are immutable after construction, so everything here is safe for
concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Union


class GraphError(ValueError):
    """Structural violation: loop, parallel edge, unknown vertex, bad input."""


# --- vertex roles -----------------------------------------------------------


@dataclass(frozen=True)
class BranchA:
    """Branch vertex number ``index`` (1-based) in part A of a split clique."""

    index: int


@dataclass(frozen=True)
class BranchB:
    """Branch vertex number ``index`` (1-based) in part B of a split clique."""

    index: int


@dataclass(frozen=True)
class SubA:
    """Subdivision vertex splitting the A-part pair ``{i, j}`` with ``i < j``."""

    i: int
    j: int

    def __post_init__(self) -> None:
        if not self.i < self.j:
            raise GraphError(f"subdivision pair must be ordered, got ({self.i},{self.j})")


@dataclass(frozen=True)
class SubB:
    """Subdivision vertex splitting the B-part pair ``{i, j}`` with ``i < j``."""

    i: int
    j: int

    def __post_init__(self) -> None:
        if not self.i < self.j:
            raise GraphError(f"subdivision pair must be ordered, got ({self.i},{self.j})")


@dataclass(frozen=True)
class ProductRole:
    """Role of a product vertex: the pair of factor roles (None = untagged)."""

    left: Optional["Role"]
    right: Optional["Role"]


Role = Union[BranchA, BranchB, SubA, SubB, ProductRole]


def is_branch_role(role: Optional[Role]) -> bool:
    return isinstance(role, (BranchA, BranchB))


# --- graph ------------------------------------------------------------------


class Graph:
    """Immutable loopless simple graph on vertices ``0..n-1``.

    Edges are stored as lexicographically sorted ``(u, v)`` tuples with
    ``u < v``; adjacency supports ordered neighbor iteration and O(1)
    edge-membership tests.
    """

    __slots__ = ("_n", "_roles", "_edges", "_adj", "_edge_set")

    def __init__(
        self,
        vertex_count: int,
        edges: Iterable[tuple[int, int]],
        roles: Optional[Iterable[Optional[Role]]] = None,
    ) -> None:
        if vertex_count < 0:
            raise GraphError(f"vertex count must be nonnegative, got {vertex_count}")
        self._n = vertex_count
        if roles is None:
            self._roles: tuple[Optional[Role], ...] = (None,) * vertex_count
        else:
            self._roles = tuple(roles)
            if len(self._roles) != vertex_count:
                raise GraphError(
                    f"got {len(self._roles)} roles for {vertex_count} vertices"
                )
        normalized = []
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphError(f"edge ({u},{v}) has an undeclared endpoint")
            normalized.append((u, v) if u < v else (v, u))
        edge_set = frozenset(normalized)
        if len(edge_set) != len(normalized):
            seen = set()
            for e in normalized:
                if e in seen:
                    raise GraphError(f"duplicate edge ({e[0]},{e[1]})")
                seen.add(e)
        self._edges = tuple(sorted(edge_set))
        self._edge_set = edge_set
        adj: list[list[int]] = [[] for _ in range(vertex_count)]
        for u, v in self._edges:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = tuple(tuple(sorted(nbrs)) for nbrs in adj)

    # -- basic accessors

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def roles(self) -> tuple[Optional[Role], ...]:
        return self._roles

    def role(self, v: int) -> Optional[Role]:
        self._check_vertex(v)
        return self._roles[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        """Number of edges incident with ``v``."""
        self._check_vertex(v)
        return len(self._adj[v])

    def max_degree(self) -> int:
        if self._n == 0:
            return 0
        return max(len(nbrs) for nbrs in self._adj)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_set

    def _check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self._n):
            raise GraphError(f"unknown vertex {v!r}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self._n == other._n
            and self._roles == other._roles
            and self._edges == other._edges
        )

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.edge_count})"


# --- component / bipartition results ----------------------------------------


@dataclass(frozen=True)
class Bipartition:
    """Canonical 2-coloring: every edge has one endpoint in each part.

    ``left`` contains the smallest vertex id of every component.
    """

    left: tuple[int, ...]
    right: tuple[int, ...]


@dataclass(frozen=True)
class OddCycleWitness:
    """Closed walk of odd length proving the graph is not bipartite."""

    walk: tuple[int, ...]  # walk[0] == walk[-1], odd number of steps


# --- operations -------------------------------------------------------------


def direct_product(g: Graph, h: Graph) -> Graph:
    """Direct (tensor) product: ``(u1,u2) ~ (v1,v2)`` iff ``u1~v1`` and ``u2~v2``.

    Product vertices are the lexicographic pairs ``(x, y)`` in factor order,
    so ``(x, y)`` gets id ``x * h.vertex_count + y``.  Every product vertex is
    tagged with the pair of factor roles.
    """
    hn = h.vertex_count
    roles = [
        ProductRole(g.roles[x], h.roles[y])
        for x in range(g.vertex_count)
        for y in range(hn)
    ]
    edges = []
    for u1, v1 in g.edges:
        for u2, v2 in h.edges:
            edges.append((u1 * hn + u2, v1 * hn + v2))
            edges.append((u1 * hn + v2, v1 * hn + u2))
    return Graph(g.vertex_count * hn, edges, roles)


def product_vertex_id(h: Graph, x: int, y: int) -> int:
    """Id of the product vertex ``(x, y)`` for factors ``(g, h)``."""
    return x * h.vertex_count + y


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Partition into maximal connected vertex sets.

    Parts are internally sorted and listed in order of their smallest vertex.
    """
    seen = bytearray(g.vertex_count)
    parts: list[tuple[int, ...]] = []
    for start in range(g.vertex_count):
        if seen[start]:
            continue
        seen[start] = 1
        queue = [start]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = 1
                    queue.append(w)
        parts.append(tuple(sorted(queue)))
    return parts


def bipartition(g: Graph) -> Union[Bipartition, OddCycleWitness]:
    """Canonical 2-coloring, or an odd closed walk when none exists.

    Within each component the side containing the smallest vertex id goes to
    ``left``.  The witness walk starts and ends at the same vertex and has an
    odd number of steps, with consecutive vertices adjacent.
    """
    n = g.vertex_count
    color = [-1] * n
    parent = [-1] * n
    for start in range(n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = [start]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for w in g.neighbors(v):
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    queue.append(w)
                elif color[w] == color[v]:
                    return OddCycleWitness(_odd_walk(parent, v, w))
    left = tuple(v for v in range(n) if color[v] == 0)
    right = tuple(v for v in range(n) if color[v] == 1)
    return Bipartition(left, right)


def _odd_walk(parent: list[int], u: int, v: int) -> tuple[int, ...]:
    # Walk u -> root -> v over BFS tree edges, then close with the edge (v, u).
    up = [u]
    while parent[up[-1]] >= 0:
        up.append(parent[up[-1]])
    down = [v]
    while parent[down[-1]] >= 0:
        down.append(parent[down[-1]])
    walk = up + list(reversed(down[:-1])) + [u]
    return tuple(walk)
