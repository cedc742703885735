"""Clique-immersion certificates and their verification.

A certificate for a clique immersion of order ``k`` in a host graph names k
terminal vertices (injectively) and, for every unordered pair of terminal
indices, a host path connecting the two terminals; the paths must be pairwise
edge-disjoint.  Terminals may appear as interior vertices of other paths.

The verifier reports every violation, not just the first: certificates are
debugging artifacts and a complete diagnosis beats a fast rejection.  Walks
must be genuine paths (no repeated vertices); closed or self-crossing walks
are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Mapping, Optional

from .construct import BtParams
from .graph import Graph

# Violation kinds, in report order.
NON_INJECTIVE = "non-injective-terminals"
MISSING_PAIR = "missing-pair"
BAD_ENDPOINTS = "bad-endpoints"
NOT_A_PATH = "not-a-path"
REPEATED_VERTEX = "repeated-vertex"
SHARED_EDGE = "shared-edge"


class CertificateError(ValueError):
    """Structurally unusable certificate (bad shape or unknown vertex ids)."""


@dataclass(frozen=True)
class ImmersionCertificate:
    """Witness for a clique immersion of order ``k``.

    ``terminals[i-1]`` is the host vertex for terminal index ``i`` (1-based);
    ``paths`` maps each index pair ``(i, j)`` with ``i < j`` to the vertex
    sequence of its host path.
    """

    k: int
    terminals: tuple[int, ...]
    paths: Mapping[tuple[int, int], tuple[int, ...]]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise CertificateError(f"k must be >= 1, got {self.k}")
        if len(self.terminals) != self.k:
            raise CertificateError(
                f"expected {self.k} terminals, got {len(self.terminals)}"
            )
        for pair, walk in self.paths.items():
            i, j = pair
            if not (1 <= i < j <= self.k):
                raise CertificateError(f"path pair {pair} out of range for k={self.k}")
            if len(walk) < 1:
                raise CertificateError(f"empty walk for pair {pair}")

    def pair_indices(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j in combinations(range(1, self.k + 1), 2)]


@dataclass(frozen=True)
class Violation:
    kind: str
    pairs: tuple[tuple[int, int], ...]
    detail: str


@dataclass(frozen=True)
class VerificationVerdict:
    accepted: bool
    violations: tuple[Violation, ...] = field(default_factory=tuple)


def verify_certificate(g: Graph, cert: ImmersionCertificate) -> VerificationVerdict:
    """Check ``cert`` against ``g`` and report every violation.

    Raises CertificateError when the certificate references vertices that do
    not exist in ``g`` (a structural error, distinct from a negative verdict).
    """
    n = g.vertex_count
    for t in cert.terminals:
        if not (0 <= t < n):
            raise CertificateError(f"terminal vertex {t} not in host graph")
    for pair, walk in cert.paths.items():
        for v in walk:
            if not (0 <= v < n):
                raise CertificateError(f"walk vertex {v} (pair {pair}) not in host graph")

    violations: list[Violation] = []

    # Injectivity of the terminal assignment.
    by_vertex: dict[int, list[int]] = {}
    for idx, t in enumerate(cert.terminals, start=1):
        by_vertex.setdefault(t, []).append(idx)
    clashes = {t: idxs for t, idxs in by_vertex.items() if len(idxs) > 1}
    if clashes:
        detail = "; ".join(
            f"terminals {','.join(map(str, idxs))} all map to vertex {t}"
            for t, idxs in sorted(clashes.items())
        )
        violations.append(Violation(NON_INJECTIVE, (), detail))

    # Per-pair path checks, in pair order.
    for pair in cert.pair_indices():
        walk = cert.paths.get(pair)
        if walk is None:
            violations.append(
                Violation(MISSING_PAIR, (pair,), f"no path for terminal pair {pair}")
            )
            continue
        i, j = pair
        want_first, want_last = cert.terminals[i - 1], cert.terminals[j - 1]
        if walk[0] != want_first or walk[-1] != want_last:
            violations.append(
                Violation(
                    BAD_ENDPOINTS,
                    (pair,),
                    f"walk runs {walk[0]}..{walk[-1]}, expected {want_first}..{want_last}",
                )
            )
        bad_steps = [
            (walk[s], walk[s + 1])
            for s in range(len(walk) - 1)
            if not g.has_edge(walk[s], walk[s + 1])
        ]
        if bad_steps:
            steps = ", ".join(f"({u},{v})" for u, v in bad_steps)
            violations.append(
                Violation(NOT_A_PATH, (pair,), f"consecutive vertices not adjacent: {steps}")
            )
        seen: set[int] = set()
        repeats: set[int] = set()
        for v in walk:
            if v in seen:
                repeats.add(v)
            seen.add(v)
        if repeats:
            violations.append(
                Violation(
                    REPEATED_VERTEX,
                    (pair,),
                    f"vertices repeated within the walk: {','.join(map(str, sorted(repeats)))}",
                )
            )

    # Edge-disjointness across all walks (multiset count over every traversal).
    usage: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for pair in sorted(cert.paths):
        walk = cert.paths[pair]
        for s in range(len(walk) - 1):
            u, v = walk[s], walk[s + 1]
            edge = (u, v) if u < v else (v, u)
            if g.has_edge(u, v):
                usage.setdefault(edge, []).append(pair)
    for edge in sorted(e for e, users in usage.items() if len(users) > 1):
        users = usage[edge]
        violations.append(
            Violation(
                SHARED_EDGE,
                tuple(sorted(set(users))),
                f"edge ({edge[0]},{edge[1]}) used {len(users)} times by pairs "
                + ", ".join(map(str, users)),
            )
        )

    return VerificationVerdict(accepted=not violations, violations=tuple(violations))


def canonical_bt_certificate(params: BtParams) -> ImmersionCertificate:
    """The clique immersion of order ``t`` carried by ``build_bt(params)``.

    Terminals are the ``t`` branch vertices.  Same-part terminal pairs use
    their length-2 subdivision path, cross pairs use the direct edge; together
    the walks use every edge of the graph exactly once.
    """
    p, q, t = params.p, params.q, params.t
    # Vertex layout of build_bt: branches 0..t-1, then A-pair and B-pair
    # subdivision vertices in lexicographic pair order.
    sub_a_base = t
    sub_b_base = t + comb(p, 2)
    a_pair_offset = {
        pair: idx for idx, pair in enumerate(combinations(range(1, p + 1), 2))
    }
    b_pair_offset = {
        pair: idx for idx, pair in enumerate(combinations(range(1, q + 1), 2))
    }
    terminals = tuple(range(t))
    paths: dict[tuple[int, int], tuple[int, ...]] = {}
    for i, j in combinations(range(1, t + 1), 2):
        if j <= p:  # both terminals in part A
            s = sub_a_base + a_pair_offset[(i, j)]
            paths[(i, j)] = (i - 1, s, j - 1)
        elif i > p:  # both terminals in part B
            s = sub_b_base + b_pair_offset[(i - p, j - p)]
            paths[(i, j)] = (i - 1, s, j - 1)
        else:  # cross pair: the kept edge
            paths[(i, j)] = (i - 1, j - 1)
    return ImmersionCertificate(k=t, terminals=terminals, paths=paths)
