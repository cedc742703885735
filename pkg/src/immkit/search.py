"""Exact clique-immersion search: bounds, certificates, and the sandwich report.

The immersion number of a graph is the largest k for which a clique immersion
of order k exists.  This module computes it by sandwiching: a verified
certificate gives the lower bound, a degree census gives the upper bound, and
a complete backtracking search (delegated to the routing kernel) closes the
gap.  Every certificate the solver emits is re-checked by the independent
verifier in certificates.py before it is returned.

Search-tree layout: the outer level enumerates candidate terminal sets,
restricted to vertices of degree >= k-1 inside a single connected component
(exactly the incidence argument that powers the census bound, turned into
pruning); the inner level packs edge-disjoint paths and lives in the kernel.

Determinism: identical inputs and budgets produce identical reports, with any
number of worker processes.  Parallel runs dispatch whole terminal sets to
workers and then replay the canonical sequential budget accounting over the
collected results, so the accepted outcome is always the one the sequential
order would produce.
"""

from __future__ import annotations

import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, islice
from time import monotonic
from typing import Iterable, Iterator, Optional

from . import kernels
from .certificates import ImmersionCertificate, verify_certificate
from .graph import Graph, GraphError, connected_components

# Deep hosts route long paths; the pure kernel recurses one frame per step.
sys.setrecursionlimit(max(sys.getrecursionlimit(), 100_000))

FOUND = "found"
NONE_EXISTS = "none-exists"
BUDGET_EXHAUSTED = "budget-exhausted"

MAX_DEGREE_BOUND = "max-degree-bound"
DEGREE_CENSUS_BOUND = "degree-census-bound"
EXHAUSTIVE_SEARCH = "exhaustive-search"


@dataclass(frozen=True)
class SearchBudget:
    """Node-expansion cap (deterministic) plus an optional wall-clock net.

    The expansion count is the reproducible budget; a tripped time limit only
    ever downgrades a would-be complete answer to "budget exhausted".
    """

    max_expansions: Optional[int] = None
    time_limit: Optional[float] = None

    def __post_init__(self) -> None:
        if self.max_expansions is not None and self.max_expansions <= 0:
            raise ValueError("max_expansions must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time_limit must be positive")


@dataclass(frozen=True)
class FindOutcome:
    status: str  # FOUND / NONE_EXISTS / BUDGET_EXHAUSTED
    certificate: Optional[ImmersionCertificate]
    expansions: int


@dataclass(frozen=True)
class BoundsReport:
    lower: int
    upper: int
    exact: bool
    upper_provenance: str
    witness: ImmersionCertificate
    expansions: int
    budget_exhausted: bool


def degree_census_upper_bound(g: Graph) -> int:
    """Largest k such that one component has >= k vertices of degree >= k-1.

    Each terminal of a clique immersion of order k needs k-1 edge-disjoint
    paths leaving it, hence degree >= k-1, and all terminals share a
    component; so this is an upper bound on the immersion number.  It never
    exceeds max_degree + 1.
    """
    if g.vertex_count == 0:
        raise GraphError("degree census needs a nonempty graph")
    best = 0
    for comp in connected_components(g):
        degs = sorted((g.degree(v) for v in comp), reverse=True)
        k = 0
        while k < len(degs) and degs[k] >= k:
            k += 1
        if k > best:
            best = k
    return best


def greedy_clique(g: Graph) -> tuple[int, ...]:
    """Maximal clique by greedy extension (degree-descending, id tie-break)."""
    order = sorted(range(g.vertex_count), key=lambda v: (-g.degree(v), v))
    chosen: list[int] = []
    for v in order:
        if all(g.has_edge(v, u) for u in chosen):
            chosen.append(v)
    return tuple(chosen)


def clique_certificate(g: Graph, vertices: tuple[int, ...]) -> ImmersionCertificate:
    """Certificate using the clique's own edges as the paths."""
    k = len(vertices)
    paths = {
        (i, j): (vertices[i - 1], vertices[j - 1])
        for i, j in combinations(range(1, k + 1), 2)
    }
    return ImmersionCertificate(k=k, terminals=tuple(vertices), paths=paths)


# --- kernel plumbing ---------------------------------------------------------


def _csr(g: Graph) -> tuple[list[int], list[int], list[int]]:
    edge_index = {e: i for i, e in enumerate(g.edges)}
    indptr = [0]
    nbrs: list[int] = []
    eids: list[int] = []
    for v in range(g.vertex_count):
        for w in g.neighbors(v):
            nbrs.append(w)
            eids.append(edge_index[(v, w) if v < w else (w, v)])
        indptr.append(len(nbrs))
    return indptr, nbrs, eids


def _terminal_sets(g: Graph, k: int) -> Iterator[tuple[int, ...]]:
    """Candidate terminal sets in canonical order.

    Candidates are restricted to vertices of degree >= k-1 within one
    component, ordered degree-descending (id ascending on ties); sets are
    enumerated in lexicographic order over that candidate ranking.
    """
    for comp in connected_components(g):
        cand = sorted(
            (v for v in comp if g.degree(v) >= k - 1),
            key=lambda v: (-g.degree(v), v),
        )
        if len(cand) >= k:
            yield from combinations(cand, k)


def _route_task(args):
    (backend_name, n, indptr, nbrs, eids, m, terminals, pairs, budget, deadline) = args
    backend = kernels.get_backend(backend_name)
    return backend.route_pairs(
        n, indptr, nbrs, eids, m, terminals, pairs, budget, deadline
    )


def _certificate_from_walks(
    terminals: tuple[int, ...], pairs: list[tuple[int, int]], walks: list[list[int]]
) -> ImmersionCertificate:
    paths = {
        (a + 1, b + 1): tuple(walk) for (a, b), walk in zip(pairs, walks)
    }
    return ImmersionCertificate(k=len(terminals), terminals=terminals, paths=paths)


def find_clique_immersion(
    g: Graph,
    k: int,
    budget: Optional[SearchBudget] = None,
    jobs: int = 1,
    backend: Optional[str] = None,
    _executor: Optional[ProcessPoolExecutor] = None,
    _deadline: Optional[float] = None,
) -> FindOutcome:
    """Search for a clique immersion of order ``k``.

    FOUND comes with a certificate that has already passed the independent
    verifier.  NONE_EXISTS means the search over all terminal sets and all
    edge-disjoint routings completed.  BUDGET_EXHAUSTED is inconclusive.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    backend_name = backend or "auto"
    max_exp = budget.max_expansions if budget else None
    if _deadline is not None:
        deadline = _deadline
    elif budget is not None and budget.time_limit is not None:
        deadline = monotonic() + budget.time_limit
    else:
        deadline = None
    indptr, nbrs, eids = _csr(g)
    m = g.edge_count
    pairs = [(a, b) for a in range(k) for b in range(a + 1, k)]
    tasks = _terminal_sets(g, k)

    used = 0

    def finish(terminals, walks, expansions):
        cert = _certificate_from_walks(terminals, pairs, walks)
        verdict = verify_certificate(g, cert)
        if not verdict.accepted:  # solver never self-certifies
            raise AssertionError(
                f"internal error: solver produced an invalid certificate: {verdict}"
            )
        return FindOutcome(FOUND, cert, expansions)

    if jobs > 1:
        own_executor = _executor is None
        executor = _executor or ProcessPoolExecutor(max_workers=jobs)
        try:
            while True:
                batch = list(islice(tasks, 4 * jobs))
                if not batch:
                    break
                remaining_at_start = None if max_exp is None else max_exp - used
                payloads = [
                    (
                        backend_name,
                        g.vertex_count,
                        indptr,
                        nbrs,
                        eids,
                        m,
                        list(terminals),
                        pairs,
                        remaining_at_start,
                        deadline,
                    )
                    for terminals in batch
                ]
                results = list(executor.map(_route_task, payloads))
                for terminals, (status, walks, expansions) in zip(batch, results):
                    remaining = None if max_exp is None else max_exp - used
                    if remaining is not None and expansions > remaining:
                        # The canonical sequential run exhausts inside this task.
                        return FindOutcome(BUDGET_EXHAUSTED, None, max_exp + 1)
                    used += expansions
                    if status == 0:
                        return finish(tuple(terminals), walks, used)
                    if status in (2, 3):
                        return FindOutcome(BUDGET_EXHAUSTED, None, used)
        finally:
            if own_executor:
                executor.shutdown()
        return FindOutcome(NONE_EXISTS, None, used)

    for terminals in tasks:
        remaining = None if max_exp is None else max_exp - used
        status, walks, expansions = kernels.get_backend(backend_name).route_pairs(
            g.vertex_count,
            indptr,
            nbrs,
            eids,
            m,
            list(terminals),
            pairs,
            remaining,
            deadline,
        )
        used += expansions
        if status == 0:
            return finish(tuple(terminals), walks, used)
        if status in (2, 3):
            return FindOutcome(BUDGET_EXHAUSTED, None, used)
    return FindOutcome(NONE_EXISTS, None, used)


def immersion_number(
    g: Graph,
    budget: Optional[SearchBudget] = None,
    jobs: int = 1,
    seed_certificates: Iterable[ImmersionCertificate] = (),
    bounds_only: bool = False,
    backend: Optional[str] = None,
) -> BoundsReport:
    """Sandwich the immersion number between a certificate and the census.

    The lower bound starts from a greedy clique (plus any verified seed
    certificates) and is raised by searching k upward; the upper bound is the
    degree census, lowered to k-1 when a complete search refutes k.  The
    report is exact when the two meet.
    """
    if g.vertex_count == 0:
        raise GraphError("immersion number needs a nonempty graph")
    census = degree_census_upper_bound(g)
    witness = clique_certificate(g, greedy_clique(g))
    for cert in seed_certificates:
        if cert.k > witness.k and verify_certificate(g, cert).accepted:
            witness = cert
    lower = witness.k
    upper = census
    provenance = DEGREE_CENSUS_BOUND
    expansions = 0
    exhausted = False

    if not bounds_only and lower < upper:
        executor = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
        deadline = (
            monotonic() + budget.time_limit
            if budget is not None and budget.time_limit is not None
            else None
        )
        try:
            k = lower + 1
            while k <= upper:
                remaining = None
                if budget is not None and budget.max_expansions is not None:
                    remaining = budget.max_expansions - expansions
                    if remaining <= 0:
                        exhausted = True
                        break
                sub_budget = (
                    None if remaining is None else SearchBudget(max_expansions=remaining)
                )
                outcome = find_clique_immersion(
                    g,
                    k,
                    sub_budget,
                    jobs=jobs,
                    backend=backend,
                    _executor=executor,
                    _deadline=deadline,
                )
                expansions += outcome.expansions
                if outcome.status == FOUND:
                    witness = outcome.certificate
                    lower = k
                    k += 1
                elif outcome.status == NONE_EXISTS:
                    upper = k - 1
                    provenance = EXHAUSTIVE_SEARCH
                    break
                else:
                    exhausted = True
                    break
        finally:
            if executor is not None:
                executor.shutdown()

    return BoundsReport(
        lower=lower,
        upper=upper,
        exact=lower == upper,
        upper_provenance=provenance,
        witness=witness,
        expansions=expansions,
        budget_exhausted=exhausted,
    )
