"""Backend parity: the compiled kernel must replay the pure twin exactly."""

import random
from itertools import combinations

import pytest

from immkit import BtParams, Graph, SearchBudget, build_bt, find_clique_immersion, immersion_number
from immkit.kernels import available_backends, get_backend
from immkit.search import _csr

from oracle import random_connected_graph

compiled_available = "compiled" in available_backends()
needs_compiled = pytest.mark.skipif(
    not compiled_available, reason="compiled kernel not built"
)


def kernel_corpus():
    rng = random.Random(2024)
    graphs = [
        build_bt(BtParams(4, 2)),
        build_bt(BtParams(5, 2)),
        Graph(5, [(i, (i + 1) % 5) for i in range(5)]),
        Graph(6, list(combinations(range(6), 2))),
        Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
    ]
    graphs += [random_connected_graph(rng, rng.randint(3, 7), 0.5) for _ in range(10)]
    return graphs


def test_backend_selection():
    assert get_backend("pure").BACKEND_NAME == "pure"
    if compiled_available:
        assert get_backend("compiled").BACKEND_NAME == "compiled"
        assert get_backend(None) is get_backend("compiled")
    with pytest.raises(ValueError):
        get_backend("quantum")


def test_env_override(monkeypatch):
    monkeypatch.setenv("IMMKIT_BACKEND", "pure")
    assert get_backend(None).BACKEND_NAME == "pure"


@needs_compiled
def test_route_pairs_parity_across_backends():
    for g in kernel_corpus():
        indptr, nbrs, eids = _csr(g)
        n, m = g.vertex_count, g.edge_count
        for k in range(2, min(n, 6) + 1):
            terminals = list(range(k))
            pairs = [(a, b) for a in range(k) for b in range(a + 1, k)]
            res_c = get_backend("compiled").route_pairs(
                n, indptr, nbrs, eids, m, terminals, pairs, None, None
            )
            res_p = get_backend("pure").route_pairs(
                n, indptr, nbrs, eids, m, terminals, pairs, None, None
            )
            assert res_c == res_p, (g.edges, k)


@needs_compiled
def test_route_pairs_parity_under_budget():
    g = build_bt(BtParams(6, 3))
    indptr, nbrs, eids = _csr(g)
    terminals = list(range(6))
    pairs = [(a, b) for a in range(6) for b in range(a + 1, 6)]
    for budget in [0, 1, 5, 17, 100, 10_000]:
        res_c = get_backend("compiled").route_pairs(
            g.vertex_count, indptr, nbrs, eids, g.edge_count, terminals, pairs, budget, None
        )
        res_p = get_backend("pure").route_pairs(
            g.vertex_count, indptr, nbrs, eids, g.edge_count, terminals, pairs, budget, None
        )
        assert res_c == res_p, budget


@needs_compiled
def test_full_solver_parity_across_backends():
    for g in kernel_corpus():
        rep_c = immersion_number(g, backend="compiled")
        rep_p = immersion_number(g, backend="pure")
        assert rep_c == rep_p, g.edges


@needs_compiled
def test_find_parity_with_budgets():
    g = build_bt(BtParams(5, 2))
    for cap in [3, 30, 300]:
        out_c = find_clique_immersion(g, 5, SearchBudget(max_expansions=cap), backend="compiled")
        out_p = find_clique_immersion(g, 5, SearchBudget(max_expansions=cap), backend="pure")
        assert out_c == out_p, cap
