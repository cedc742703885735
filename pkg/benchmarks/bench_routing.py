#!/usr/bin/env python3
"""Benchmark the compiled routing kernel against its pure-Python twin.

Both backends run the identical deterministic search, so node-expansion
counts must agree exactly and the wall-clock ratio is the whole story.
Workloads range from easy certificate routings to a multi-million-node
complete refutation (the 5x5 grid has five-vertex degree census 5 but
immersion number 4, so order 5 dies only by exhaustion).

Usage: python benchmarks/bench_routing.py [--repeat N] [--full]
  --full runs the grid refutation to completion (~14M expansions) instead
  of the default 2M-expansion budget slice.
"""

from __future__ import annotations

import argparse
import time
from itertools import combinations

from immkit import BtParams, Graph, build_bt, direct_product
from immkit.kernels import available_backends, get_backend
from immkit.search import _csr, _terminal_sets


def grid(rows: int, cols: int) -> Graph:
    def vid(r, c):
        return r * cols + c

    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((vid(r, c), vid(r, c + 1)))
            if r + 1 < rows:
                edges.append((vid(r, c), vid(r + 1, c)))
    return Graph(rows * cols, edges)


def instances(full: bool):
    yield "bt(7,3): route order 7", build_bt(BtParams(7, 3)), 7, None
    product = direct_product(build_bt(BtParams(4, 2)), build_bt(BtParams(5, 3)))
    yield "bt(4,2) x bt(5,3): route order 10", product, 10, None
    yield "4x4 grid: route order 4", grid(4, 4), 4, None
    cap = None if full else 2_000_000
    label = "full" if full else "2M-expansion slice"
    yield f"5x5 grid: refute order 5 ({label})", grid(5, 5), 5, cap


def run_backend(backend_name: str, g: Graph, k: int, budget, repeat: int):
    backend = get_backend(backend_name)
    indptr, nbrs, eids = _csr(g)
    pairs = [(a, b) for a in range(k) for b in range(a + 1, k)]
    best = None
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        total = 0
        status = 1
        remaining = budget
        for terminals in _terminal_sets(g, k):
            status, _walks, expansions = backend.route_pairs(
                g.vertex_count, indptr, nbrs, eids, g.edge_count,
                list(terminals), pairs, remaining, None,
            )
            total += expansions
            if status == 0 or status >= 2:
                break
            if remaining is not None:
                remaining -= expansions
        elapsed = time.perf_counter() - t0
        best = elapsed if best is None else min(best, elapsed)
        result = (status, total)
    return best, result


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="timing repeats (best-of)")
    parser.add_argument("--full", action="store_true", help="run the heavy refutation uncapped")
    args = parser.parse_args()

    backends = available_backends()
    print(f"backends available: {', '.join(backends)}")
    if "compiled" not in backends:
        print("compiled kernel missing; build it with: pip install -e . --no-build-isolation")
        return

    outcome = {0: "routed", 1: "refuted", 2: "budget"}
    header = f"{'instance':<42} {'outcome':>7} {'expansions':>11} {'pure':>10} {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, g, k, budget in instances(args.full):
        t_pure, res_pure = run_backend("pure", g, k, budget, args.repeat)
        t_comp, res_comp = run_backend("compiled", g, k, budget, args.repeat)
        assert res_pure == res_comp, f"backend divergence on {name}: {res_pure} vs {res_comp}"
        status, expansions = res_pure
        print(
            f"{name:<42} {outcome[status]:>7} {expansions:>11,} "
            f"{t_pure:>9.3f}s {t_comp:>9.3f}s {t_pure / t_comp:>7.1f}x"
        )


if __name__ == "__main__":
    main()
