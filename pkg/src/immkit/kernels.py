"""Routing-kernel backend selection.

Two interchangeable kernels exist: a compiled extension (``_routing``, built
from _routing.pyx) and a pure-Python twin (``_routing_py``).  Both implement
the same deterministic search, step for step, so results and node-expansion
counts are identical; the compiled one is just much faster.  The compiled
kernel is preferred when importable.

Set ``IMMKIT_BACKEND=pure`` (or ``compiled``) to force a choice, e.g. for the
benchmark in benchmarks/bench_routing.py.
"""

from __future__ import annotations

import os
from typing import Optional

from . import _routing_py

try:
    from . import _routing as _routing_ext
except ImportError:  # extension not built; the pure twin carries the load
    _routing_ext = None


def available_backends() -> tuple[str, ...]:
    if _routing_ext is not None:
        return ("compiled", "pure")
    return ("pure",)


def get_backend(name: Optional[str] = None):
    """Resolve a backend module exposing ``route_pairs``.

    ``name`` may be "compiled", "pure" or None/"auto" (environment override
    via IMMKIT_BACKEND, then the compiled kernel when available).
    """
    if name is None or name == "auto":
        name = os.environ.get("IMMKIT_BACKEND") or "auto"
    if name == "auto":
        return _routing_ext if _routing_ext is not None else _routing_py
    if name == "pure":
        return _routing_py
    if name == "compiled":
        if _routing_ext is None:
            raise RuntimeError("compiled routing kernel is not available")
        return _routing_ext
    raise ValueError(f"unknown backend {name!r}")
