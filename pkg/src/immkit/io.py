"""Interchange documents: JSON graph/certificate formats and DOT export.

JSON is the single interchange format; DOT is export-only.  Documents are
canonical: vertex ids are dense and listed in order, edges are ``[u, v]``
with ``u < v`` sorted lexicographically, certificate pairs are sorted.
Parsing is strict and reports the location of the first offending element,
so that malformed input fails loudly instead of producing skewed results.
"""

from __future__ import annotations

import json
from typing import Any, Optional

from .graph import (
    BranchA,
    BranchB,
    Graph,
    ProductRole,
    Role,
    SubA,
    SubB,
)
from .certificates import ImmersionCertificate

FORMAT_VERSION = 1

GRAPH_FORMAT = f"immkit-graph/{FORMAT_VERSION}"
CERT_FORMAT = f"immkit-cert/{FORMAT_VERSION}"
VERDICT_FORMAT = f"immkit-verdict/{FORMAT_VERSION}"
METRICS_FORMAT = f"immkit-metrics/{FORMAT_VERSION}"
BOUNDS_FORMAT = f"immkit-bounds/{FORMAT_VERSION}"
AUDIT_FORMAT = f"immkit-audit/{FORMAT_VERSION}"


class DocumentError(ValueError):
    """Malformed interchange document; ``location`` points at the offender."""

    def __init__(self, location: str, message: str) -> None:
        self.location = location
        self.message = message
        super().__init__(f"{location}: {message}")


# --- role codec ---------------------------------------------------------------
#
# Role strings:  "a3" / "b1"      branch vertices (1-based index),
#                "sa(1,3)"        subdivision of the A-part pair {1,3},
#                "sb(2,4)"        subdivision of the B-part pair {2,4},
#                "(a1,b2)"        product pair (components may nest; "_" = untagged),
#                null             untagged vertex.


def role_to_str(role: Optional[Role]) -> Optional[str]:
    if role is None:
        return None
    return _encode_role(role)


def _encode_role(role: Optional[Role]) -> str:
    if role is None:
        return "_"
    if isinstance(role, BranchA):
        return f"a{role.index}"
    if isinstance(role, BranchB):
        return f"b{role.index}"
    if isinstance(role, SubA):
        return f"sa({role.i},{role.j})"
    if isinstance(role, SubB):
        return f"sb({role.i},{role.j})"
    if isinstance(role, ProductRole):
        return f"({_encode_role(role.left)},{_encode_role(role.right)})"
    raise TypeError(f"unknown role {role!r}")


def role_from_str(text: Optional[str]) -> Optional[Role]:
    if text is None:
        return None
    role, rest = _parse_role(text)
    if rest:
        raise ValueError(f"trailing characters {rest!r} in role {text!r}")
    if role is None:
        raise ValueError("top-level role must not be '_' (use null)")
    return role


def _parse_role(text: str) -> tuple[Optional[Role], str]:
    if not text:
        raise ValueError("empty role string")
    if text[0] == "_":
        return None, text[1:]
    if text[0] == "(":
        left, rest = _parse_role(text[1:])
        if not rest.startswith(","):
            raise ValueError(f"expected ',' in product role near {rest!r}")
        right, rest = _parse_role(rest[1:])
        if not rest.startswith(")"):
            raise ValueError(f"expected ')' in product role near {rest!r}")
        return ProductRole(left, right), rest[1:]
    if text[:2] in ("sa", "sb"):
        body, rest = _take_parenthesized(text[2:])
        i_str, _, j_str = body.partition(",")
        i, j = _parse_index(i_str), _parse_index(j_str)
        cls = SubA if text[:2] == "sa" else SubB
        if not i < j:
            raise ValueError(f"subdivision pair must be ordered, got ({i},{j})")
        return cls(i, j), rest
    if text[0] in ("a", "b"):
        digits = _leading_digits(text[1:])
        if not digits:
            raise ValueError(f"missing index in role {text!r}")
        cls = BranchA if text[0] == "a" else BranchB
        return cls(int(digits)), text[1 + len(digits):]
    raise ValueError(f"unrecognized role {text!r}")


def _take_parenthesized(text: str) -> tuple[str, str]:
    if not text.startswith("("):
        raise ValueError(f"expected '(' near {text!r}")
    close = text.find(")")
    if close < 0:
        raise ValueError(f"missing ')' near {text!r}")
    return text[1:close], text[close + 1:]


def _parse_index(text: str) -> int:
    if not text.isdigit():
        raise ValueError(f"expected integer index, got {text!r}")
    return int(text)


def _leading_digits(text: str) -> str:
    k = 0
    while k < len(text) and text[k].isdigit():
        k += 1
    return text[:k]


# --- graph documents -----------------------------------------------------------


def graph_to_doc(g: Graph) -> dict[str, Any]:
    return {
        "format": GRAPH_FORMAT,
        "vertices": [
            {"id": v, "role": role_to_str(g.roles[v])} for v in range(g.vertex_count)
        ],
        "edges": [[u, v] for u, v in g.edges],
    }


def graph_from_doc(doc: Any) -> Graph:
    _require_object(doc, "graph document")
    _check_format(doc, GRAPH_FORMAT)
    vertices = _require_list(doc, "vertices")
    roles: list[Optional[Role]] = []
    for idx, entry in enumerate(vertices):
        loc = f"vertices[{idx}]"
        if not isinstance(entry, dict):
            raise DocumentError(loc, "expected an object with 'id' and 'role'")
        if entry.get("id") != idx:
            raise DocumentError(loc, f"vertex ids must be dense and ordered; expected id {idx}")
        raw_role = entry.get("role")
        if raw_role is not None and not isinstance(raw_role, str):
            raise DocumentError(loc, "role must be a string or null")
        try:
            roles.append(role_from_str(raw_role))
        except ValueError as exc:
            raise DocumentError(loc, str(exc)) from None
    n = len(vertices)
    edges_raw = _require_list(doc, "edges")
    edges: list[tuple[int, int]] = []
    previous = None
    for idx, entry in enumerate(edges_raw):
        loc = f"edges[{idx}]"
        if (
            not isinstance(entry, list)
            or len(entry) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in entry)
        ):
            raise DocumentError(loc, "expected a pair [u, v] of integers")
        u, v = entry
        if u == v:
            raise DocumentError(loc, f"loop ({u},{v})")
        if u > v:
            raise DocumentError(loc, f"endpoints out of order ({u},{v}); smaller id first")
        if not (0 <= u < n and 0 <= v < n):
            raise DocumentError(loc, f"edge ({u},{v}) references an undeclared vertex")
        if previous is not None:
            if (u, v) == previous:
                raise DocumentError(loc, f"duplicate edge ({u},{v})")
            if (u, v) < previous:
                raise DocumentError(loc, "edges must be sorted lexicographically")
        previous = (u, v)
        edges.append((u, v))
    return Graph(n, edges, roles)


# --- certificate documents -------------------------------------------------------


def certificate_to_doc(cert: ImmersionCertificate) -> dict[str, Any]:
    return {
        "format": CERT_FORMAT,
        "k": cert.k,
        "terminals": list(cert.terminals),
        "paths": [
            {"pair": [i, j], "walk": list(cert.paths[(i, j)])}
            for i, j in sorted(cert.paths)
        ],
    }


def certificate_from_doc(doc: Any) -> ImmersionCertificate:
    _require_object(doc, "certificate document")
    _check_format(doc, CERT_FORMAT)
    k = doc.get("k")
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise DocumentError("k", "expected an integer >= 1")
    terminals = _require_list(doc, "terminals")
    if len(terminals) != k or not all(
        isinstance(t, int) and not isinstance(t, bool) for t in terminals
    ):
        raise DocumentError("terminals", f"expected {k} integer vertex ids")
    paths_raw = _require_list(doc, "paths")
    paths: dict[tuple[int, int], tuple[int, ...]] = {}
    previous = None
    for idx, entry in enumerate(paths_raw):
        loc = f"paths[{idx}]"
        if not isinstance(entry, dict):
            raise DocumentError(loc, "expected an object with 'pair' and 'walk'")
        pair = entry.get("pair")
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in pair)
        ):
            raise DocumentError(loc, "pair must be [i, j] of integers")
        i, j = pair
        if not (1 <= i < j <= k):
            raise DocumentError(loc, f"pair ({i},{j}) out of range for k={k}")
        if previous is not None and (i, j) <= previous:
            raise DocumentError(loc, "pairs must be sorted lexicographically without repeats")
        previous = (i, j)
        walk = entry.get("walk")
        if (
            not isinstance(walk, list)
            or not walk
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in walk)
        ):
            raise DocumentError(loc, "walk must be a nonempty list of vertex ids")
        paths[(i, j)] = tuple(walk)
    return ImmersionCertificate(k=k, terminals=tuple(terminals), paths=paths)


# --- shared helpers ------------------------------------------------------------


def _require_object(doc: Any, what: str) -> None:
    if not isinstance(doc, dict):
        raise DocumentError("$", f"expected a JSON object for the {what}")


def _check_format(doc: dict, expected: str) -> None:
    tag = doc.get("format")
    if tag != expected:
        raise DocumentError("format", f"expected {expected!r}, got {tag!r}")


def _require_list(doc: dict, key: str) -> list:
    value = doc.get(key)
    if not isinstance(value, list):
        raise DocumentError(key, "expected an array")
    return value


def dumps(doc: Any) -> str:
    """Canonical rendering used for every emitted document."""
    return json.dumps(doc, indent=2)


def dumps_compact(doc: Any) -> str:
    return json.dumps(doc, separators=(",", ":"))


def load_json(text: str, source: str = "input") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(source, f"invalid JSON: {exc}") from None


# --- DOT export (write-only) ----------------------------------------------------


def graph_to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.vertex_count):
        label = role_to_str(g.roles[v])
        if label is None:
            lines.append(f"  {v};")
        else:
            lines.append(f'  {v} [label="{label}"];')
    for u, v in g.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
