"""Command-line entry point.

Subcommands: construct / product / cert / verify / im / audit.  JSON is the
single interchange format (DOT is export-only via --dot); machine output goes
to stdout, diagnostics to stderr, and identical invocations produce
byte-identical stdout.

Exit codes: 0 success, 1 negative-but-valid result (rejected certificate,
failed audit, inexact bounds), 2 input error, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from . import __version__, audit as audit_mod, io
from .certificates import canonical_bt_certificate, verify_certificate
from .construct import BtParams, build_bt, expected_metrics
from .graph import Graph, direct_product
from .search import SearchBudget, immersion_number

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

DEFAULT_BUDGET = 10_000_000


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_INPUT


def _read_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise io.DocumentError(path, f"cannot read file: {exc.strerror}") from None
    return io.load_json(text, source=path)


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _emit(doc, out: Optional[str]) -> None:
    text = io.dumps(doc) + "\n"
    if out:
        _write_text(out, text)
    else:
        sys.stdout.write(text)


def _emit_graph(g: Graph, out: Optional[str], dot: Optional[str]) -> None:
    _emit(io.graph_to_doc(g), out)
    if dot:
        _write_text(dot, io.graph_to_dot(g))


# --- subcommand handlers -------------------------------------------------------


def _cmd_construct_bt(args) -> int:
    params = BtParams(args.t, args.p)
    if args.metrics:
        metrics = expected_metrics(params)
        _emit(
            {
                "format": io.METRICS_FORMAT,
                "t": params.t,
                "p": params.p,
                "q": params.q,
                "vertex_count": metrics.vertex_count,
                "edge_count": metrics.edge_count,
                "max_degree": metrics.max_degree,
                "part_a_size": metrics.part_a_size,
                "part_b_size": metrics.part_b_size,
            },
            args.out,
        )
        return EXIT_OK
    _emit_graph(build_bt(params), args.out, args.dot)
    return EXIT_OK


def _cmd_product(args) -> int:
    left = io.graph_from_doc(_read_json(args.left))
    right = io.graph_from_doc(_read_json(args.right))
    _emit_graph(direct_product(left, right), args.out, args.dot)
    return EXIT_OK


def _cmd_cert_bt(args) -> int:
    cert = canonical_bt_certificate(BtParams(args.t, args.p))
    _emit(io.certificate_to_doc(cert), args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    g = io.graph_from_doc(_read_json(args.graph))
    cert = io.certificate_from_doc(_read_json(args.cert))
    verdict = verify_certificate(g, cert)
    _emit(
        {
            "format": io.VERDICT_FORMAT,
            "accepted": verdict.accepted,
            "violations": [
                {
                    "kind": v.kind,
                    "pairs": [list(pair) for pair in v.pairs],
                    "detail": v.detail,
                }
                for v in verdict.violations
            ],
        },
        None,
    )
    return EXIT_OK if verdict.accepted else EXIT_NEGATIVE


def _cmd_im(args) -> int:
    g = io.graph_from_doc(_read_json(args.graph))
    budget = SearchBudget(max_expansions=args.budget)
    report = immersion_number(
        g, budget=budget, jobs=args.jobs, bounds_only=args.bounds_only
    )
    witness_doc = io.certificate_to_doc(report.witness)
    _emit(
        {
            "format": io.BOUNDS_FORMAT,
            "lower": report.lower,
            "upper": report.upper,
            "exact": report.exact,
            "upper_provenance": report.upper_provenance,
            "expansions": report.expansions,
            "budget_exhausted": report.budget_exhausted,
            "witness": witness_doc,
        },
        None,
    )
    if args.emit_cert:
        _write_text(args.emit_cert, io.dumps(witness_doc) + "\n")
    if report.exact:
        return EXIT_OK
    return EXIT_BUDGET if report.budget_exhausted else EXIT_NEGATIVE


def _cmd_audit(args) -> int:
    try:
        params = audit_mod.AuditParams(args.t, args.p, args.r, args.s)
    except audit_mod.HypothesisUnmetError as exc:
        return _fail(str(exc))
    report = audit_mod.audit_counterexample(params)
    if args.json:
        _emit(audit_mod.report_to_doc(report, fmt=io.AUDIT_FORMAT), None)
    else:
        sys.stdout.write(audit_mod.render_narrative(report))
    return EXIT_OK if report.verdict else EXIT_NEGATIVE


def _cmd_audit_sweep(args) -> int:
    if args.tmax < 4:
        return _fail("--tmax must be at least 4 (smallest audited tuple is t=r=4)")
    tuples = audit_mod.sweep_params(args.tmax)
    if args.jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=args.jobs) as executor:
            reports = list(executor.map(audit_mod.audit_counterexample, tuples))
    else:
        reports = [audit_mod.audit_counterexample(p) for p in tuples]
    all_confirmed = True
    for report in reports:
        doc = audit_mod.report_to_doc(report, fmt=io.AUDIT_FORMAT)
        sys.stdout.write(io.dumps_compact(doc) + "\n")
        all_confirmed = all_confirmed and report.verdict
    return EXIT_OK if all_confirmed else EXIT_NEGATIVE


# --- parser --------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="immkit",
        description=(
            "Exact toolkit for clique immersions in direct products of graphs: "
            "build the split-clique family, take products, emit and verify "
            "immersion certificates, bound immersion numbers, and audit the "
            "product lower-bound claim."
        ),
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"immkit {__version__} (document formats v{io.FORMAT_VERSION})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser("construct", help="build a named graph family")
    construct_sub = construct.add_subparsers(dest="family", required=True)
    bt = construct_sub.add_parser("bt", help="split clique: within-part edges subdivided")
    bt.add_argument("--t", type=int, required=True, help="number of branch vertices")
    bt.add_argument("--p", type=int, required=True, help="size of part A")
    bt.add_argument("--metrics", action="store_true", help="emit closed-form metrics instead")
    bt.add_argument("--out", metavar="FILE", help="write the document here instead of stdout")
    bt.add_argument("--dot", metavar="FILE", help="also export DOT for visualization")
    bt.set_defaults(handler=_cmd_construct_bt)

    product = sub.add_parser("product", help="direct (tensor) product of two graphs")
    product.add_argument("--left", metavar="FILE", required=True)
    product.add_argument("--right", metavar="FILE", required=True)
    product.add_argument("--out", metavar="FILE")
    product.add_argument("--dot", metavar="FILE")
    product.set_defaults(handler=_cmd_product)

    cert = sub.add_parser("cert", help="emit a canonical immersion certificate")
    cert_sub = cert.add_subparsers(dest="family", required=True)
    cert_bt = cert_sub.add_parser("bt", help="order-t certificate carried by construct bt")
    cert_bt.add_argument("--t", type=int, required=True)
    cert_bt.add_argument("--p", type=int, required=True)
    cert_bt.add_argument("--out", metavar="FILE")
    cert_bt.set_defaults(handler=_cmd_cert_bt)

    verify = sub.add_parser("verify", help="check a certificate against a graph")
    verify.add_argument("--graph", metavar="FILE", required=True)
    verify.add_argument("--cert", metavar="FILE", required=True)
    verify.set_defaults(handler=_cmd_verify)

    im = sub.add_parser("im", help="bound (and usually pin) the immersion number")
    im.add_argument("--graph", metavar="FILE", required=True)
    im.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_BUDGET,
        help=f"search node-expansion budget (default {DEFAULT_BUDGET})",
    )
    im.add_argument("--bounds-only", action="store_true", help="skip the search, report bounds")
    im.add_argument("--emit-cert", metavar="FILE", help="write the witness certificate here")
    im.add_argument("--jobs", type=int, default=1, help="worker processes (same output)")
    im.set_defaults(handler=_cmd_im)

    audit = sub.add_parser("audit", help="audit the product bound for one parameter tuple")
    audit.add_argument("--t", type=int, required=True)
    audit.add_argument("--p", type=int, required=True)
    audit.add_argument("--r", type=int, required=True)
    audit.add_argument("--s", type=int, required=True)
    audit.add_argument("--json", action="store_true", help="emit the report as JSON")
    audit.set_defaults(handler=_cmd_audit)

    sweep = sub.add_parser("audit-sweep", help="audit every tuple with t, r <= tmax")
    sweep.add_argument("--tmax", type=int, required=True)
    sweep.add_argument("--jobs", type=int, default=1, help="worker processes (same output)")
    sweep.set_defaults(handler=_cmd_audit_sweep)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    # `audit sweep ...` is the documented spelling of the audit-sweep command.
    if argv[:2] == ["audit", "sweep"]:
        argv = ["audit-sweep"] + argv[2:]
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, 0 on --help/--version
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except ValueError as exc:
        # GraphError / DocumentError / CertificateError / bad parameters
        return _fail(str(exc))
    except OSError as exc:
        return _fail(str(exc))


def entry() -> None:
    raise SystemExit(main())
