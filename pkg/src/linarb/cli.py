"""``linarb`` command line.

Exit codes: 0 success, 1 verification failure, 2 parse or parameter error,
3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import sys

from .bounds import lower_bound_report, product_bound_interval
from .exact import Status, exact_la_k
from .expr import build, decompose, parse_expr
from .formats import FormatError, emit_certificate, format_graph, parse_certificate, parse_graph
from .forests import verify_decomposition
from .graph import FamilySpec, Graph, ParameterError, build_family
from .products import ProductKind, product
from .report import NetworkSpec, render_csv, render_text, report_network

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_graph(path: str) -> Graph:
    return parse_graph(_read(path))


def _graph_from(args) -> Graph:
    if getattr(args, "expr", None):
        return build(parse_expr(args.expr))
    return _load_graph(args.graph)


def cmd_gen(args) -> int:
    if args.expr:
        g = build(parse_expr(args.expr))
    elif args.family:
        g = build_family(FamilySpec(args.family, tuple(args.params)))
    else:
        raise ParameterError("gen needs --family or --expr")
    _write(args.output, format_graph(g))
    return EXIT_OK


def cmd_product(args) -> int:
    g, h = _load_graph(args.left), _load_graph(args.right)
    _write(args.output, format_graph(product(args.kind, g, h)))
    return EXIT_OK


def _factor_interval(g: Graph, k: int, budget_ms: float | None) -> tuple[int, int]:
    res = exact_la_k(g, k, budget_ms=budget_ms)
    if res.is_exact:
        return res.value, res.value
    return res.value, lower_bound_report(g, k).upper


def cmd_bounds(args) -> int:
    if args.kind:
        if len(args.graphs) != 2:
            raise ParameterError("--kind needs exactly two graph files")
        factors = [_load_graph(p) for p in args.graphs]
        ivals = [_factor_interval(f, args.k, args.budget_ms) for f in factors]
        report = product_bound_interval(factors, [args.k, args.k], args.kind, ivals)
    else:
        if len(args.graphs) != 1:
            raise ParameterError("bounds takes one graph file, or two with --kind")
        report = lower_bound_report(_load_graph(args.graphs[0]), args.k)
    upper = "unknown" if report.upper is None else report.upper
    print(f"k={report.k} lower={report.lower} upper={upper}")
    for side, tag, value in report.provenance:
        print(f"  {side:5} {tag:15} {value}")
    return EXIT_OK


def cmd_decompose(args) -> int:
    if args.method == "constructive":
        if not args.expr:
            raise ParameterError("constructive decomposition needs --expr")
        d = decompose(parse_expr(args.expr), args.k)
    else:
        res = exact_la_k(_graph_from(args), args.k, budget_ms=args.budget_ms)
        if not res.is_exact:
            print(f"budget exhausted; la_{args.k} >= {res.value}", file=sys.stderr)
            return EXIT_BUDGET
        d = res.certificate
    _write(args.output, emit_certificate(d))
    return EXIT_OK


def cmd_exact(args) -> int:
    res = exact_la_k(_graph_from(args), args.k, budget_ms=args.budget_ms, node_limit=args.node_limit)
    print(res.value)
    s = res.stats
    print(f"status={res.status} nodes={s.nodes} elapsed_ms={s.elapsed_ms:.1f} backend={s.backend}")
    return EXIT_OK if res.status is Status.EXACT else EXIT_BUDGET


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    d = parse_certificate(_read(args.certificate), g)
    bad = verify_decomposition(g, d)
    if bad is not None:
        print(f"invalid: {bad}")
        return EXIT_INVALID
    print(f"ok: {len(d)} linear {d.k}-forests")
    return EXIT_OK


def cmd_report(args) -> int:
    rows = report_network(NetworkSpec(args.network, tuple(args.params)), args.k)
    _write(args.output, render_csv(rows) if args.format == "csv" else render_text(rows))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="linarb", description="Linear k-forest decompositions and bounds.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a named graph as an edge list")
    p.add_argument("--family", help="path, cycle, complete, complete_bipartite, hypercube, petersen, empty")
    p.add_argument("--params", type=int, nargs="*", default=[])
    p.add_argument("--expr", help="product expression, e.g. 'strong(path:4,path:3)'")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("product", help="combine two edge lists")
    p.add_argument("--kind", required=True, choices=[k.value for k in ProductKind])
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("bounds", help="print lower/upper bounds on la_k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--kind", choices=[k.value for k in ProductKind], help="treat the two graphs as product factors")
    p.add_argument("--budget-ms", type=float, default=5000.0, help="exact-search budget per factor")
    p.add_argument("graphs", nargs="+")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("decompose", help="write a decomposition certificate")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=["constructive", "exact"], default="constructive")
    p.add_argument("--expr")
    p.add_argument("--budget-ms", type=float)
    p.add_argument("graph", nargs="?", default="-")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("exact", help="compute la_k exactly")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--expr")
    p.add_argument("--budget-ms", type=float)
    p.add_argument("--node-limit", type=int)
    p.add_argument("graph", nargs="?", default="-")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("verify", help="check a certificate against a graph")
    p.add_argument("graph")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", help="bound table for a product network")
    p.add_argument("--network", required=True)
    p.add_argument("--params", type=int, nargs="+", required=True)
    p.add_argument("--k", type=int, nargs="+", default=[1, 2, 3, 4])
    p.add_argument("--format", choices=["csv", "text"], default="text")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (FormatError, ParameterError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
