"""Bound tables for the standard product networks, recomputed on every call."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from math import prod

from .bounds import BoundReport, GraphSummary, lower_bound, lower_bound_report, product_bound_interval, product_summary
from .construct import complete_forest_count
from .exact import exact_la_k
from .expr import ProductSpec, Spec, build, decompose, decompose_family
from .forests import verify_decomposition
from .graph import FamilySpec, ParameterError
from .products import ProductKind
from .published import HYPER_PETERSEN_LEX_PRINTED_UPPER

NETWORKS = (
    "grid",
    "mesh",
    "torus",
    "generalized_hypercube",
    "hyper_petersen_cart",
    "hyper_petersen_lex",
    "hyper_petersen_dir",
    "hyper_petersen_str",
)
FOUR_KINDS = (ProductKind.CARTESIAN, ProductKind.LEXICOGRAPHIC, ProductKind.DIRECT, ProductKind.STRONG)
_HP_KIND = {
    "hyper_petersen_cart": ProductKind.CARTESIAN,
    "hyper_petersen_lex": ProductKind.LEXICOGRAPHIC,
    "hyper_petersen_dir": ProductKind.DIRECT,
    "hyper_petersen_str": ProductKind.STRONG,
}
CSV_COLUMNS = ("network", "params", "k", "lower", "upper", "exact", "provenance")

EXACT_MAX_EDGES = 36  # products this small also get an exact column
FACTOR_EXACT_MAX_EDGES = 40
CONSTRUCT_MAX_EDGES = 5000
EXACT_NODE_LIMIT = 2_000_000  # node budget keeps the table deterministic across machines


@dataclass(frozen=True)
class NetworkSpec:
    network: str
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        net, p = self.network, self.params
        if net not in NETWORKS:
            raise ParameterError(f"unknown network {net!r}; expected one of {', '.join(NETWORKS)}")
        if net == "grid":
            if len(p) != 2 or min(p) < 2:
                raise ParameterError("grid takes two path orders n, m >= 2")
        elif net in ("mesh", "torus", "generalized_hypercube"):
            low = {"mesh": 2, "torus": 3, "generalized_hypercube": 2}[net]
            if len(p) < 2:
                raise ParameterError(f"{net} needs at least two dimensions")
            if min(p) < low:
                raise ParameterError(f"{net} dimension sizes must be >= {low}")
        elif len(p) != 1 or p[0] < 3:
            raise ParameterError(f"{net} takes one dimension n >= 3")

    def factors(self) -> list[FamilySpec]:
        net, p = self.network, self.params
        if net in ("grid", "mesh"):
            return [FamilySpec("path", (x,)) for x in p]
        if net == "torus":
            return [FamilySpec("cycle", (x,)) for x in p]
        if net == "generalized_hypercube":
            return [FamilySpec("complete", (x,)) for x in p]
        return [FamilySpec("petersen"), FamilySpec("hypercube", (p[0] - 3,))]

    def kinds(self) -> tuple[ProductKind, ...]:
        return (_HP_KIND[self.network],) if self.network in _HP_KIND else FOUR_KINDS


@dataclass(frozen=True)
class ReportRow:
    network: str
    kind: ProductKind
    params: tuple[int, ...]
    k: int
    bounds: BoundReport
    exact: int | None = None
    flags: tuple[str, ...] = field(default=())

    @property
    def lower(self) -> int:
        return self.bounds.lower

    @property
    def upper(self) -> int | None:
        return self.bounds.upper

    def label(self) -> str:
        return self.network if self.network in _HP_KIND else f"{self.network}/{self.kind}"

    def cells(self) -> list[str]:
        upper = "" if self.upper is None else str(self.upper)
        exact = "" if self.exact is None else str(self.exact)
        prov = " ".join(f"{side}:{tag}={value}" for side, tag, value in self.bounds.provenance)
        if self.flags:
            prov += " | " + " | ".join(self.flags)
        return [self.label(), "x".join(map(str, self.params)), str(self.k), str(self.lower), upper, exact, prov]


def _factor_interval(spec: FamilySpec, k: int, node_limit: int) -> tuple[tuple[int, int], str]:
    """la_k of a factor: constructive upper, exact or closed-form lower."""
    d = decompose_family(spec, k)
    upper = len(d)
    g = d.target
    if g.m <= FACTOR_EXACT_MAX_EDGES:
        res = exact_la_k(g, k, node_limit=node_limit)
        if res.is_exact:
            return (res.value, min(upper, res.value)), "exact"
        return (res.value, upper), "search-lower"
    return (lower_bound(g, k), upper), "closed-form"


def _expression(factors: list[FamilySpec], kind: ProductKind) -> Spec:
    spec: Spec = factors[0]
    for f in factors[1:]:
        spec = ProductSpec(kind, spec, f)
    return spec


def _row(spec: NetworkSpec, kind: ProductKind, k: int, node_limit: int) -> ReportRow:
    factors = spec.factors()
    graphs = [build(f) for f in factors]
    summaries = [GraphSummary.of(g) for g in graphs]
    ivals = []
    factor_notes = []
    for f in factors:
        ival, how = _factor_interval(f, k, node_limit)
        ivals.append(ival)
        factor_notes.append(f"{f}={ival[0]}..{ival[1]}({how})")
    flags: list[str] = []

    if spec.network == "generalized_hypercube" and kind is ProductKind.LEXICOGRAPHIC:
        # a lexicographic product of cliques is the clique on prod(m_i) vertices
        order = prod(spec.params)
        clique = GraphSummary(order, order * (order - 1) // 2, order - 1, order >= 3)
        prov = [("lower", "complete-graph", (order + 1) // 2)]
        prov += [p for p in lower_bound_report(clique, k).provenance if p[0] == "lower" and p[1] != "cyclic"]
        prov += [("upper", "complete-graph", order), ("upper", "complete-construction", complete_forest_count(order, k))]
        lower = max(v for side, _, v in prov if side == "lower")
        upper = min(v for side, _, v in prov if side == "upper")
        bounds = BoundReport(k, lower, upper, tuple(prov))
        total = sum(spec.params)
        printed = (-(-total // 2), total / 2)
        if printed != (lower, upper):
            flags.append(f"printed sum-based interval [{printed[0]}, {printed[1]:g}] differs; clique of order {order} used")
    elif kind is ProductKind.CARTESIAN:
        bounds = product_bound_interval(summaries, [k] * len(summaries), kind, ivals)
    else:
        acc, acc_ival = summaries[0], ivals[0]
        prov: list[tuple[str, str, int]] = []
        for s, ival in zip(summaries[1:], ivals[1:]):
            step = product_bound_interval([acc, s], [k, k], kind, [acc_ival, ival])
            prov = list(step.provenance)
            acc, acc_ival = product_summary(kind, acc, s), (step.lower, step.upper)
        bounds = BoundReport(k, acc_ival[0], acc_ival[1], tuple(prov))

    whole = summaries[0]
    for s in summaries[1:]:
        whole = product_summary(kind, whole, s)
    if whole.m <= CONSTRUCT_MAX_EDGES:
        d = decompose(_expression(factors, kind), k)
        if verify_decomposition(d.target, d) is not None:
            raise AssertionError(f"construction for {spec.network} {kind} failed verification")
        prov = bounds.provenance + (("upper", "construction", len(d)),)
        upper = len(d) if bounds.upper is None else min(bounds.upper, len(d))
        bounds = BoundReport(k, bounds.lower, upper, prov)

    exact = None
    if bounds.is_tight:
        exact = bounds.lower
    elif whole.m <= EXACT_MAX_EDGES:
        res = exact_la_k(build(_expression(factors, kind)), k, node_limit=node_limit)
        if res.is_exact:
            exact = res.value

    if spec.network == "hyper_petersen_lex":
        printed = HYPER_PETERSEN_LEX_PRINTED_UPPER.get(spec.params[0], {}).get(min(k, 4))
        if printed is not None and printed != bounds.upper:
            flags.append(f"printed statement upper {printed} disagrees with derived upper {bounds.upper}")
    flags.append("factors " + " ".join(factor_notes))
    return ReportRow(spec.network, kind, spec.params, k, bounds, exact, tuple(flags))


def report_network(spec: NetworkSpec, ks, node_limit: int = EXACT_NODE_LIMIT) -> list[ReportRow]:
    """One row per (product kind, k), sorted by kind then k."""
    if isinstance(ks, int):
        ks = [ks]
    if any(k < 1 for k in ks):
        raise ParameterError("every k must be >= 1")
    rows = [_row(spec, kind, k, node_limit) for kind in spec.kinds() for k in sorted(set(ks))]
    order = {kind: i for i, kind in enumerate(FOUR_KINDS)}
    return sorted(rows, key=lambda r: (order[r.kind], r.k))


def render_csv(rows: list[ReportRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in rows:
        writer.writerow(r.cells())
    return buf.getvalue()


def render_text(rows: list[ReportRow]) -> str:
    table = [list(CSV_COLUMNS)] + [r.cells() for r in rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(CSV_COLUMNS) - 1)]
    out = []
    for row in table:
        head = "  ".join(cell.ljust(w) for cell, w in zip(row, widths))
        out.append(f"{head}  {row[-1]}".rstrip())
    return "\n".join(out) + "\n"
