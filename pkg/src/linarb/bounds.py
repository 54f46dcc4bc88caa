"""Closed-form bounds on la_k, each tagged with the argument that produced it.

Tags used in provenance:

``degree``         ceil(max degree / 2)
``edge-capacity``  ceil(|E| / floor(k|V| / (k+1)))
``cyclic``         2 for any graph with a cycle
``vizing``         max degree + 1 (upper; la_k <= la_1 = chromatic index)
``factor-max``     the larger factor value (factors embed in the product)
``cartesian-sum``  sum of factor values
``join-degree``    ceil((D(G) + |V(H)|) / 2), symmetric
``join-sum``       p + q + max(|V(G)|, |V(H)|)
``lex-degree``     ceil((D(H) + |V(H)| D(G)) / 2)
``lex-blowup``     p |V(H)| + q
``direct-degree``  ceil(D(G) D(H) / 2)
``direct-split``   2 p q
``strong-degree``  ceil((D(G) D(H) + D(G) + D(H)) / 2)
``strong-sum``     p + q + 2 p q
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .forests import edge_capacity
from .graph import Graph, ParameterError
from .products import ProductKind, coerce_kind


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class BoundReport:
    k: int
    lower: int
    upper: int | None
    provenance: tuple[tuple[str, str, int], ...] = ()  # (side, tag, value)

    def __post_init__(self) -> None:
        if self.upper is not None and self.lower > self.upper:
            raise ValueError(f"inconsistent bounds: lower {self.lower} > upper {self.upper}")

    @property
    def is_tight(self) -> bool:
        return self.upper is not None and self.lower == self.upper

    def tags(self, side: str) -> list[str]:
        return [tag for s, tag, value in self.provenance if s == side and value == getattr(self, side)]

    def describe(self) -> str:
        upper = "?" if self.upper is None else str(self.upper)
        parts = [f"{side}:{tag}={value}" for side, tag, value in self.provenance]
        return f"[{self.lower}, {upper}] " + " ".join(parts)


@dataclass(frozen=True)
class GraphSummary:
    """The numbers the product bounds need, so large products never get built."""

    n: int
    m: int
    max_degree: int
    has_cycle: bool

    @classmethod
    def of(cls, g: Graph) -> "GraphSummary":
        return cls(g.n, g.m, g.max_degree(), not g.is_forest())


def product_summary(kind, a: GraphSummary, b: GraphSummary) -> GraphSummary:
    kind = coerce_kind(kind)
    if kind is ProductKind.JOIN:
        n = a.n + b.n
        m = a.m + b.m + a.n * b.n
        delta = max(a.max_degree + b.n, b.max_degree + a.n) if a.n and b.n else max(a.max_degree, b.max_degree)
        cyc = (a.n >= 2 and b.n >= 2) or (a.m > 0 and b.n > 0) or (b.m > 0 and a.n > 0) or a.has_cycle or b.has_cycle
        return GraphSummary(n, m, delta, cyc)
    n = a.n * b.n
    cart_m = a.m * b.n + a.n * b.m
    dir_m = 2 * a.m * b.m
    if kind is ProductKind.CARTESIAN:
        m, delta = cart_m, a.max_degree + b.max_degree
    elif kind is ProductKind.DIRECT:
        m, delta = dir_m, a.max_degree * b.max_degree
    elif kind is ProductKind.STRONG:
        m = cart_m + dir_m
        delta = a.max_degree * b.max_degree + a.max_degree + b.max_degree
    else:
        m = a.n * b.m + a.m * b.n * b.n
        delta = b.max_degree + b.n * a.max_degree
    if n == 0:
        return GraphSummary(0, 0, 0, False)
    if kind is ProductKind.DIRECT:
        cyc = (a.max_degree >= 2 and b.max_degree >= 2) or (a.has_cycle and b.m > 0) or (b.has_cycle and a.m > 0)
    elif kind is ProductKind.LEXICOGRAPHIC:
        cyc = (a.m > 0 and b.n >= 2) or a.has_cycle or b.has_cycle
    else:
        cyc = (a.m > 0 and b.m > 0) or a.has_cycle or b.has_cycle
    return GraphSummary(n, m, delta, cyc)


def lower_bound_report(g: Graph | GraphSummary, k: int) -> BoundReport:
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    s = g if isinstance(g, GraphSummary) else GraphSummary.of(g)
    if s.m == 0:
        return BoundReport(k, 0, 0, (("lower", "degree", 0), ("upper", "vizing", 0)))
    prov = [
        ("lower", "degree", _ceil_div(s.max_degree, 2)),
        ("lower", "edge-capacity", _ceil_div(s.m, edge_capacity(s.n, k))),
    ]
    if s.has_cycle:
        prov.append(("lower", "cyclic", 2))
    lower = max(v for _, _, v in prov)
    prov.append(("upper", "vizing", s.max_degree + 1))
    return BoundReport(k, lower, s.max_degree + 1, tuple(prov))


def lower_bound(g: Graph | GraphSummary, k: int) -> int:
    """Degree and edge-capacity bound on la_k, raised to 2 when ``g`` has a cycle."""
    return lower_bound_report(g, k).lower


Interval = Union[BoundReport, tuple, int]


def _interval(report: Interval) -> tuple[int, int | None]:
    if isinstance(report, BoundReport):
        return report.lower, report.upper
    if isinstance(report, int):
        return report, report
    lo, hi = report
    return lo, hi


def product_bound_interval(
    factors: Sequence[Graph | GraphSummary],
    ks: Sequence[int],
    kind,
    factor_reports: Sequence[Interval],
) -> BoundReport:
    """Bounds on la_{max k}(G1 * G2 * ...) from the factors' la values.

    ``factor_reports`` hold each factor's la_k as an exact int, a ``(lower,
    upper)`` pair, or a :class:`BoundReport`. Lower bounds use factor lowers and
    upper bounds use factor uppers. Only the Cartesian product accepts more than
    two factors.
    """
    kind = coerce_kind(kind)
    if not (len(factors) == len(ks) == len(factor_reports)):
        raise ParameterError("factors, ks and factor_reports must have equal length")
    if kind is ProductKind.CARTESIAN:
        if len(factors) < 2:
            raise ParameterError("Cartesian bounds need at least two factors")
    elif len(factors) != 2:
        raise ParameterError(f"{kind} bounds take exactly two factors, got {len(factors)}")
    if any(k < 1 for k in ks):
        raise ParameterError("every k must be >= 1")
    summaries = [f if isinstance(f, GraphSummary) else GraphSummary.of(f) for f in factors]
    ivals = [_interval(r) for r in factor_reports]
    k = max(ks)
    lows = [lo for lo, _ in ivals]
    ups = [hi for _, hi in ivals]
    known = all(u is not None for u in ups)

    whole = summaries[0]
    for s in summaries[1:]:
        whole = product_summary(kind, whole, s)

    lower: list[tuple[str, str, int]] = []
    upper: list[tuple[str, str, int]] = []
    if kind is ProductKind.CARTESIAN:
        lower.append(("lower", "factor-max", max(lows)))
        if known:
            upper.append(("upper", "cartesian-sum", sum(ups)))
    else:
        a, b = summaries
        p, q = ups
        if kind is ProductKind.JOIN:
            lower.append(("lower", "join-degree", max(_ceil_div(a.max_degree + b.n, 2), _ceil_div(b.max_degree + a.n, 2))))
            if known:
                upper.append(("upper", "join-sum", p + q + max(a.n, b.n)))
        elif kind is ProductKind.LEXICOGRAPHIC:
            lower.append(("lower", "lex-degree", _ceil_div(b.max_degree + b.n * a.max_degree, 2)))
            if known:
                upper.append(("upper", "lex-blowup", p * b.n + q))
        elif kind is ProductKind.DIRECT:
            lower.append(("lower", "direct-degree", _ceil_div(a.max_degree * b.max_degree, 2)))
            if known:
                upper.append(("upper", "direct-split", 2 * p * q))
        else:
            deg = a.max_degree * b.max_degree + a.max_degree + b.max_degree
            lower.append(("lower", "strong-degree", _ceil_div(deg, 2)))
            if known:
                upper.append(("upper", "strong-sum", p + q + 2 * p * q))
    if whole.has_cycle:
        lower.append(("lower", "cyclic", 2))
    lo = max(v for _, _, v in lower)
    hi = min((v for _, _, v in upper), default=None)
    return BoundReport(k, lo, hi, tuple(lower + upper))


def chain_check(values: Sequence[int], max_degree: int | None = None) -> int | None:
    """``None`` if ``values[k-1] = la_k`` is non-increasing with la_1 <= D + 1.

    Otherwise the 1-based k at which the chain first breaks.
    """
    if values and max_degree is not None and values[0] > max_degree + 1:
        return 1
    for i in range(1, len(values)):
        if values[i] > values[i - 1]:
            return i + 1
    return None
