"""The five binary graph products.

Coordinate products label vertex ``(i, j)`` as ``i * |V(h)| + j``. The join
keeps ``g``'s labels and shifts ``h``'s by ``|V(g)|``.
"""

from __future__ import annotations

from enum import Enum

from .graph import Graph, ParameterError


class ProductKind(str, Enum):
    CARTESIAN = "cartesian"
    LEXICOGRAPHIC = "lexicographic"
    DIRECT = "direct"
    STRONG = "strong"
    JOIN = "join"

    def __str__(self) -> str:
        return self.value


def coerce_kind(kind) -> ProductKind:
    try:
        return ProductKind(kind)
    except ValueError:
        raise ParameterError(f"unknown product kind {kind!r}") from None


def label(h: Graph, i: int, j: int) -> int:
    return i * h.n + j


def cartesian_edges(g: Graph, h: Graph) -> list[tuple[int, int]]:
    m = h.n
    out = [(i * m + a, i * m + b) for i in range(g.n) for a, b in h.edges]
    out += [(a * m + j, b * m + j) for a, b in g.edges for j in range(m)]
    return out


def direct_edges(g: Graph, h: Graph) -> list[tuple[int, int]]:
    m = h.n
    out = []
    for a, b in g.edges:
        for c, d in h.edges:
            out.append((a * m + c, b * m + d))
            out.append((a * m + d, b * m + c))
    return out


def product(kind, g: Graph, h: Graph) -> Graph:
    kind = coerce_kind(kind)
    m = h.n
    if kind is ProductKind.CARTESIAN:
        edges = cartesian_edges(g, h)
    elif kind is ProductKind.DIRECT:
        edges = direct_edges(g, h)
    elif kind is ProductKind.STRONG:
        edges = cartesian_edges(g, h) + direct_edges(g, h)
    elif kind is ProductKind.LEXICOGRAPHIC:
        edges = [(i * m + a, i * m + b) for i in range(g.n) for a, b in h.edges]
        edges += [(a * m + s, b * m + t) for a, b in g.edges for s in range(m) for t in range(m)]
    else:
        n = g.n
        edges = list(g.edges) + [(n + a, n + b) for a, b in h.edges]
        edges += [(i, n + j) for i in range(n) for j in range(m)]
        return Graph.from_edges(n + m, edges)
    return Graph.from_edges(g.n * m, edges)


def layer_embed(g: Graph, h: Graph, which: str, index: int) -> dict[int, int]:
    """Map factor vertices onto the layer ``G(v)`` (``which="G"``) or ``H(u)`` (``which="H"``).

    ``index`` is the fixed coordinate: a vertex of ``h`` for a G-layer, of ``g``
    for an H-layer.
    """
    m = h.n
    if which == "G":
        if not 0 <= index < h.n:
            raise ParameterError(f"G-layer index {index} outside 0..{h.n - 1}")
        return {i: i * m + index for i in range(g.n)}
    if which == "H":
        if not 0 <= index < g.n:
            raise ParameterError(f"H-layer index {index} outside 0..{g.n - 1}")
        return {j: index * m + j for j in range(m)}
    raise ParameterError(f"layer must be 'G' or 'H', got {which!r}")


def fold(kind, factors: list[Graph]) -> Graph:
    """Left fold ``((G1 * G2) * G3) * ...``."""
    if not factors:
        raise ParameterError("fold needs at least one factor")
    out = factors[0]
    for f in factors[1:]:
        out = product(kind, out, f)
    return out
