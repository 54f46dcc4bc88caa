"""Explicit decompositions of the base families and of products built from factor certificates.

Every function here returns a :class:`Decomposition` that passes
``verify_decomposition``; composers check their inputs first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .forests import Decomposition, LinearKForest, forest_components, verify_decomposition
from .graph import Edge, Graph, ParameterError, complete_graph, cycle_graph, path_graph, petersen_graph
from .products import ProductKind, product


class InvalidDecompositionError(ValueError):
    pass


def _e(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def _check_k(k: int) -> None:
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")


def _require_valid(g: Graph, d: Decomposition, name: str) -> None:
    bad = verify_decomposition(g, d)
    if bad is not None:
        raise InvalidDecompositionError(f"{name} is not a valid decomposition: {bad}")


# --- base families ----------------------------------------------------------


def decompose_path(n: int, k: int) -> Decomposition:
    """One forest when the whole path fits, else alternate edges into two matchings."""
    if n < 2:
        raise ParameterError(f"path decomposition needs n >= 2, got {n}")
    _check_k(k)
    g = path_graph(n)
    if k >= n - 1:
        return Decomposition.from_edge_sets(g, k, [g.edges])
    return Decomposition.from_edge_sets(g, k, [g.edges[0::2], g.edges[1::2]])


def decompose_cycle(n: int, k: int) -> Decomposition:
    if n < 3:
        raise ParameterError(f"cycle decomposition needs n >= 3, got {n}")
    _check_k(k)
    g = cycle_graph(n)
    ring = [_e(i, (i + 1) % n) for i in range(n)]
    if n % 2 == 0:
        sets = [ring[0::2], ring[1::2]]
    elif k >= 2:
        # maximum matching; the remainder has one path of length 2 through vertex 0
        sets = [ring[0 : n - 1 : 2], ring[1 : n - 1 : 2] + [ring[n - 1]]]
    else:
        sets = [ring[0 : n - 1 : 2], ring[1 : n - 1 : 2], [ring[n - 1]]]
    return Decomposition.from_edge_sets(g, k, sets)


def _zigzag_paths(n: int) -> list[list[int]]:
    """n/2 rotations of the zigzag Hamiltonian path of K_n (n even)."""
    offsets = [0]
    for j in range(1, n // 2 + 1):
        offsets.append(j)
        if j < n // 2:
            offsets.append(-j)
    return [[(i + o) % n for o in offsets] for i in range(n // 2)]


def _round_robin(n: int) -> list[list[Edge]]:
    """n-1 perfect matchings of K_n (n even)."""
    hub = n - 1
    classes = []
    for r in range(n - 1):
        cls = [_e(r, hub)]
        for i in range(1, n // 2):
            cls.append(_e((r + i) % hub, (r - i) % hub))
        classes.append(cls)
    return classes


def complete_forest_count(n: int, k: int) -> int:
    """Size of ``decompose_complete(n, k)`` without building it."""
    if n < 2:
        raise ParameterError(f"complete decomposition needs n >= 2, got {n}")
    _check_k(k)
    if k >= n - 1:
        return (n + 1) // 2
    return n - 1 if n % 2 == 0 else n


def decompose_complete(n: int, k: int) -> Decomposition:
    """Hamiltonian paths when ``k >= n-1``, otherwise a proper edge colouring."""
    if n < 2:
        raise ParameterError(f"complete decomposition needs n >= 2, got {n}")
    _check_k(k)
    g = complete_graph(n)
    even = n + (n % 2)
    if k >= n - 1:
        sets = []
        for walk in _zigzag_paths(even):
            sets.append([_e(a, b) for a, b in zip(walk, walk[1:]) if a < n and b < n])
    else:
        sets = [[e for e in cls if e[1] < n] for cls in _round_robin(even)]
    return Decomposition.from_edge_sets(g, k, sets)


def bipartite_matchings(m: int) -> list[list[tuple[int, int]]]:
    """``m`` perfect matchings of K_{m,m} as (left index, right index) pairs."""
    if m < 1:
        raise ParameterError(f"K_(m,m) needs m >= 1, got {m}")
    return [[(i, (i + j) % m) for i in range(m)] for j in range(m)]


def _paths_to_edges(paths: Sequence[Sequence[int]]) -> list[Edge]:
    # vertex labels are 1-based as drawn; shift to 0-based
    return [_e(a - 1, b - 1) for p in paths for a, b in zip(p, p[1:])]


_PETERSEN_FORESTS = {
    1: [
        [(1, 2), (7, 10), (6, 9), (3, 4)],
        [(1, 5), (2, 3), (8, 10)],
        [(4, 5), (7, 9), (6, 8)],
        [(1, 6), (2, 7), (3, 8), (4, 9), (5, 10)],
    ],
    2: [
        [(1, 5, 10), (6, 9, 7), (2, 3, 8)],
        [(3, 4, 9), (6, 8, 10), (1, 2, 7)],
        [(1, 6), (7, 10), (4, 5)],
    ],
    3: [
        [(2, 1, 5, 4), (9, 7, 10, 8)],
        [(9, 6, 8), (4, 3, 2)],
        [(1, 6), (2, 7), (3, 8), (4, 9), (5, 10)],
    ],
    4: [
        [(3, 2, 1, 5, 4), (7, 9, 6, 8, 10)],
        [(8, 3, 4, 9), (5, 10, 7, 2), (1, 6)],
    ],
}


def decompose_petersen(k: int) -> Decomposition:
    """Hand-built optimal forests: 4, 3, 3, 2 of them for k = 1, 2, 3, >= 4."""
    _check_k(k)
    forests = _PETERSEN_FORESTS[min(k, 4)]
    return Decomposition.from_edge_sets(petersen_graph(), k, [_paths_to_edges(f) for f in forests])


# --- composers ----------------------------------------------------------------


@dataclass(frozen=True)
class SplitPair:
    first: tuple[Edge, ...]
    second: tuple[Edge, ...]
    origin: LinearKForest


def alternating_split(f: LinearKForest) -> SplitPair:
    """Odd-position edges of every path versus even-position edges; both are matchings."""
    first: list[Edge] = []
    second: list[Edge] = []
    for path in forest_components(f):
        for pos, (a, b) in enumerate(zip(path, path[1:])):
            (first if pos % 2 == 0 else second).append(_e(a, b))
    return SplitPair(tuple(sorted(first)), tuple(sorted(second)), f)


def compose_cartesian(g: Graph, h: Graph, dG: Decomposition, dH: Decomposition) -> Decomposition:
    """Each factor forest copied into every layer of its factor: p + q forests."""
    _require_valid(g, dG, "G decomposition")
    _require_valid(h, dH, "H decomposition")
    m = h.n
    sets = [[(a * m + j, b * m + j) for a, b in f.edges for j in range(m)] for f in dG.forests]
    sets += [[(i * m + a, i * m + b) for i in range(g.n) for a, b in f.edges] for f in dH.forests]
    return Decomposition.from_edge_sets(product(ProductKind.CARTESIAN, g, h), max(dG.k, dH.k), sets)


def compose_join(g: Graph, h: Graph, dG: Decomposition, dH: Decomposition) -> Decomposition:
    """Factor forests plus the cross edges as max(|V(G)|, |V(H)|) matchings.

    The smaller side is padded with isolated vertices so the cross edges form
    a balanced complete bipartite graph; matching edges that touch padding are
    dropped.
    """
    _require_valid(g, dG, "G decomposition")
    _require_valid(h, dH, "H decomposition")
    n, m = g.n, h.n
    sets = [list(f.edges) for f in dG.forests]
    sets += [[(n + a, n + b) for a, b in f.edges] for f in dH.forests]
    side = max(n, m)
    if side:
        for matching in bipartite_matchings(side):
            sets.append([(i, n + j) for i, j in matching if i < n and j < m])
    return Decomposition.from_edge_sets(product(ProductKind.JOIN, g, h), max(dG.k, dH.k), sets)


def compose_lexicographic(g: Graph, h: Graph, dG: Decomposition, dH: Decomposition) -> Decomposition:
    """p * |V(H)| parallel forests plus the H forests in every layer.

    Parallel forest ``(i, j)`` takes, for each edge ``u < w`` of forest ``i``,
    the matching ``(u, s) -- (w, s + j mod |V(H)|)``.
    """
    _require_valid(g, dG, "G decomposition")
    _require_valid(h, dH, "H decomposition")
    m = h.n
    sets = []
    for f in dG.forests:
        for j in range(m):
            sets.append([(u * m + s, w * m + (s + j) % m) for u, w in f.edges for s in range(m)])
    sets += [[(i * m + a, i * m + b) for i in range(g.n) for a, b in f.edges] for f in dH.forests]
    return Decomposition.from_edge_sets(product(ProductKind.LEXICOGRAPHIC, g, h), max(dG.k, dH.k), sets)


def _direct_forests(g: Graph, h: Graph, dG: Decomposition, dH: Decomposition) -> list[list[Edge]]:
    m = h.n
    sets = []
    for f in dG.forests:
        split = alternating_split(f)
        for side in (split.first, split.second):
            for fh in dH.forests:
                block = []
                for u1, u2 in side:
                    for v1, v2 in fh.edges:
                        block.append((u1 * m + v1, u2 * m + v2))
                        block.append((u1 * m + v2, u2 * m + v1))
                sets.append(block)
    return sets


def compose_direct(g: Graph, h: Graph, dG: Decomposition, dH: Decomposition) -> Decomposition:
    """2pq forests: each half of a split G forest crossed with each H forest."""
    _require_valid(g, dG, "G decomposition")
    _require_valid(h, dH, "H decomposition")
    sets = _direct_forests(g, h, dG, dH)
    return Decomposition.from_edge_sets(product(ProductKind.DIRECT, g, h), max(dG.k, dH.k), sets)


def compose_strong(g: Graph, h: Graph, dG: Decomposition, dH: Decomposition) -> Decomposition:
    """The Cartesian forests followed by the direct forests: p + q + 2pq."""
    cart = compose_cartesian(g, h, dG, dH)
    sets = cart.edge_sets() + _direct_forests(g, h, dG, dH)
    return Decomposition.from_edge_sets(product(ProductKind.STRONG, g, h), cart.k, sets)


COMPOSERS = {
    ProductKind.CARTESIAN: compose_cartesian,
    ProductKind.JOIN: compose_join,
    ProductKind.LEXICOGRAPHIC: compose_lexicographic,
    ProductKind.DIRECT: compose_direct,
    ProductKind.STRONG: compose_strong,
}


def compose(kind, g: Graph, h: Graph, dG: Decomposition, dH: Decomposition) -> Decomposition:
    return COMPOSERS[ProductKind(kind)](g, h, dG, dH)


def fold_cartesian(decompositions: Sequence[Decomposition]) -> Decomposition:
    """Iterated Cartesian composition over the decompositions' target graphs."""
    if not decompositions:
        raise ParameterError("fold_cartesian needs at least one factor")
    acc = decompositions[0]
    for d in decompositions[1:]:
        acc = compose_cartesian(acc.target, d.target, acc, d)
    return acc
