"""Linear k-forests, decompositions, and the verifier.

The verifier reports problems as :class:`Violation` values instead of raising,
so the solver and the CLI can branch on the kind.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .graph import Edge, Graph, ParameterError, normalize_edge


class MalformedForestError(ValueError):
    pass


class ViolationKind(str, Enum):
    DEGREE = "degree>2"
    CYCLE = "cycle"
    TOO_LONG = "component-too-long"
    FOREIGN_EDGE = "foreign-edge"
    MISSING_EDGE = "missing-edge"
    DUPLICATE_EDGE = "duplicate-edge"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    witness: object
    forest: int | None = None

    def __str__(self) -> str:
        where = "" if self.forest is None else f" in forest {self.forest}"
        return f"{self.kind}{where}: {self.witness}"


@dataclass(frozen=True)
class LinearKForest:
    """An edge set claimed to be a linear k-forest.

    Edges are normalized and sorted but not deduplicated, so a malformed
    certificate survives long enough for the verifier to name the problem.
    """

    k: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ParameterError(f"k must be >= 1, got {self.k}")
        object.__setattr__(self, "edges", tuple(sorted(normalize_edge(u, v) for u, v in self.edges)))

    def __len__(self) -> int:
        return len(self.edges)

    def vertices(self) -> list[int]:
        return sorted({x for e in self.edges for x in e})


@dataclass(frozen=True)
class Decomposition:
    """Ordered forests claimed to partition ``target``'s edges. Empty forests are dropped."""

    k: int
    forests: tuple[LinearKForest, ...]
    target: Graph

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ParameterError(f"k must be >= 1, got {self.k}")
        object.__setattr__(self, "forests", tuple(f for f in self.forests if f.edges))

    @classmethod
    def from_edge_sets(cls, target: Graph, k: int, edge_sets: Iterable[Iterable[Edge]]) -> "Decomposition":
        return cls(k, tuple(LinearKForest(k, tuple(es)) for es in edge_sets), target)

    def __len__(self) -> int:
        return len(self.forests)

    def edge_sets(self) -> list[list[Edge]]:
        return [list(f.edges) for f in self.forests]


class _DSU:
    def __init__(self) -> None:
        self.parent: dict[int, int] = {}

    def find(self, x: int) -> int:
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[max(ra, rb)] = min(ra, rb)
        return True


def _forest_shape(edges: Sequence[Edge]) -> Violation | None:
    deg = Counter(x for e in edges for x in e)
    for v in sorted(deg):
        if deg[v] > 2:
            return Violation(ViolationKind.DEGREE, v)
    dsu = _DSU()
    for u, v in edges:
        if not dsu.union(u, v):
            return Violation(ViolationKind.CYCLE, (u, v))
    return None


def _walk(edges: Sequence[Edge]) -> list[list[int]]:
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    seen: set[int] = set()
    paths = []
    for s in sorted(adj):
        if s in seen or len(adj[s]) != 1:
            continue
        path = [s]
        seen.add(s)
        prev, cur = None, s
        while True:
            nxt = [y for y in adj[cur] if y != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            path.append(cur)
            seen.add(cur)
        paths.append(path)
    return sorted(paths)


def forest_components(f: LinearKForest) -> list[list[int]]:
    """Each path component as an endpoint-to-endpoint vertex list, smaller endpoint first."""
    bad = _forest_shape(f.edges)
    if bad is not None:
        raise MalformedForestError(f"not a linear forest: {bad}")
    if len(set(f.edges)) != len(f.edges):
        raise MalformedForestError("repeated edge in forest")
    return _walk(f.edges)


def verify_forest(g: Graph, f: LinearKForest) -> Violation | None:
    """``None`` when ``f`` is a linear ``f.k``-forest inside ``g``, else the first violation."""
    for u, v in f.edges:
        if not g.has_edge(u, v):
            return Violation(ViolationKind.FOREIGN_EDGE, (u, v))
    counts = Counter(f.edges)
    for e in f.edges:
        if counts[e] > 1:
            return Violation(ViolationKind.DUPLICATE_EDGE, e)
    bad = _forest_shape(f.edges)
    if bad is not None:
        return bad
    for path in _walk(f.edges):
        if len(path) - 1 > f.k:
            return Violation(ViolationKind.TOO_LONG, tuple(path))
    return None


def verify_decomposition(g: Graph, d: Decomposition) -> Violation | None:
    """``None`` iff ``d`` partitions ``E(g)`` into valid linear ``d.k``-forests.

    Checks run in a fixed order: duplicates across forests, then each forest,
    then coverage.
    """
    owner: dict[Edge, int] = {}
    for i, f in enumerate(d.forests):
        for e in f.edges:
            if e in owner:
                return Violation(ViolationKind.DUPLICATE_EDGE, e, i)
            owner[e] = i
    for i, f in enumerate(d.forests):
        forest = f if f.k == d.k else LinearKForest(d.k, f.edges)
        bad = verify_forest(g, forest)
        if bad is not None:
            return Violation(bad.kind, bad.witness, i)
    for e in g.edges:
        if e not in owner:
            return Violation(ViolationKind.MISSING_EDGE, e)
    return None


def edge_capacity(n: int, k: int) -> int:
    """Most edges a linear k-forest on ``n`` vertices can have."""
    return (k * n) // (k + 1)
