"""Immutable simple graphs on vertices ``0..n-1`` and the named families."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

Edge = tuple[int, int]

FAMILY_KINDS = ("path", "cycle", "complete", "complete_bipartite", "hypercube", "petersen", "empty")


class ParameterError(ValueError):
    """Raised when a family, product or solver parameter is out of range."""


def normalize_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ParameterError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; ``edges`` is sorted and every pair has ``u < v``."""

    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...] = field(compare=False, repr=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ParameterError(f"vertex count must be >= 0, got {n}")
        seen: set[Edge] = set()
        for u, v in edges:
            e = normalize_edge(int(u), int(v))
            if e[0] < 0 or e[1] >= n:
                raise ParameterError(f"edge {e} outside vertex range 0..{n - 1}")
            if e in seen:
                raise ParameterError(f"duplicate edge {e}")
            seen.add(e)
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in seen:
            adj[u].append(v)
            adj[v].append(u)
        return cls(n, tuple(sorted(seen)), tuple(tuple(sorted(a)) for a in adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            return False
        return v in self.adjacency[u]

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by smallest vertex."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self.adjacency[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            out.append(sorted(comp))
        return out

    def is_forest(self) -> bool:
        # a graph is acyclic iff |E| = |V| - #components
        return self.m == self.n - len(self.components())

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabeled to ``0..len-1``; also returns new->old labels."""
        old = sorted(set(vertices))
        index = {v: i for i, v in enumerate(old)}
        sub = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph.from_edges(len(old), sub), old

    def spanning_subgraph(self, edges: Iterable[Edge]) -> "Graph":
        return Graph.from_edges(self.n, edges)

    def disjoint_union(self, other: "Graph") -> "Graph":
        shifted = [(u + self.n, v + self.n) for u, v in other.edges]
        return Graph.from_edges(self.n + other.n, list(self.edges) + shifted)


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        validate_family(self)

    def __str__(self) -> str:
        if not self.params:
            return self.kind
        return f"{self.kind}:{','.join(map(str, self.params))}"


_CONSTRAINTS = {
    "path": (("n", 1),),
    "cycle": (("n", 3),),
    "complete": (("n", 1),),
    "complete_bipartite": (("s", 1), ("t", 1)),
    "hypercube": (("d", 0),),
    "petersen": (),
    "empty": (("n", 0),),
}


def validate_family(spec: FamilySpec) -> None:
    if spec.kind not in _CONSTRAINTS:
        raise ParameterError(f"unknown family {spec.kind!r}; expected one of {', '.join(FAMILY_KINDS)}")
    arity = len(_CONSTRAINTS[spec.kind])
    if len(spec.params) != arity:
        raise ParameterError(f"{spec.kind} takes {arity} parameter(s), got {len(spec.params)}")
    for (name, low), value in zip(_CONSTRAINTS[spec.kind], spec.params):
        if value < low:
            raise ParameterError(f"{spec.kind} requires {name} >= {low}, got {value}")


def path_graph(n: int) -> Graph:
    return build_family(FamilySpec("path", (n,)))


def cycle_graph(n: int) -> Graph:
    return build_family(FamilySpec("cycle", (n,)))


def complete_graph(n: int) -> Graph:
    return build_family(FamilySpec("complete", (n,)))


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, ())


def petersen_graph() -> Graph:
    return build_family(FamilySpec("petersen"))


def hypercube_graph(d: int) -> Graph:
    return build_family(FamilySpec("hypercube", (d,)))


def build_family(spec: FamilySpec) -> Graph:
    kind, p = spec.kind, spec.params
    if kind == "path":
        return Graph.from_edges(p[0], [(i, i + 1) for i in range(p[0] - 1)])
    if kind == "cycle":
        return Graph.from_edges(p[0], [(i, (i + 1) % p[0]) for i in range(p[0])])
    if kind == "complete":
        n = p[0]
        return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if kind == "complete_bipartite":
        s, t = p
        return Graph.from_edges(s + t, [(i, s + j) for i in range(s) for j in range(t)])
    if kind == "hypercube":
        d = p[0]
        return Graph.from_edges(1 << d, [(x, x | (1 << b)) for x in range(1 << d) for b in range(d) if not x >> b & 1])
    if kind == "petersen":
        outer = [(i, (i + 1) % 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        return Graph.from_edges(10, outer + inner + spokes)
    if kind == "empty":
        return empty_graph(p[0])
    raise ParameterError(f"unknown family {kind!r}")


def degree_stats(g: Graph) -> tuple[int, int]:
    """``(max degree, edge count)``."""
    return g.max_degree(), g.m
