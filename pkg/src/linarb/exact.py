"""Exact linear k-arboricity of small graphs.

``exact_la_k`` runs a branch-and-bound decision search for increasing class
counts, one connected component at a time. ``brute_force_la_k`` is a naive
subset dynamic program kept only to cross-check it.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum

from . import search as _search
from .bounds import lower_bound
from .forests import Decomposition, LinearKForest, verify_forest
from .graph import Edge, Graph, ParameterError

BRUTE_FORCE_MAX_EDGES = 10


class Status(str, Enum):
    EXACT = "exact"
    LOWER_BOUND_ONLY = "lower-bound-only"

    def __str__(self) -> str:
        return self.value


class BudgetExhausted(RuntimeError):
    def __init__(self, nodes: int) -> None:
        super().__init__(f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes


@dataclass
class SearchStats:
    nodes: int = 0
    elapsed_ms: float = 0.0
    backend: str = _search.BACKEND
    refuted: dict[int, int] = field(default_factory=dict)  # component index -> largest refuted t


@dataclass(frozen=True)
class ExactResult:
    k: int
    value: int
    certificate: Decomposition | None
    stats: SearchStats
    status: Status

    @property
    def is_exact(self) -> bool:
        return self.status is Status.EXACT


@dataclass
class _Budget:
    deadline: float = 0.0
    node_limit: int = 0
    used: int = 0

    @classmethod
    def make(cls, budget_ms: float | None, node_limit: int | None) -> "_Budget":
        deadline = time.perf_counter() + budget_ms / 1000.0 if budget_ms is not None else 0.0
        return cls(deadline, node_limit or 0)

    def remaining_nodes(self) -> int:
        if not self.node_limit:
            return 0
        left = self.node_limit - self.used
        if left <= 0:
            raise BudgetExhausted(self.used)
        return left

    def check_clock(self) -> None:
        if self.deadline and time.perf_counter() > self.deadline:
            raise BudgetExhausted(self.used)


def edge_order(g: Graph) -> list[Edge]:
    """Larger endpoint degree first, then lexicographic."""
    return sorted(g.edges, key=lambda e: (-max(g.degree(e[0]), g.degree(e[1])), e))


def _decide(g: Graph, k: int, t: int, budget: _Budget, kernel) -> Decomposition | None:
    order = edge_order(g)
    budget.check_clock()
    status, assign, nodes = kernel(
        g.n, [e[0] for e in order], [e[1] for e in order], k, t, budget.remaining_nodes(), budget.deadline
    )
    budget.used += nodes
    if status == _search.BUDGET:
        raise BudgetExhausted(budget.used)
    if status == _search.INFEASIBLE:
        return None
    classes: list[list[Edge]] = [[] for _ in range(t)]
    for e, c in zip(order, assign):
        classes[c].append(e)
    return Decomposition.from_edge_sets(g, k, classes)


def feasible_with_t_classes(
    g: Graph,
    k: int,
    t: int,
    budget_ms: float | None = None,
    node_limit: int | None = None,
    kernel=None,
) -> Decomposition | None:
    """A decomposition into at most ``t`` linear k-forests, or ``None`` if none exists.

    Raises :class:`BudgetExhausted` when the search is cut off before deciding.
    """
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    if t < 0:
        raise ParameterError(f"t must be >= 0, got {t}")
    return _decide(g, k, t, _Budget.make(budget_ms, node_limit), kernel or _search.search)


def exact_la_k(
    g: Graph,
    k: int,
    budget_ms: float | None = None,
    node_limit: int | None = None,
    kernel=None,
) -> ExactResult:
    """Exact la_k(g), solving each component separately and taking the maximum.

    When the budget runs out the result carries the best proven lower bound and
    ``status`` is ``LOWER_BOUND_ONLY``.
    """
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    kernel = kernel or _search.search
    start = time.perf_counter()
    budget = _Budget.make(budget_ms, node_limit)
    stats = SearchStats(backend="python" if kernel is _search.python_search else _search.BACKEND)

    parts = []
    for comp in g.components():
        if len(comp) > 1:
            sub, labels = g.induced(comp)
            parts.append((sub, labels))
    # big components first so the running maximum rises early
    parts.sort(key=lambda p: (-p[0].m, p[1][0]))

    best = 0
    pieces: list[tuple[Decomposition, list[int]]] = []
    for index, (sub, labels) in enumerate(parts):
        t = max(lower_bound(sub, k), best)
        try:
            while True:
                cert = _decide(sub, k, t, budget, kernel)
                if cert is not None:
                    break
                stats.refuted[index] = t
                t += 1
        except BudgetExhausted:
            stats.nodes = budget.used
            stats.elapsed_ms = (time.perf_counter() - start) * 1000.0
            return ExactResult(k, max(best, t), None, stats, Status.LOWER_BOUND_ONLY)
        best = max(best, len(cert))
        pieces.append((cert, labels))

    classes: list[list[Edge]] = [[] for _ in range(best)]
    for cert, labels in pieces:
        for i, f in enumerate(cert.forests):
            classes[i].extend(tuple(sorted((labels[u], labels[v]))) for u, v in f.edges)
    stats.nodes = budget.used
    stats.elapsed_ms = (time.perf_counter() - start) * 1000.0
    return ExactResult(k, best, Decomposition.from_edge_sets(g, k, classes), stats, Status.EXACT)


def brute_force_la_k(g: Graph, k: int) -> int:
    """la_k by minimum partition of the edge set into linear k-forests (``|E| <= 10``)."""
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    m = g.m
    if m > BRUTE_FORCE_MAX_EDGES:
        raise ParameterError(f"brute force limited to {BRUTE_FORCE_MAX_EDGES} edges, got {m}")
    full = (1 << m) - 1
    valid = [False] * (full + 1)
    for s in range(1, full + 1):
        edges = tuple(g.edges[i] for i in range(m) if s >> i & 1)
        valid[s] = verify_forest(g, LinearKForest(k, edges)) is None
    best = [0] * (full + 1)
    for s in range(1, full + 1):
        low = s & -s
        rest = s ^ low
        result = m + 1
        # every submask of s that contains its lowest edge
        sub = rest
        while True:
            block = sub | low
            if valid[block] and best[s ^ block] + 1 < result:
                result = best[s ^ block] + 1
            if sub == 0:
                break
            sub = (sub - 1) & rest
        best[s] = result
    return best[full]
