"""Pure-Python branch-and-bound kernel.

Must stay step-for-step identical to ``_csearch.pyx``: both report the same
node counts for the same input.
"""

from time import perf_counter

FOUND, INFEASIBLE, BUDGET = 0, 1, 2
_CLOCK_EVERY = 1024


def search(n, eu, ev, k, t, node_limit=0, deadline=0.0):
    """Assign each edge ``(eu[i], ev[i])`` to one of ``t`` linear k-forest classes.

    Edges are taken in the given order. Edge ``i`` may open class ``j`` only when
    classes ``0..j-1`` are already open. Returns ``(status, assignment, nodes)``.
    ``node_limit`` of 0 and ``deadline`` of 0.0 disable the respective budget.
    """
    m = len(eu)
    if m == 0:
        return FOUND, [], 0
    if t <= 0:
        return INFEASIBLE, [], 0
    size = t * n
    deg = [0] * size
    parent = list(range(size))
    rank = [0] * size
    length = [0] * size
    assign = [-1] * m
    opened = [0] * (m + 1)
    child = [0] * m
    bumped = [0] * m
    nxt = [0] * m
    i = 0
    nodes = 0
    while True:
        if i == m:
            return FOUND, assign, nodes
        u = eu[i]
        v = ev[i]
        c = nxt[i]
        lim = opened[i] + 1
        if lim > t:
            lim = t
        placed = False
        while c < lim:
            pu = c * n + u
            pv = c * n + v
            if deg[pu] < 2 and deg[pv] < 2:
                ru = pu
                while parent[ru] != ru:
                    ru = parent[ru]
                rv = pv
                while parent[rv] != rv:
                    rv = parent[rv]
                if ru != rv and length[ru] + length[rv] < k:
                    if rank[ru] < rank[rv]:
                        ru, rv = rv, ru
                    parent[rv] = ru
                    length[ru] += length[rv] + 1
                    if rank[ru] == rank[rv]:
                        rank[ru] += 1
                        bumped[i] = 1
                    else:
                        bumped[i] = 0
                    child[i] = rv
                    deg[pu] += 1
                    deg[pv] += 1
                    assign[i] = c
                    nxt[i] = c + 1
                    opened[i + 1] = opened[i] if opened[i] > c else c + 1
                    i += 1
                    if i < m:
                        nxt[i] = 0
                    placed = True
                    break
            c += 1
        nodes += 1
        if node_limit and nodes >= node_limit:
            return BUDGET, [], nodes
        if deadline and nodes % _CLOCK_EVERY == 0 and perf_counter() > deadline:
            return BUDGET, [], nodes
        if not placed:
            i -= 1
            if i < 0:
                return INFEASIBLE, [], nodes
            c = assign[i]
            rv = child[i]
            ru = parent[rv]
            parent[rv] = rv
            length[ru] -= length[rv] + 1
            if bumped[i]:
                rank[ru] -= 1
            deg[c * n + eu[i]] -= 1
            deg[c * n + ev[i]] -= 1
            assign[i] = -1
