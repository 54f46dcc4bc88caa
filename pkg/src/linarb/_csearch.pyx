# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled branch-and-bound kernel; mirrors ``_pysearch.search`` exactly."""

from libc.stdlib cimport malloc, calloc, free
from time import perf_counter

cdef enum:
    CLOCK_EVERY = 1024

FOUND, INFEASIBLE, BUDGET = 0, 1, 2


def search(int n, eu, ev, int k, int t, long long node_limit=0, double deadline=0.0):
    cdef int m = len(eu)
    if m == 0:
        return FOUND, [], 0
    if t <= 0:
        return INFEASIBLE, [], 0
    cdef int size = t * n
    cdef int *deg = <int *> calloc(size, sizeof(int))
    cdef int *parent = <int *> malloc(size * sizeof(int))
    cdef int *rank = <int *> calloc(size, sizeof(int))
    cdef int *length = <int *> calloc(size, sizeof(int))
    cdef int *U = <int *> malloc(m * sizeof(int))
    cdef int *V = <int *> malloc(m * sizeof(int))
    cdef int *assign = <int *> malloc(m * sizeof(int))
    cdef int *opened = <int *> calloc(m + 1, sizeof(int))
    cdef int *child = <int *> calloc(m, sizeof(int))
    cdef char *bumped = <char *> calloc(m, sizeof(char))
    cdef int *nxt = <int *> calloc(m, sizeof(int))
    cdef int i, c, lim, u, v, pu, pv, ru, rv, tmp
    cdef bint placed
    cdef long long nodes = 0
    cdef int status = -1
    if not (deg and parent and rank and length and U and V and assign and opened and child and bumped and nxt):
        free(deg); free(parent); free(rank); free(length); free(U); free(V)
        free(assign); free(opened); free(child); free(bumped); free(nxt)
        raise MemoryError()
    try:
        for i in range(size):
            parent[i] = i
        for i in range(m):
            U[i] = eu[i]
            V[i] = ev[i]
            assign[i] = -1
        i = 0
        while True:
            if i == m:
                status = FOUND
                break
            u = U[i]
            v = V[i]
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
                            tmp = ru
                            ru = rv
                            rv = tmp
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
                status = BUDGET
                break
            if deadline and nodes % CLOCK_EVERY == 0 and perf_counter() > deadline:
                status = BUDGET
                break
            if not placed:
                i -= 1
                if i < 0:
                    status = INFEASIBLE
                    break
                c = assign[i]
                rv = child[i]
                ru = parent[rv]
                parent[rv] = rv
                length[ru] -= length[rv] + 1
                if bumped[i]:
                    rank[ru] -= 1
                deg[c * n + U[i]] -= 1
                deg[c * n + V[i]] -= 1
                assign[i] = -1
        if status == FOUND:
            return FOUND, [assign[i] for i in range(m)], nodes
        return status, [], nodes
    finally:
        free(deg); free(parent); free(rank); free(length); free(U); free(V)
        free(assign); free(opened); free(child); free(bumped); free(nxt)
