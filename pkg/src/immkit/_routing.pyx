# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled routing kernel: exhaustive edge-disjoint path packing.

Twin of _routing_py (see that module for the algorithm contract).  The
traversal order and node-expansion accounting must stay in exact lockstep
with the pure-Python implementation: callers rely on both backends producing
byte-identical results, including budget-exhaustion boundaries.
"""

from libc.stdlib cimport calloc, free

from time import monotonic

BACKEND_NAME = "compiled"

cdef long long COUNT_CAP = (<long long>1) << 30

cdef enum:
    ST_FAIL = 0
    ST_DONE = 1
    ST_BUDGET = 2
    ST_TIME = 3


cdef class _Router:
    cdef int n, m, k, num_pairs
    cdef long long expansions, budget
    cdef double deadline
    cdef bint has_deadline
    cdef int unrouted, used_count
    cdef int *indptr
    cdef int *nbrs
    cdef int *eids
    cdef int *terminals
    cdef int *pair_a
    cdef int *pair_b
    cdef char *used
    cdef char *visited
    cdef int *free_deg
    cdef int *rem
    cdef int *dist
    cdef long long *cnt
    cdef int *dmap
    cdef int *queue
    cdef int *path_v        # (num_pairs + 1) rows of (n + 1) entries
    cdef int *path_e
    cdef int *routed_level  # -1 while unrouted
    cdef int *routed_len
    cdef long long bfs_cnt_out

    def __cinit__(self, int n, indptr, nbrs, eids, int m, terminals, pairs,
                  budget, deadline):
        cdef int i, arcs, a, b
        self.n = n
        self.m = m
        self.k = len(terminals)
        self.num_pairs = len(pairs)
        self.budget = -1 if budget is None else <long long>budget
        if deadline is None:
            self.has_deadline = False
            self.deadline = 0.0
        else:
            self.has_deadline = True
            self.deadline = <double>deadline
        arcs = len(nbrs)
        self.indptr = <int *>calloc(n + 1, sizeof(int))
        self.nbrs = <int *>calloc(arcs if arcs > 0 else 1, sizeof(int))
        self.eids = <int *>calloc(arcs if arcs > 0 else 1, sizeof(int))
        self.terminals = <int *>calloc(self.k if self.k > 0 else 1, sizeof(int))
        self.pair_a = <int *>calloc(self.num_pairs if self.num_pairs > 0 else 1, sizeof(int))
        self.pair_b = <int *>calloc(self.num_pairs if self.num_pairs > 0 else 1, sizeof(int))
        self.used = <char *>calloc(m if m > 0 else 1, sizeof(char))
        self.visited = <char *>calloc((self.num_pairs + 1) * (n if n > 0 else 1), sizeof(char))
        self.free_deg = <int *>calloc(n if n > 0 else 1, sizeof(int))
        self.rem = <int *>calloc(self.k if self.k > 0 else 1, sizeof(int))
        self.dist = <int *>calloc(n if n > 0 else 1, sizeof(int))
        self.cnt = <long long *>calloc(n if n > 0 else 1, sizeof(long long))
        self.dmap = <int *>calloc(n if n > 0 else 1, sizeof(int))
        self.queue = <int *>calloc(n if n > 0 else 1, sizeof(int))
        self.path_v = <int *>calloc((self.num_pairs + 1) * (n + 1), sizeof(int))
        self.path_e = <int *>calloc((self.num_pairs + 1) * (n + 1), sizeof(int))
        self.routed_level = <int *>calloc(self.num_pairs if self.num_pairs > 0 else 1, sizeof(int))
        self.routed_len = <int *>calloc(self.num_pairs if self.num_pairs > 0 else 1, sizeof(int))
        if (self.indptr == NULL or self.nbrs == NULL or self.eids == NULL
                or self.terminals == NULL or self.pair_a == NULL
                or self.pair_b == NULL or self.used == NULL
                or self.visited == NULL or self.free_deg == NULL
                or self.rem == NULL or self.dist == NULL or self.cnt == NULL
                or self.dmap == NULL or self.queue == NULL
                or self.path_v == NULL or self.path_e == NULL
                or self.routed_level == NULL or self.routed_len == NULL):
            raise MemoryError()
        for i in range(n + 1):
            self.indptr[i] = indptr[i]
        for i in range(arcs):
            self.nbrs[i] = nbrs[i]
            self.eids[i] = eids[i]
        for i in range(self.k):
            self.terminals[i] = terminals[i]
        for i in range(self.num_pairs):
            a, b = pairs[i]
            self.pair_a[i] = a
            self.pair_b[i] = b
            self.rem[a] += 1
            self.rem[b] += 1
            self.routed_level[i] = -1
        for i in range(n):
            self.free_deg[i] = self.indptr[i + 1] - self.indptr[i]
        self.expansions = 0
        self.unrouted = self.num_pairs
        self.used_count = 0

    def __dealloc__(self):
        free(self.indptr)
        free(self.nbrs)
        free(self.eids)
        free(self.terminals)
        free(self.pair_a)
        free(self.pair_b)
        free(self.used)
        free(self.visited)
        free(self.free_deg)
        free(self.rem)
        free(self.dist)
        free(self.cnt)
        free(self.dmap)
        free(self.queue)
        free(self.path_v)
        free(self.path_e)
        free(self.routed_level)
        free(self.routed_len)

    cdef int tick(self) except -1:
        self.expansions += 1
        if 0 <= self.budget < self.expansions:
            return ST_BUDGET
        if (self.has_deadline and (self.expansions & 4095) == 0
                and monotonic() > self.deadline):
            return ST_TIME
        return ST_FAIL

    cdef int bfs_count(self, int src, int dst):
        cdef int v, w, ai, head, tail, dv
        cdef long long c
        for v in range(self.n):
            self.dist[v] = -1
            self.cnt[v] = 0
        self.dist[src] = 0
        self.cnt[src] = 1
        self.queue[0] = src
        head = 0
        tail = 1
        while head < tail:
            v = self.queue[head]
            head += 1
            dv = self.dist[v]
            for ai in range(self.indptr[v], self.indptr[v + 1]):
                if self.used[self.eids[ai]]:
                    continue
                w = self.nbrs[ai]
                if self.dist[w] < 0:
                    self.dist[w] = dv + 1
                    self.cnt[w] = self.cnt[v]
                    self.queue[tail] = w
                    tail += 1
                elif self.dist[w] == dv + 1:
                    c = self.cnt[w] + self.cnt[v]
                    self.cnt[w] = c if c < COUNT_CAP else COUNT_CAP
        if self.dist[dst] < 0:
            self.bfs_cnt_out = 0
            return -1
        self.bfs_cnt_out = self.cnt[dst]
        return self.dist[dst]

    cdef void bfs_dist_to(self, int dst):
        cdef int v, w, ai, head, tail, dv, unreach
        unreach = self.n + 1
        for v in range(self.n):
            self.dmap[v] = unreach
        self.dmap[dst] = 0
        self.queue[0] = dst
        head = 0
        tail = 1
        while head < tail:
            v = self.queue[head]
            head += 1
            dv = self.dmap[v]
            for ai in range(self.indptr[v], self.indptr[v + 1]):
                if self.used[self.eids[ai]]:
                    continue
                w = self.nbrs[ai]
                if self.dmap[w] == unreach:
                    self.dmap[w] = dv + 1
                    self.queue[tail] = w
                    tail += 1

    cdef int route(self) except -1:
        cdef int st, i, pi, d, best_pi, best_dist, a, b, src, dst, level, hi, length
        cdef long long c, best_cnt
        st = self.tick()
        if st:
            return st
        if self.unrouted == 0:
            return ST_DONE
        for i in range(self.k):
            if self.rem[i] > self.free_deg[self.terminals[i]]:
                return ST_FAIL
        if self.unrouted > self.m - self.used_count:
            return ST_FAIL
        best_pi = -1
        best_cnt = 0
        best_dist = 0
        for pi in range(self.num_pairs):
            if self.routed_level[pi] >= 0:
                continue
            d = self.bfs_count(self.terminals[self.pair_a[pi]],
                               self.terminals[self.pair_b[pi]])
            if d < 0:
                return ST_FAIL
            c = self.bfs_cnt_out
            if best_pi < 0 or c < best_cnt:
                best_pi = pi
                best_cnt = c
                best_dist = d
        src = self.terminals[self.pair_a[best_pi]]
        dst = self.terminals[self.pair_b[best_pi]]
        self.bfs_dist_to(dst)
        level = self.num_pairs - self.unrouted
        hi = self.m - self.used_count
        if hi > self.n - 1:
            hi = self.n - 1
        length = best_dist
        while length <= hi:
            self.visited[level * self.n + src] = 1
            self.path_v[level * (self.n + 1)] = src
            st = self.extend(level, best_pi, dst, src, 0, length)
            self.visited[level * self.n + src] = 0
            if st:
                return st
            length += 1
        return ST_FAIL

    cdef int extend(self, int level, int pi, int dst, int v, int depth,
                    int length) except -1:
        cdef int st, ai, e, w, nd, row, vrow
        st = self.tick()
        if st:
            return st
        row = level * (self.n + 1)
        vrow = level * self.n
        for ai in range(self.indptr[v], self.indptr[v + 1]):
            e = self.eids[ai]
            if self.used[e]:
                continue
            w = self.nbrs[ai]
            if self.visited[vrow + w]:
                continue
            nd = depth + 1
            if w == dst:
                if nd != length:
                    continue
            elif nd >= length or self.dmap[w] > length - nd:
                continue
            self.path_e[row + depth] = e
            self.path_v[row + nd] = w
            if nd == length:
                st = self.commit(level, pi, length)
            else:
                self.visited[vrow + w] = 1
                st = self.extend(level, pi, dst, w, nd, length)
                self.visited[vrow + w] = 0
            if st:
                return st
        return ST_FAIL

    cdef int commit(self, int level, int pi, int length) except -1:
        cdef int st, s, row, a, b
        row = level * (self.n + 1)
        for s in range(length):
            self.used[self.path_e[row + s]] = 1
            self.free_deg[self.path_v[row + s]] -= 1
            self.free_deg[self.path_v[row + s + 1]] -= 1
        a = self.pair_a[pi]
        b = self.pair_b[pi]
        self.rem[a] -= 1
        self.rem[b] -= 1
        self.routed_level[pi] = level
        self.routed_len[pi] = length
        self.unrouted -= 1
        self.used_count += length
        st = self.route()
        if st == ST_DONE:
            return ST_DONE
        self.routed_level[pi] = -1
        self.rem[a] += 1
        self.rem[b] += 1
        self.unrouted += 1
        self.used_count -= length
        for s in range(length):
            self.used[self.path_e[row + s]] = 0
            self.free_deg[self.path_v[row + s]] += 1
            self.free_deg[self.path_v[row + s + 1]] += 1
        return st

    def run(self):
        cdef int st, pi, s, row
        st = self.route()
        if st == ST_DONE:
            walks = []
            for pi in range(self.num_pairs):
                row = self.routed_level[pi] * (self.n + 1)
                walks.append(
                    [self.path_v[row + s] for s in range(self.routed_len[pi] + 1)]
                )
            return 0, walks, self.expansions
        if st == ST_FAIL:
            return 1, None, self.expansions
        return (2 if st == ST_BUDGET else 3), None, self.expansions


def route_pairs(n, indptr, nbrs, eids, m, terminals, pairs, budget=None,
                deadline=None):
    """Same contract as _routing_py.route_pairs."""
    router = _Router(n, indptr, nbrs, eids, m, terminals, pairs, budget, deadline)
    return router.run()
