"""Pure-Python routing kernel: exhaustive edge-disjoint path packing.

Given a host graph (CSR adjacency), a tuple of terminal vertices and the list
of terminal-index pairs to connect, decide whether all pairs can be routed
along pairwise edge-disjoint simple paths, and return one such routing when it
exists.  The search is complete: a negative answer means no routing exists.

Search order (must stay in lockstep with the compiled twin in _routing.pyx):

* at each node the unrouted pair with the fewest shortest residual paths is
  routed next (ties: lowest pair index);
* candidate paths for that pair are enumerated shortest-first, and within one
  length in lexicographic order of the vertex sequence;
* before branching, every terminal must retain at least as many unused
  incident edges as it has unrouted pairs, and the residual edge count must
  cover the unrouted pair count, or the branch is abandoned.

Node expansions are counted at every search-tree entry (route / extend call);
exceeding the budget aborts the whole call with an inconclusive status.

Statuses: 0 = routed, 1 = exhausted (no routing exists), 2 = budget exceeded,
3 = deadline passed.
"""

from __future__ import annotations

from time import monotonic

BACKEND_NAME = "pure"

_COUNT_CAP = 1 << 30  # saturation for shortest-path counts

# internal recursion statuses
_FAIL = 0
_DONE = 1
_BUDGET = 2
_TIME = 3


def route_pairs(n, indptr, nbrs, eids, m, terminals, pairs, budget=None, deadline=None):
    """Returns ``(status, walks, expansions)``.

    ``walks`` lists one vertex sequence per entry of ``pairs`` (same order)
    when status is 0, else None.  ``budget`` is the maximum number of node
    expansions (None = unlimited); ``deadline`` is a time.monotonic() stamp.
    """
    k = len(terminals)
    num_pairs = len(pairs)
    bud = -1 if budget is None else budget

    used = bytearray(m)
    free_deg = [indptr[v + 1] - indptr[v] for v in range(n)]
    rem = [0] * k
    for a, b in pairs:
        rem[a] += 1
        rem[b] += 1
    routed: list = [None] * num_pairs

    # state[0] = expansions, state[1] = unrouted pairs, state[2] = used edges
    state = [0, num_pairs, 0]

    # scratch, one row per routing level (level = number of already-routed
    # pairs); paths of different pairs may share vertices, so the visited
    # marks of one pair's enumeration must not leak into another's
    dist = [0] * n
    cnt = [0] * n
    dmap = [0] * n
    visited = [bytearray(n) for _ in range(num_pairs + 1)]
    path_v = [[0] * (n + 1) for _ in range(num_pairs + 1)]
    path_e = [[0] * (n + 1) for _ in range(num_pairs + 1)]
    unreach = n + 1

    def tick():
        state[0] += 1
        if 0 <= bud < state[0]:
            return _BUDGET
        if deadline is not None and (state[0] & 4095) == 0 and monotonic() > deadline:
            return _TIME
        return _FAIL

    def bfs_count(src, dst):
        # residual BFS; returns (dist, number of shortest paths, saturated)
        for v in range(n):
            dist[v] = -1
            cnt[v] = 0
        dist[src] = 0
        cnt[src] = 1
        queue = [src]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            dv = dist[v]
            for ai in range(indptr[v], indptr[v + 1]):
                if used[eids[ai]]:
                    continue
                w = nbrs[ai]
                if dist[w] < 0:
                    dist[w] = dv + 1
                    cnt[w] = cnt[v]
                    queue.append(w)
                elif dist[w] == dv + 1:
                    c = cnt[w] + cnt[v]
                    cnt[w] = c if c < _COUNT_CAP else _COUNT_CAP
        if dist[dst] < 0:
            return -1, 0
        return dist[dst], cnt[dst]

    def bfs_dist_to(dst):
        # residual distances toward dst, written into dmap (unreach = n + 1)
        for v in range(n):
            dmap[v] = unreach
        dmap[dst] = 0
        queue = [dst]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            dv = dmap[v]
            for ai in range(indptr[v], indptr[v + 1]):
                if used[eids[ai]]:
                    continue
                w = nbrs[ai]
                if dmap[w] == unreach:
                    dmap[w] = dv + 1
                    queue.append(w)

    def route():
        st = tick()
        if st:
            return st
        if state[1] == 0:
            return _DONE
        for i in range(k):
            if rem[i] > free_deg[terminals[i]]:
                return _FAIL
        if state[1] > m - state[2]:
            return _FAIL
        best_pi = -1
        best_cnt = 0
        best_dist = 0
        for pi in range(num_pairs):
            if routed[pi] is not None:
                continue
            a, b = pairs[pi]
            d, c = bfs_count(terminals[a], terminals[b])
            if d < 0:
                return _FAIL
            if best_pi < 0 or c < best_cnt:
                best_pi = pi
                best_cnt = c
                best_dist = d
        a, b = pairs[best_pi]
        src = terminals[a]
        dst = terminals[b]
        bfs_dist_to(dst)
        level = num_pairs - state[1]
        hi = m - state[2]
        if hi > n - 1:
            hi = n - 1
        length = best_dist
        while length <= hi:
            visited[level][src] = 1
            path_v[level][0] = src
            st = extend(level, best_pi, dst, src, 0, length)
            visited[level][src] = 0
            if st:
                return st
            length += 1
        return _FAIL

    def extend(level, pi, dst, v, depth, length):
        st = tick()
        if st:
            return st
        pv = path_v[level]
        pe = path_e[level]
        seen = visited[level]
        for ai in range(indptr[v], indptr[v + 1]):
            e = eids[ai]
            if used[e]:
                continue
            w = nbrs[ai]
            if seen[w]:
                continue
            nd = depth + 1
            if w == dst:
                if nd != length:
                    continue
            elif nd >= length or dmap[w] > length - nd:
                continue
            pe[depth] = e
            pv[nd] = w
            if nd == length:
                st = commit(level, pi, length)
            else:
                seen[w] = 1
                st = extend(level, pi, dst, w, nd, length)
                seen[w] = 0
            if st:
                return st
        return _FAIL

    def commit(level, pi, length):
        walk = path_v[level][: length + 1]
        edge_ids = path_e[level][:length]
        for s in range(length):
            used[edge_ids[s]] = 1
            free_deg[walk[s]] -= 1
            free_deg[walk[s + 1]] -= 1
        a, b = pairs[pi]
        rem[a] -= 1
        rem[b] -= 1
        routed[pi] = walk
        state[1] -= 1
        state[2] += length
        st = route()
        if st == _DONE:
            return _DONE
        routed[pi] = None
        rem[a] += 1
        rem[b] += 1
        state[1] += 1
        state[2] -= length
        for s in range(length):
            used[edge_ids[s]] = 0
            free_deg[walk[s]] += 1
            free_deg[walk[s + 1]] += 1
        return st

    st = route()
    if st == _DONE:
        return 0, [list(routed[pi]) for pi in range(num_pairs)], state[0]
    if st == _FAIL:
        return 1, None, state[0]
    return (2 if st == _BUDGET else 3), None, state[0]
