"""Hopcroft-Karp maximum bipartite matching and König vertex covers.

Bipartite graphs are given in CSR form: left vertex ``u`` is adjacent to the
right vertices ``indices[indptr[u]:indptr[u + 1]]``. Both sides are numbered
``0..n_left-1`` / ``0..n_right-1``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

UNMATCHED = -1


@dataclass
class Matching:
    match_left: list  # right partner of each left vertex, or UNMATCHED
    match_right: list  # left partner of each right vertex, or UNMATCHED

    @property
    def size(self) -> int:
        return sum(1 for v in self.match_left if v != UNMATCHED)

    def pairs(self):
        return [(u, v) for u, v in enumerate(self.match_left) if v != UNMATCHED]


def hopcroft_karp(n_left: int, n_right: int, indptr, indices) -> Matching:
    """Maximum cardinality matching in O(E sqrt(V)).

    Starts from a greedy matching that scans left vertices, and their
    neighbours, in ascending order, so the result is deterministic.
    """
    match_l = [UNMATCHED] * n_left
    match_r = [UNMATCHED] * n_right
    for u in range(n_left):
        for k in range(indptr[u], indptr[u + 1]):
            v = indices[k]
            if match_r[v] == UNMATCHED:
                match_l[u] = v
                match_r[v] = u
                break

    inf = n_left + n_right + 1
    dist = [0] * n_left
    while True:
        # layered BFS from every free left vertex
        q = deque()
        for u in range(n_left):
            if match_l[u] == UNMATCHED:
                dist[u] = 0
                q.append(u)
            else:
                dist[u] = inf
        limit = inf
        while q:
            u = q.popleft()
            du = dist[u]
            if du >= limit:
                continue
            for k in range(indptr[u], indptr[u + 1]):
                w = match_r[indices[k]]
                if w == UNMATCHED:
                    if limit == inf:
                        limit = du + 1
                elif dist[w] == inf:
                    dist[w] = du + 1
                    q.append(w)
        if limit == inf:
            break

        # vertex-disjoint shortest augmenting paths by iterative DFS
        ptr = list(indptr[:-1])
        for s in range(n_left):
            if match_l[s] != UNMATCHED:
                continue
            stack = [s]
            while stack:
                u = stack[-1]
                advanced = False
                end = indptr[u + 1]
                while ptr[u] < end:
                    v = indices[ptr[u]]
                    ptr[u] += 1
                    w = match_r[v]
                    if w == UNMATCHED:
                        if dist[u] + 1 == limit:
                            # augment along the stack
                            for depth in range(len(stack) - 1, -1, -1):
                                a = stack[depth]
                                prev = match_l[a]
                                match_l[a] = v
                                match_r[v] = a
                                v = prev
                            stack = []
                            advanced = True
                            break
                    elif dist[w] == dist[u] + 1:
                        stack.append(w)
                        advanced = True
                        break
                if not advanced:
                    dist[u] = inf
                    stack.pop()
    return Matching(match_l, match_r)


def konig_cover(n_left: int, n_right: int, indptr, indices, matching: Matching):
    """Minimum vertex cover from a maximum matching (König's theorem).

    Returns ``(cover_left, cover_right)`` as boolean lists. With ``Z`` the
    vertices reachable from free left vertices by alternating paths, the
    cover is ``(L - Z) | (R & Z)``.
    """
    match_l, match_r = matching.match_left, matching.match_right
    seen_l = [False] * n_left
    seen_r = [False] * n_right
    q = deque(u for u in range(n_left) if match_l[u] == UNMATCHED)
    for u in q:
        seen_l[u] = True
    while q:
        u = q.popleft()
        for k in range(indptr[u], indptr[u + 1]):
            v = indices[k]
            if seen_r[v]:
                continue
            seen_r[v] = True
            w = match_r[v]
            if w != UNMATCHED and not seen_l[w]:
                seen_l[w] = True
                q.append(w)
    return [not s for s in seen_l], seen_r


def maximum_antichain_csr(k: int, indptr, indices):
    """Maximum antichain of a transitively closed strict order on ``0..k-1``.

    ``indices[indptr[u]:indptr[u+1]]`` lists the elements above ``u``. The
    split graph has an edge ``u_L - v_R`` for each ``u < v``; the elements
    with neither copy in a minimum vertex cover are pairwise incomparable,
    and there are ``k - |matching|`` of them (Dilworth).

    Returns ``(antichain, matching)``.
    """
    matching = hopcroft_karp(k, k, indptr, indices)
    cover_l, cover_r = konig_cover(k, k, indptr, indices, matching)
    antichain = [u for u in range(k) if not cover_l[u] and not cover_r[u]]
    return antichain, matching
