"""Exact exhaustive graph algorithms for small graphs.

Everything here works on :class:`~factorseq.graph.SmallGraph` bit-rows and is
meant as ground truth for the degree conditions, not as a scalable library:
Tutte pairs are found by scanning all ``3**n`` disjoint pairs, factors by
backtracking, matchings by Edmonds' blossom algorithm.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable

import numpy as np

from .errors import OverlappingSets, RangeError, TooFewVertices, TooLarge
from .graph import SmallGraph, _bits

TUTTE_LIMIT = 12


@dataclass(frozen=True)
class TutteCertificate:
    """A pair ``(A, B)`` whose Tutte functional is negative, so no k-factor exists."""

    A: frozenset[int]
    B: frozenset[int]
    k: int
    theta: int
    odd_count: int


def _mask(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _check_disjoint(g: SmallGraph, A: int, B: int):
    if A & B:
        raise OverlappingSets("A and B must be disjoint")
    if (A | B) & ~g.vertices:
        raise RangeError("vertex sets reference vertices outside the graph")


def components(g: SmallGraph, mask: int) -> list[int]:
    """Vertex masks of the connected components of the subgraph induced on ``mask``."""
    rows = g.rows
    out = []
    rest = mask
    while rest:
        seen = frontier = rest & -rest
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= rows[v]
            frontier = nxt & rest & ~seen
            seen |= frontier
        out.append(seen)
        rest &= ~seen
    return out


def _count_components(rows, mask: int) -> int:
    count = 0
    rest = mask
    while rest:
        seen = frontier = rest & -rest
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= rows[low.bit_length() - 1]
                m ^= low
            frontier = nxt & rest & ~seen
            seen |= frontier
        rest &= ~seen
        count += 1
    return count


def _odd_count(g: SmallGraph, A: int, B: int, k: int) -> int:
    C = g.vertices & ~(A | B)
    odd = 0
    for H in components(g, C):
        e_HB = sum((g.rows[h] & B).bit_count() for h in _bits(H))
        odd += (k * H.bit_count() + e_HB) & 1
    return odd


def odd_components(g: SmallGraph, A: Iterable[int], B: Iterable[int], k: int) -> int:
    """Number of components ``H`` of ``G - A - B`` with ``k|H| + e(H, B)`` odd."""
    A, B = _mask(A), _mask(B)
    _check_disjoint(g, A, B)
    return _odd_count(g, A, B, k)


def theta(g: SmallGraph, A: Iterable[int], B: Iterable[int], k: int) -> int:
    """Tutte's functional ``k|A| + sum_{u in B} d_{G-A}(u) - k|B| - odd_k(A, B)``."""
    A, B = _mask(A), _mask(B)
    _check_disjoint(g, A, B)
    inner = sum((g.rows[u] & ~A).bit_count() for u in _bits(B))
    return k * A.bit_count() + inner - k * B.bit_count() - _odd_count(g, A, B, k)


@lru_cache(maxsize=None)
def _pair_masks(n: int) -> tuple[np.ndarray, np.ndarray]:
    """All ``3**n`` disjoint ``(A, B)`` mask pairs."""
    A = np.zeros(1, dtype=np.int64)
    B = np.zeros(1, dtype=np.int64)
    for v in range(n):
        bit = 1 << v
        A = np.concatenate([A, A | bit, A])
        B = np.concatenate([B, B, B | bit])
    A.setflags(write=False)
    B.setflags(write=False)
    return A, B


def _component_reps(g: SmallGraph) -> np.ndarray:
    """``reps[C, v]`` = least vertex of v's component in ``G[C]``, or ``n`` if v not in C."""
    n = g.n
    C = np.arange(1 << n, dtype=np.int64)
    inside = (C[:, None] >> np.arange(n)) & 1
    reps = np.where(inside == 1, np.arange(n), n)
    edges = g.edges()
    changed = True
    while changed:
        changed = False
        for u, v in edges:
            both = (inside[:, u] & inside[:, v]).astype(bool)
            lo = np.minimum(reps[:, u], reps[:, v])
            upd = both & ((reps[:, u] != lo) | (reps[:, v] != lo))
            if upd.any():
                changed = True
                reps[upd, u] = lo[upd]
                reps[upd, v] = lo[upd]
    return reps


@lru_cache(maxsize=16)
def _theta_parts(g: SmallGraph) -> tuple[np.ndarray, ...]:
    """The k-independent pieces: ``theta = k*(|A|-|B|) + inner - odd[k % 2]``."""
    n = g.n
    A, B = _pair_masks(n)
    full = (1 << n) - 1
    C = full & ~(A | B)
    rows = np.array(g.rows, dtype=np.int64)
    diff = np.bitwise_count(A).astype(np.int64) - np.bitwise_count(B).astype(np.int64)
    inner = np.zeros(len(A), dtype=np.int64)
    for u in range(n):
        in_b = (B >> u) & 1
        inner += in_b * np.bitwise_count(rows[u] & ~A)
    reps = _component_reps(g)
    idx = np.arange(len(A))
    odd = []
    for k in (0, 1):
        parity = np.zeros((len(A), n + 1), dtype=np.uint8)
        for h in range(n):
            contrib = ((k + np.bitwise_count(rows[h] & B)) & 1).astype(np.uint8)
            parity[idx, reps[C, h]] ^= contrib
        # Column n collects the vertices outside C; it is not a component.
        odd.append(parity[:, :n].sum(axis=1, dtype=np.int64))
    return A, B, diff, inner, odd[0], odd[1]


def theta_table(g: SmallGraph, k: int) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Vectorised Tutte functional over every disjoint pair.

    Returns ``(A, B, theta, odd)`` arrays indexed alike.  The k-independent
    work is cached per graph, so scanning several k on one graph is cheap.
    """
    if g.n > TUTTE_LIMIT:
        raise TooLarge(f"3**{g.n} pair scan exceeds the limit n <= {TUTTE_LIMIT}")
    A, B, diff, inner, odd_even, odd_odd = _theta_parts(g)
    odd = odd_odd if k % 2 else odd_even
    return A, B, k * diff + inner - odd, odd


def find_tutte_pair(g: SmallGraph, k: int) -> TutteCertificate | None:
    """Minimum-theta k-Tutte pair, ties broken by least ``(mask(A), mask(B))``."""
    if k < 1:
        raise RangeError("k must be at least 1")
    A, B, th, odd = theta_table(g, k)
    best = int(th.min())
    if best >= 0:
        return None
    cand = np.flatnonzero(th == best)
    order = np.lexsort((B[cand], A[cand]))
    i = cand[order[0]]
    return TutteCertificate(
        A=frozenset(_bits(int(A[i]))),
        B=frozenset(_bits(int(B[i]))),
        k=k,
        theta=best,
        odd_count=int(odd[i]),
    )


def has_k_factor(g: SmallGraph, k: int) -> bool:
    """Backtracking search for a spanning k-regular subgraph."""
    if k < 0:
        raise RangeError("k must be nonnegative")
    n = g.n
    if k == 0:
        return True
    if (k * n) & 1 or any(r.bit_count() < k for r in g.rows):
        return False
    rows = g.rows
    need = [k] * n

    def feasible(v: int) -> bool:
        # Every vertex after v must still reach k through undecided edges.
        open_ = 0
        for u in range(v + 1, n):
            if need[u]:
                open_ |= 1 << u
        for u in range(v + 1, n):
            if need[u] > (rows[u] & open_).bit_count():
                return False
        return True

    # Once v's edges are chosen, what remains depends only on need[v:].
    dead: set[tuple[int, ...]] = set()

    def solve(v: int) -> bool:
        while v < n and need[v] == 0:
            v += 1
        if v == n:
            return True
        key = (v, *need[v:])
        if key in dead:
            return False
        cand = [u for u in _bits(rows[v]) if u > v and need[u]]
        r = need[v]
        if r <= len(cand):
            need[v] = 0
            for combo in combinations(cand, r):
                for u in combo:
                    need[u] -= 1
                if feasible(v) and solve(v + 1):
                    return True
                for u in combo:
                    need[u] += 1
            need[v] = r
        dead.add(key)
        return False

    return solve(0)


def max_matching(g: SmallGraph) -> list[tuple[int, int]]:
    """Maximum cardinality matching by Edmonds' blossom algorithm."""
    n = g.n
    adj = [tuple(_bits(r)) for r in g.rows]
    match = [-1] * n
    parent = [-1] * n
    base = list(range(n))

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]):
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def augment_from(root: int) -> bool:
        for i in range(n):
            parent[i] = -1
            base[i] = i
        used = [False] * n
        used[root] = True
        queue = [root]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        # Flip the alternating path ending at ``to``.
                        while to != -1:
                            pv = parent[to]
                            nxt = match[pv]
                            match[to], match[pv] = pv, to
                            to = nxt
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            for u in adj[v]:
                if match[u] == -1:
                    match[u], match[v] = v, u
                    break
    for v in range(n):
        if match[v] == -1:
            augment_from(v)
    return [(v, match[v]) for v in range(n) if v < match[v]]


def max_matching_size(g: SmallGraph) -> int:
    return len(max_matching(g))


def deficiency(g: SmallGraph) -> int:
    """Number of vertices left uncovered by a maximum matching."""
    return g.n - 2 * max_matching_size(g)


def is_hamiltonian(g: SmallGraph) -> bool:
    n = g.n
    if n < 3:
        raise TooFewVertices("hamiltonicity needs n >= 3")
    rows = g.rows
    if any(r.bit_count() < 2 for r in rows):
        return False
    full = g.vertices
    dead: set[tuple[int, int]] = set()

    def extend(v: int, visited: int) -> bool:
        if visited == full:
            return bool(rows[v] & 1)
        if (v, visited) in dead:
            return False
        for u in _bits(rows[v] & ~visited):
            if extend(u, visited | 1 << u):
                return True
        dead.add((v, visited))
        return False

    return extend(0, 1)


def toughness(g: SmallGraph) -> Fraction | None:
    """``min |X| / omega(G - X)`` over disconnecting ``X``; ``None`` if no such X exists."""
    rows = g.rows
    full = g.vertices
    best = None
    for X in range(full + 1):
        w = _count_components(rows, full & ~X)
        if w > 1:
            val = Fraction(X.bit_count(), w)
            if best is None or val < best:
                best = val
    return best


def toughness_at_least(g: SmallGraph, t) -> bool:
    """True iff ``t * omega(G - X) <= |X|`` for every X with ``omega(G - X) > 1``."""
    t = Fraction(t)
    p, q = t.numerator, t.denominator
    if p <= 0:
        return True
    rows = g.rows
    n = g.n
    full = g.vertices
    # A violating X has |X| < t * omega <= t * (n - |X|).
    for size in range(n):
        if q * size * (p + q) >= p * q * n:
            break
        for combo in combinations(range(n), size):
            X = 0
            for v in combo:
                X |= 1 << v
            w = _count_components(rows, full & ~X)
            if w > 1 and p * w > q * size:
                return False
    return True
