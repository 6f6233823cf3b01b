"""Exact "is some realization's deficiency above beta?" by memoised search.

Rows are fixed one vertex at a time, highest residual first.  Once the rows of
a set ``D`` are fixed, every remaining edge lies inside the rest ``R``, so a
maximum matching of the final graph splits into a matching of the fixed part
and a matching of the unknown graph ``H`` on ``R``.  All that matters about
the fixed part is therefore the table

    cover[Y] = fewest unmatched D-vertices over matchings of the fixed part
               whose R-vertices are exactly Y,

capped at ``beta + 1``, and we may replace it by its upward closure
``min over Y' >= Y of cover[Y'] + |Y' - Y|`` (uncovering |Z| vertices lowers
the deficiency of the rest by at most |Z|).  The state ``(residuals, cover)``
with ``R`` put in a canonical order is an exact memo key, independent of the
sequence that led to it, so the memo is shared between calls.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .seqcore import graphical

try:
    from numba import njit
except ImportError:  # pragma: no cover - same code, interpreted
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


@njit(cache=True)
def _closure(g, m, cap):
    size = 1 << m
    for b in range(m):
        bit = 1 << b
        for y in range(size):
            if not y & bit:
                t = g[y | bit] + 1
                if t < g[y]:
                    g[y] = t
    for y in range(size):
        if g[y] > cap:
            g[y] = cap


@njit(cache=True)
def _child(g, m, nbr, cap):
    """Table after fixing the row of R's first vertex; ``nbr`` is over R minus it."""
    size = 1 << (m - 1)
    out = np.empty(size, np.int8)
    for y in range(size):
        v = min(g[(y << 1) | 1], g[y << 1] + 1)
        yy = y & nbr
        while yy:
            low = yy & -yy
            w = g[(y & ~low) << 1]
            if w < v:
                v = w
            yy ^= low
        out[y] = v
    _closure(out, m - 1, cap)
    return out


@njit(cache=True)
def _canon(res, g, m, cap):
    """Relabel R by (residual desc, cover-value histogram); returns (perm, table)."""
    size = 1 << m
    base = size + 1
    keys = np.empty(m, np.int64)
    for v in range(m):
        hist = np.zeros(cap + 1, np.int64)
        for y in range(size):
            if (y >> v) & 1:
                hist[g[y]] += 1
        key = -res[v]
        for c in range(cap + 1):
            key = key * base + hist[c]
        keys[v] = key
    perm = np.argsort(keys, kind="mergesort")
    out = np.empty(size, np.int8)
    for y in range(size):
        src = 0
        for p in range(m):
            if (y >> p) & 1:
                src |= 1 << perm[p]
        out[y] = g[src]
    return perm, out


@njit(cache=True)
def _settled(g, m, beta):
    # Even leaving all of R\Y unmatched keeps the deficiency within beta.
    for y in range(1 << m):
        free = m
        x = y
        while x:
            x &= x - 1
            free -= 1
        if g[y] + free <= beta:
            return True
    return False


_MEMO: dict[int, dict] = {}


def deficiency_exceeds_somewhere(degrees, beta: int) -> bool:
    """True iff some realization of the graphical ``degrees`` has deficiency > beta."""
    cap = beta + 1
    memo = _MEMO.setdefault(beta, {})

    def solve(res: tuple[int, ...], g: np.ndarray) -> bool:
        m = len(res)
        if m == 0:
            return bool(g[0] > beta)
        if _settled(g, m, beta):
            return False
        perm, g = _canon(np.array(res, dtype=np.int64), g, m, cap)
        res = tuple(res[p] for p in perm)
        key = (res, g.tobytes())
        hit = memo.get(key)
        if hit is not None:
            return hit
        need, tail = res[0], res[1:]
        cand = [j for j, x in enumerate(tail) if x]
        found = False
        for combo in combinations(cand, need):
            nxt = list(tail)
            nbr = 0
            for j in combo:
                nxt[j] -= 1
                nbr |= 1 << j
            if graphical(nxt) and solve(tuple(nxt), _child(g, m, nbr, cap)):
                found = True
                break
        memo[key] = found
        return found

    n = len(degrees)
    g0 = np.full(1 << n, cap, dtype=np.int8)
    g0[0] = 0
    _closure(g0, n, cap)
    return solve(tuple(sorted(degrees, reverse=True)), g0)
