"""Exhaustive realizations of a degree sequence, and the forcibly/potentially oracles.

Realizations are labeled: vertex ``i`` always has degree ``pi[i]``.  The search
fixes the adjacency row of vertex 0, then vertex 1, and so on.  Within a row
the neighbour sets are tried in the order that makes the full pair vector
``x(0,1), x(0,2), ..., x(n-2,n-1)`` lexicographically decreasing (edge before
non-edge), after each row the remaining residual degrees must still be
graphical, so every branch of the search ends in at least one graph.

The oracles add two accelerators that never change their answer:

* symmetry breaking -- consecutive vertices of equal degree must have
  lexicographically nonincreasing adjacency rows (the lex-largest member of
  every isomorphism class survives);
* monotone pruning -- all four properties survive adding edges, so once the
  edges fixed so far already have the property, every completion has it.

Deficiency and perfect-matching queries are first decided by the memoised
cover-table search in :mod:`factorseq._coverdp`; the graph search only runs
when that search reports a counterexample, to name the first one.

Because the lex-largest counterexample always survives both filters, the
reported counterexample is the same one a plain labeled scan finds first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, islice
from typing import Iterator

from ._coverdp import deficiency_exceeds_somewhere
from .errors import NotGraphical, RangeError, TooLarge
from .graph import SmallGraph
from .oracle import deficiency, has_k_factor, is_hamiltonian, toughness_at_least
from .seqcore import DegreeSequence, graphical, is_graphical, realize, render

ENUM_CAP = 12
SEQUENCE_CAP = 10


# -- properties ---------------------------------------------------------------


@dataclass(frozen=True)
class KFactor:
    k: int

    def holds(self, g: SmallGraph) -> bool:
        return has_k_factor(g, self.k)

    def could_hold(self, degrees) -> bool:
        return min(degrees) >= self.k

    def __str__(self) -> str:
        return f"{self.k}-factor"


@dataclass(frozen=True)
class Hamiltonian:
    def holds(self, g: SmallGraph) -> bool:
        return is_hamiltonian(g)

    def could_hold(self, degrees) -> bool:
        return min(degrees) >= 2

    def __str__(self) -> str:
        return "hamiltonian"


@dataclass(frozen=True)
class DeficiencyAtMost:
    beta: int

    def holds(self, g: SmallGraph) -> bool:
        return deficiency(g) <= self.beta

    def could_hold(self, degrees) -> bool:
        return sum(1 for x in degrees if x == 0) <= self.beta

    def __str__(self) -> str:
        return f"deficiency<={self.beta}"


@dataclass(frozen=True)
class Toughness:
    t: Fraction

    def __post_init__(self):
        object.__setattr__(self, "t", Fraction(self.t))

    def holds(self, g: SmallGraph) -> bool:
        return toughness_at_least(g, self.t)

    def could_hold(self, degrees) -> bool:
        # A non-complete t-tough graph has minimum degree >= 2t.
        n = len(degrees)
        return min(degrees) >= min(2 * self.t, n - 1)

    def __str__(self) -> str:
        return f"{self.t}-tough"


GraphProperty = KFactor | Hamiltonian | DeficiencyAtMost | Toughness


# -- search core -----------------------------------------------------------------


def _check_cap(pi: DegreeSequence, cap: int | None):
    limit = ENUM_CAP if cap is None else cap
    if pi.n > limit:
        raise TooLarge(f"n={pi.n} exceeds the enumeration cap {limit}")


def _rows_dominate(rows, u: int, v: int, row_v: int, n: int) -> bool:
    """Row of u >= row of v, lexicographically, ignoring the pair uv itself."""
    ru = rows[u]
    for w in range(n):
        if w == u or w == v:
            continue
        a, b = ru >> w & 1, row_v >> w & 1
        if a != b:
            return a > b
    return True


def _walk(pi: tuple[int, ...], *, symmetric=False, skip=None, start=None):
    """Depth-first realizations as ``(rows, path)`` pairs.

    ``path`` lists the index of the neighbour set chosen for each row and
    serves as a resumable cursor: passing it back as ``start`` continues
    strictly after that graph.  ``skip(rows, i)`` is consulted after row ``i``
    is fixed; returning True drops the whole subtree.
    """
    n = len(pi)
    res = list(pi)
    rows = [0] * n
    path: list[int] = []
    twin = [symmetric and i > 0 and pi[i] == pi[i - 1] for i in range(n)]

    def rec(i: int, bound):
        if i == n:
            if bound is None:
                yield tuple(rows), tuple(path)
            return
        need = res[i]
        cand = [j for j in range(i + 1, n) if res[j]]
        if need > len(cand):
            return
        first = bound[0] if bound is not None else 0
        for idx, combo in enumerate(islice(combinations(cand, need), first, None), first):
            m = 0
            for j in combo:
                m |= 1 << j
            if twin[i] and not _rows_dominate(rows, i - 1, i, rows[i] | m, n):
                continue
            for j in combo:
                res[j] -= 1
                rows[j] |= 1 << i
            rows[i] |= m
            res[i] = 0
            if graphical(res[i + 1:]) and not (skip and skip(rows, i)):
                path.append(idx)
                yield from rec(i + 1, bound[1:] if bound is not None and idx == first else None)
                path.pop()
            res[i] = need
            rows[i] &= ~m
            for j in combo:
                res[j] += 1
                rows[j] &= ~(1 << i)

    yield from rec(0, None if start is None else tuple(start))


class RealizationStream:
    """Iterator over every labeled realization of ``pi``, in a fixed order.

    :attr:`cursor` names the last graph emitted; ``RealizationStream(pi,
    cursor=c)`` resumes right after it.
    """

    def __init__(self, pi: DegreeSequence, cursor: tuple[int, ...] | None = None, cap: int | None = None):
        _check_cap(pi, cap)
        self.pi = pi
        self.cursor = cursor
        self._it = _walk(pi.degrees, start=cursor) if is_graphical(pi) else iter(())

    def __iter__(self) -> Iterator[SmallGraph]:
        return self

    def __next__(self) -> SmallGraph:
        rows, path = next(self._it)
        self.cursor = path
        return SmallGraph._trusted(self.pi.n, rows)


def realizations(pi: DegreeSequence, cap: int | None = None) -> RealizationStream:
    return RealizationStream(pi, cap=cap)


def count_realizations(pi: DegreeSequence, cap: int | None = None) -> int:
    """Length of :func:`realizations`, counted by memoising on residual degrees."""
    _check_cap(pi, cap)
    if not is_graphical(pi):
        return 0
    n = pi.n

    @lru_cache(maxsize=None)
    def count(i: int, res: tuple[int, ...]) -> int:
        # res holds residual degrees of vertices i..n-1.
        if i == n:
            return 1
        need, tail = res[0], res[1:]
        cand = [j for j, x in enumerate(tail) if x]
        total = 0
        for combo in combinations(cand, need):
            nxt = list(tail)
            for j in combo:
                nxt[j] -= 1
            if graphical(nxt):
                total += count(i + 1, tuple(nxt))
        return total

    return count(0, pi.degrees)


# -- oracles ---------------------------------------------------------------------


@dataclass(frozen=True)
class OracleResult:
    """Quantified answer; ``graph`` is the counterexample (forcibly) or example (potentially)."""

    value: bool
    quantifier: str
    prop: GraphProperty
    graph: SmallGraph | None = None
    examined: int = 0

    def __bool__(self) -> bool:
        return self.value


def _partial_has(prop: GraphProperty, pi, rows, n: int) -> bool:
    degrees = [r.bit_count() for r in rows]
    return prop.could_hold(degrees) and prop.holds(SmallGraph._trusted(n, rows))


def _oracle_pre(pi: DegreeSequence, cap: int | None):
    if not is_graphical(pi):
        raise NotGraphical(f"{render(pi)} is not graphical")
    _check_cap(pi, cap)


def _forcibly_labeled(pi: DegreeSequence, prop: GraphProperty) -> OracleResult:
    examined = 0
    for rows, _ in _walk(pi.degrees):
        examined += 1
        g = SmallGraph._trusted(pi.n, rows)
        if not prop.holds(g):
            return OracleResult(False, "forcibly", prop, g, examined)
    return OracleResult(True, "forcibly", prop, None, examined)


def _forcibly_fast(pi: DegreeSequence, prop: GraphProperty) -> OracleResult:
    n = pi.n
    examined = 0

    def skip(rows, i):
        return i < n - 1 and _partial_has(prop, pi.degrees, rows, n)

    for rows, _ in _walk(pi.degrees, symmetric=True, skip=skip):
        examined += 1
        g = SmallGraph._trusted(n, rows)
        if not prop.holds(g):
            return OracleResult(False, "forcibly", prop, g, examined)
    return OracleResult(True, "forcibly", prop, None, examined)


def _matching_beta(prop: GraphProperty) -> int | None:
    """Deficiency bound equivalent to ``prop``, when it is a matching property."""
    if isinstance(prop, DeficiencyAtMost):
        return prop.beta
    if isinstance(prop, KFactor) and prop.k == 1:
        return 0
    return None


def forcibly_oracle(
    pi: DegreeSequence,
    prop: GraphProperty,
    *,
    accelerate: bool = True,
    check_labeled: bool = False,
    cap: int | None = None,
) -> OracleResult:
    """Does every realization of ``pi`` have ``prop``?

    Stops at the first counterexample in the labeled order.  With
    ``check_labeled`` the accelerated answer is recomputed by plain labeled
    enumeration and any disagreement raises ``AssertionError``.
    """
    _oracle_pre(pi, cap)
    if not accelerate:
        return _forcibly_labeled(pi, prop)
    beta = _matching_beta(prop)
    if beta is not None and not deficiency_exceeds_somewhere(pi.degrees, beta):
        fast = OracleResult(True, "forcibly", prop, None, 0)
    else:
        fast = _forcibly_fast(pi, prop)
        if beta is not None and fast.value:
            raise AssertionError(f"cover-table search and graph search disagree on {render(pi)} / {prop}")
    if check_labeled:
        slow = _forcibly_labeled(pi, prop)
        if (slow.value, slow.graph) != (fast.value, fast.graph):
            raise AssertionError(f"accelerated forcibly oracle disagrees on {render(pi)} / {prop}")
    return fast


def _complete(pi: tuple[int, ...], rows, i: int) -> SmallGraph:
    """Extend rows fixed up to vertex ``i`` with a Havel-Hakimi tail."""
    n = len(pi)
    res = [pi[v] - rows[v].bit_count() for v in range(i + 1, n)]
    tail = realize(DegreeSequence(res)) if res else SmallGraph.empty(0)
    # realize() sorts degrees, so map tail vertices back by residual order.
    order = sorted(range(len(res)), key=lambda v: res[v])
    out = list(rows)
    for a, b in tail.edges():
        u, v = order[a] + i + 1, order[b] + i + 1
        out[u] |= 1 << v
        out[v] |= 1 << u
    return SmallGraph._trusted(n, out)


def _potentially_labeled(pi: DegreeSequence, prop: GraphProperty) -> OracleResult:
    examined = 0
    for rows, _ in _walk(pi.degrees):
        examined += 1
        g = SmallGraph._trusted(pi.n, rows)
        if prop.holds(g):
            return OracleResult(True, "potentially", prop, g, examined)
    return OracleResult(False, "potentially", prop, None, examined)


class _Found(Exception):
    def __init__(self, graph: SmallGraph):
        self.graph = graph


def _potentially_fast(pi: DegreeSequence, prop: GraphProperty) -> OracleResult:
    n = pi.n

    def skip(rows, i):
        if i < n - 1 and _partial_has(prop, pi.degrees, rows, n):
            raise _Found(_complete(pi.degrees, rows, i))
        return False

    examined = 0
    try:
        for rows, _ in _walk(pi.degrees, symmetric=True, skip=skip):
            examined += 1
            g = SmallGraph._trusted(n, rows)
            if prop.holds(g):
                return OracleResult(True, "potentially", prop, g, examined)
    except _Found as hit:
        return OracleResult(True, "potentially", prop, hit.graph, examined)
    return OracleResult(False, "potentially", prop, None, examined)


def potentially_oracle(
    pi: DegreeSequence,
    prop: GraphProperty,
    *,
    accelerate: bool = True,
    check_labeled: bool = False,
    cap: int | None = None,
) -> OracleResult:
    """Does some realization of ``pi`` have ``prop``?  ``graph`` is such a realization."""
    _oracle_pre(pi, cap)
    if not accelerate:
        return _potentially_labeled(pi, prop)
    fast = _potentially_fast(pi, prop)
    if check_labeled:
        slow = _potentially_labeled(pi, prop)
        if slow.value != fast.value:
            raise AssertionError(f"accelerated potentially oracle disagrees on {render(pi)} / {prop}")
    return fast


def all_graphical_sequences(n: int, cap: int | None = None) -> Iterator[DegreeSequence]:
    """Every graphical nondecreasing sequence of length ``n``, lexicographically."""
    limit = SEQUENCE_CAP if cap is None else cap
    if n < 1:
        raise RangeError("n must be at least 1")
    if n > limit:
        raise TooLarge(f"n={n} exceeds the sequence sweep cap {limit}")
    for c in combinations_with_replacement(range(n), n):
        if graphical(c):
            yield DegreeSequence(c)
