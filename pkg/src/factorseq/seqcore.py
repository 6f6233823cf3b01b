"""Degree sequences: parsing, rendering, graphicality, majorization, realization."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import accumulate, groupby
from typing import Iterable, Sequence

from .errors import DomainError, LengthMismatch, NotGraphical, ParseError, TooLarge
from .graph import MAX_VERTICES, SmallGraph


@dataclass(frozen=True)
class DegreeSequence:
    """A nondecreasing degree sequence ``(d_1 <= ... <= d_n)``.

    Input order does not matter; the stored tuple is always sorted.  Use
    :meth:`d` for the 1-based, ``d_0 = 0`` view that all the degree conditions
    are written in; plain indexing and iteration are 0-based like a tuple.
    """

    degrees: tuple[int, ...]

    def __init__(self, degrees: Iterable[int]):
        ds = tuple(sorted(int(x) for x in degrees))
        n = len(ds)
        if ds and (ds[0] < 0 or ds[-1] > n - 1):
            raise DomainError(f"degrees must lie in [0, {n - 1}] for n={n}, got {ds}")
        object.__setattr__(self, "degrees", ds)

    @property
    def n(self) -> int:
        return len(self.degrees)

    def d(self, i: int) -> int:
        """1-based access with ``d(0) == 0``."""
        if i == 0:
            return 0
        if not 1 <= i <= self.n:
            raise IndexError(f"d_{i} is undefined for n={self.n}")
        return self.degrees[i - 1]

    @cached_property
    def padded(self) -> tuple[int, ...]:
        """``(0, d_1, ..., d_n)`` so that ``padded[i] == d(i)``."""
        return (0,) + self.degrees

    @cached_property
    def prefix(self) -> tuple[int, ...]:
        """``prefix[b] = d_1 + ... + d_b``, with ``prefix[0] = 0``."""
        return tuple(accumulate(self.degrees, initial=0))

    @property
    def total(self) -> int:
        return self.prefix[-1]

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return iter(self.degrees)

    def __getitem__(self, i):
        return self.degrees[i]

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class SequenceExpr:
    """Abbreviated notation such as ``4^5 5^2``: ``(value, multiplicity)`` terms."""

    terms: tuple[tuple[int, int], ...]

    def expand(self) -> DegreeSequence:
        return DegreeSequence(v for v, m in self.terms for _ in range(m))

    @classmethod
    def compress(cls, pi: DegreeSequence) -> SequenceExpr:
        return cls(tuple((v, len(list(g))) for v, g in groupby(pi.degrees)))


_SEP = re.compile(r"\s*,\s*|\s+")
_TERM = re.compile(r"(\d+)(?:\^(\d+))?")


def parse_expr(text: str) -> SequenceExpr:
    body = text.strip()
    if not body:
        raise ParseError("empty sequence")
    terms = []
    for tok in _SEP.split(body):
        m = _TERM.fullmatch(tok)
        if m is None:
            raise ParseError(f"bad term {tok!r} in {text!r}")
        value = int(m.group(1))
        mult = 1 if m.group(2) is None else int(m.group(2))
        if mult == 0:
            raise ParseError(f"multiplicity must be positive in {tok!r}")
        terms.append((value, mult))
    return SequenceExpr(tuple(terms))


def parse_sequence(text: str) -> DegreeSequence:
    """Parse ``"4^5 5^2"``, ``"2,2,2"`` and friends into a sorted sequence.

    Raises :class:`ParseError` on malformed text and :class:`DomainError`
    when an expanded degree falls outside ``[0, n - 1]``.
    """
    return parse_expr(text).expand()


def render(pi: DegreeSequence) -> str:
    """Compressed form, e.g. ``"4^4 6^3 10^4"``; inverse of :func:`parse_sequence`."""
    if not pi.n:
        return ""
    return " ".join(str(v) if m == 1 else f"{v}^{m}" for v, m in SequenceExpr.compress(pi).terms)


def graphical(degrees: Sequence[int]) -> bool:
    """Erdos-Gallai test on an arbitrary integer list (any order, any sign)."""
    d = sorted(degrees, reverse=True)
    n = len(d)
    if not n:
        return True
    if d[-1] < 0 or d[0] > n - 1 or sum(d) % 2:
        return False
    # For each k, the tail sum of min(d_i, k) splits at the first index p
    # with d_p < k; p only moves left as k grows.
    suffix = list(accumulate(reversed(d), initial=0))[::-1]
    lhs = 0
    p = n
    for k in range(1, n + 1):
        lhs += d[k - 1]
        while p > 0 and d[p - 1] < k:
            p -= 1
        split = max(p, k)
        rhs = k * (k - 1) + k * (split - k) + suffix[split]
        if lhs > rhs:
            return False
    return True


def is_graphical(pi: DegreeSequence) -> bool:
    return graphical(pi.degrees)


def majorizes(hi: DegreeSequence | Sequence[int], lo: DegreeSequence | Sequence[int]) -> bool:
    """Termwise ``hi >= lo`` after sorting both; plain integer lists are accepted too."""
    a = hi.degrees if isinstance(hi, DegreeSequence) else tuple(sorted(hi))
    b = lo.degrees if isinstance(lo, DegreeSequence) else tuple(sorted(lo))
    if len(a) != len(b):
        raise LengthMismatch(f"lengths differ: {len(a)} vs {len(b)}")
    return all(x >= y for x, y in zip(a, b))


def realize(pi: DegreeSequence) -> SmallGraph:
    """Havel-Hakimi realization with vertex ``i`` of degree ``pi[i]``."""
    if pi.n > MAX_VERTICES:
        raise TooLarge(f"n={pi.n} exceeds the graph size limit {MAX_VERTICES}")
    if not is_graphical(pi):
        raise NotGraphical(f"{render(pi)} is not graphical")
    res = list(pi.degrees)
    rows = [0] * pi.n
    while True:
        order = sorted((v for v in range(pi.n) if res[v]), key=lambda v: (-res[v], v))
        if not order:
            break
        v, rest = order[0], order[1:]
        for u in rest[: res[v]]:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            res[u] -= 1
        res[v] = 0
    return SmallGraph(pi.n, tuple(rows))
