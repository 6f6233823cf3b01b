"""Degree-sequence sufficient conditions, each returning a self-certifying verdict.

A predicate *holding* means the sequence is forcibly (or, for Kundu's test,
potentially) graphical for the property.  A ``Fails`` verdict only says the
sufficient condition is not met, and its :class:`Witness` names the exact
index or parameters that break it; :func:`recheck` re-evaluates that single
clause so every witness can be verified independently of the scan that
produced it.

All formulas use 1-based degrees ``d_1 <= ... <= d_n`` with ``d_0 = 0``.
Violated preconditions raise (see :mod:`factorseq.errors`); they never come
back as ``Fails``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import ceil, floor

import numpy as np

from .errors import BadK, BadT, NotGraphical, OddOrder, ParityError, RangeError, TooFewVertices
from .seqcore import DegreeSequence, graphical, is_graphical, render


class Outcome(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"


class WitnessKind(str, Enum):
    CHVATAL_INDEX = "ChvatalIndex"
    DEFICIENCY_INDEX = "DeficiencyIndex"
    TWO_FACTOR_CLAUSE = "TwoFactorClause"
    K_FACTOR_MIN_DEGREE = "KFactorMinDegree"
    K_FACTOR_TRIPLE = "KFactorTriple"
    TOUGH_INDEX = "ToughIndex"
    KUNDU_STAGE = "KunduStage"


@dataclass(frozen=True)
class Witness:
    kind: WitnessKind
    indices: dict[str, int | str] = field(default_factory=dict)

    def __getitem__(self, name: str):
        return self.indices[name]

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, **self.indices}

    @classmethod
    def from_dict(cls, data: dict) -> Witness:
        data = dict(data)
        return cls(WitnessKind(data.pop("kind")), data)

    def __str__(self) -> str:
        ix = self.indices
        if self.kind is WitnessKind.K_FACTOR_TRIPLE:
            return "(*) at " + " ".join(f"{s}={ix[s]}" for s in "abqrs")
        if self.kind is WitnessKind.K_FACTOR_MIN_DEGREE:
            return f"(i) d_1={ix['d1']} < k={ix['k']}"
        if self.kind is WitnessKind.TWO_FACTOR_CLAUSE:
            where = f" at i={ix['i']}" if "i" in ix else ""
            return f"clause ({ix['clause']}){where}"
        if self.kind is WitnessKind.KUNDU_STAGE:
            return f"stage {ix['stage']}"
        return " ".join(f"{k}={v}" for k, v in ix.items())


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    witness: Witness | None = None

    def __post_init__(self):
        if (self.outcome is Outcome.FAILS) != (self.witness is not None):
            raise ValueError("a witness is present exactly when the verdict fails")

    @property
    def holds(self) -> bool:
        return self.outcome is Outcome.HOLDS

    def __str__(self) -> str:
        return "HOLDS" if self.holds else f"FAILS {self.witness}"


HOLDS = Verdict(Outcome.HOLDS)


def _fails(kind: WitnessKind, **indices) -> Verdict:
    return Verdict(Outcome.FAILS, Witness(kind, indices))


def _require_graphical(pi: DegreeSequence):
    if not is_graphical(pi):
        raise NotGraphical(f"{render(pi)} is not graphical")


# -- Chvatal: hamiltonicity -------------------------------------------------


def _chvatal_violated(pi: DegreeSequence, i: int) -> bool:
    d = pi.padded
    return d[i] <= i and 2 * i < pi.n and d[pi.n - i] < pi.n - i


def chvatal_hamiltonian(pi: DegreeSequence) -> Verdict:
    """``d_i <= i < n/2`` must imply ``d_{n-i} >= n - i``."""
    _require_graphical(pi)
    if pi.n < 3:
        raise TooFewVertices("needs n >= 3")
    for i in range(1, (pi.n + 1) // 2):
        if _chvatal_violated(pi, i):
            return _fails(WitnessKind.CHVATAL_INDEX, i=i)
    return HOLDS


# -- matchings ----------------------------------------------------------------


def _deficiency_violated(pi: DegreeSequence, beta: int, i: int) -> bool:
    d, n = pi.padded, pi.n
    return (
        d[i + 1] <= i - beta
        and 2 * (i - beta) < n - beta - 1
        and d[n + beta - i] < n - i - 1
    )


def deficiency_at_most(pi: DegreeSequence, beta: int) -> Verdict:
    """Sufficient condition for every realization to have deficiency at most ``beta``.

    Scans every ``i`` in ``[beta, n - 1]``; indices the two strict inequalities
    exclude are never dereferenced.
    """
    _require_graphical(pi)
    n = pi.n
    if not 0 <= beta <= n:
        raise RangeError(f"beta must lie in [0, {n}]")
    if (beta - n) % 2:
        raise ParityError("beta must have the parity of n")
    for i in range(beta, n):
        if 2 * (i - beta) >= n - beta - 1:
            break
        if _deficiency_violated(pi, beta, i):
            return _fails(WitnessKind.DEFICIENCY_INDEX, i=i, beta=beta)
    return HOLDS


def forcibly_one_factor(pi: DegreeSequence) -> Verdict:
    if pi.n < 2 or pi.n % 2:
        raise OddOrder(f"a 1-factor needs even n >= 2, got n={pi.n}")
    return deficiency_at_most(pi, 0)


# -- 2-factors ---------------------------------------------------------------


def two_factor_clause_fails(pi: DegreeSequence, clause: str, i: int | None = None) -> bool:
    """Whether a single clause (with its index, for iii/iv) is violated."""
    d, n = pi.padded, pi.n
    if clause == "i":
        return n % 2 == 1 and d[(n + 1) // 2] < (n + 1) // 2
    if clause == "ii":
        return n % 2 == 0 and d[(n - 2) // 2] < n // 2 and d[(n + 2) // 2] < (n + 2) // 2
    if clause == "iii":
        if not 0 <= 2 * i <= n - 2:
            return False
        return d[i] <= i and d[i + 1] <= i + 1 and d[n - i - 1] < n - i - 1 and d[n - i] < n - i
    if clause == "iv":
        if not (1 <= i and 2 * i <= n - 5):
            return False
        return d[i - 1] <= i and d[i + 2] <= i + 1 and d[n - i - 3] < n - i - 2 and d[n - i] < n - i - 1
    raise ValueError(f"unknown clause {clause!r}")


def forcibly_two_factor(pi: DegreeSequence) -> Verdict:
    """Best monotone 2-factor condition; clauses checked in order i, ii, iii, iv."""
    _require_graphical(pi)
    n = pi.n
    if n < 3:
        raise TooFewVertices("needs n >= 3")
    for clause in ("i", "ii"):
        if two_factor_clause_fails(pi, clause):
            return _fails(WitnessKind.TWO_FACTOR_CLAUSE, clause=clause)
    for i in range(0, (n - 2) // 2 + 1):
        if two_factor_clause_fails(pi, "iii", i):
            return _fails(WitnessKind.TWO_FACTOR_CLAUSE, clause="iii", i=i)
    for i in range(1, (n - 5) // 2 + 1):
        if two_factor_clause_fails(pi, "iv", i):
            return _fails(WitnessKind.TWO_FACTOR_CLAUSE, clause="iv", i=i)
    return HOLDS


# -- k-factors via Tutte pairs ----------------------------------------------


def k_factor_rs(n: int, k: int, a: int, b: int, q: int) -> tuple[int, int]:
    r = a + k + q - 2
    s = n - max(0, b - k + 1) - max(0, q - 1) - 1
    return r, s


def k_factor_triple_violated(pi: DegreeSequence, k: int, a: int, b: int, q: int) -> bool:
    """True iff ``(a, b, q)`` is in range, passes the sum gate, and breaks ``(*)``."""
    d, n = pi.padded, pi.n
    if not (0 <= 2 * a < n and 0 <= b <= n - a and max(0, a * (k - b) + 2) <= q <= n - a - b):
        return False
    if pi.prefix[b] > k * b + a * b - k * a + q - 2:
        return False
    r, s = k_factor_rs(n, k, a, b, q)
    antecedent = (r <= s and d[b] <= r) or (r > s and d[n - a - b] <= s)
    return antecedent and d[n - a] < max(r, s) + 1


def _k_factor_pre(pi: DegreeSequence, k: int):
    _require_graphical(pi)
    if k < 2:
        raise BadK("k must be at least 2")
    if (k * pi.n) % 2:
        raise ParityError("k * n must be even")


def _min_degree_failure(pi: DegreeSequence, k: int) -> Verdict | None:
    if pi.n and pi.d(1) < k:
        return _fails(WitnessKind.K_FACTOR_MIN_DEGREE, d1=pi.d(1), k=k)
    return None


def _triple_witness(pi: DegreeSequence, k: int, a: int, b: int, q: int) -> Verdict:
    r, s = k_factor_rs(pi.n, k, a, b, q)
    return _fails(WitnessKind.K_FACTOR_TRIPLE, a=a, b=b, q=q, r=r, s=s)


def forcibly_k_factor_naive(pi: DegreeSequence, k: int) -> Verdict:
    """Unpruned triple loop, kept as the reference for the fast scan."""
    _k_factor_pre(pi, k)
    failed = _min_degree_failure(pi, k)
    if failed is not None:
        return failed
    n = pi.n
    for a in range(0, (n + 1) // 2):
        for b in range(n - a, -1, -1):
            for q in range(max(0, a * (k - b) + 2), n - a - b + 1):
                if k_factor_triple_violated(pi, k, a, b, q):
                    return _triple_witness(pi, k, a, b, q)
    return HOLDS


# Rows of a per block, keeps the (a, b) grid at a few million cells.
_BLOCK_CELLS = 1 << 21


def _first_violation(pi: DegreeSequence, k: int, a_lo: int, a_hi: int):
    """First violating ``(a, b, q)`` with ``a_lo <= a < a_hi``, or None.

    For fixed ``(a, b)``, ``r`` grows and ``s`` shrinks with ``q``, so the
    violating q's split into two intervals (``r <= s`` first, then ``r > s``)
    whose least members are closed-form; only those two candidates need
    checking.
    """
    n = pi.n
    d = np.asarray(pi.padded, dtype=np.int64)
    prefix = np.asarray(pi.prefix, dtype=np.int64)
    a = np.arange(a_lo, a_hi, dtype=np.int64)[:, None]
    b = np.arange(0, n + 1, dtype=np.int64)[None, :]
    in_range = b <= n - a
    m = np.clip(n - a - b, 0, n)
    d_b = d[b]
    d_m = d[m]
    d_na = d[n - a]
    q_hi = n - a - b
    q_lo = np.maximum(np.maximum(0, a * (k - b) + 2), prefix[b] - k * b - a * b + k * a + 2)
    b_excess = np.maximum(0, b - k + 1)

    def r_of(q):
        return a + k + q - 2

    def s_of(q):
        return n - b_excess - np.maximum(0, q - 1) - 1

    q1 = np.maximum(q_lo, d_b - a - k + 2)
    s1 = s_of(q1)
    ok1 = in_range & (q1 <= q_hi) & (r_of(q1) <= s1) & (d_na <= s1)

    gap0 = a + k - 2 - (n - b_excess - 1)
    q_cross = np.where(gap0 > 0, 0, (1 - gap0) // 2 + 1)
    q2 = np.maximum(np.maximum(q_lo, q_cross), d_na - a - k + 2)
    r2, s2 = r_of(q2), s_of(q2)
    ok2 = in_range & (q2 <= q_hi) & (r2 > s2) & (d_m <= s2) & (d_na <= r2)

    hit = ok1 | ok2
    if not hit.any():
        return None
    # b is scanned downwards, so search each row right to left.
    row, rcol = np.unravel_index(int(np.argmax(hit[:, ::-1])), hit.shape)
    col = n - int(rcol)
    q = int(q1[row, col] if ok1[row, col] else q2[row, col])
    return a_lo + int(row), col, q


def forcibly_k_factor(pi: DegreeSequence, k: int, naive: bool = False) -> Verdict:
    """Tutte-pair exclusion condition for every realization to have a k-factor.

    Triples ``(a, b, q)`` are scanned with a ascending, b descending and q
    ascending, and the first violation is reported.  The default scan is ``O(n^2)`` and returns
    the same verdict and witness as the literal triple loop (``naive=True``).
    """
    if naive:
        return forcibly_k_factor_naive(pi, k)
    _k_factor_pre(pi, k)
    failed = _min_degree_failure(pi, k)
    if failed is not None:
        return failed
    n = pi.n
    a_end = (n + 1) // 2
    step = max(1, _BLOCK_CELLS // (n + 1))
    for a_lo in range(0, a_end, step):
        hit = _first_violation(pi, k, a_lo, min(a_end, a_lo + step))
        if hit:
            return _triple_witness(pi, k, *hit)
    return HOLDS


# -- toughness ----------------------------------------------------------------


def _as_fraction(t) -> Fraction:
    if isinstance(t, float):
        raise TypeError("pass t as an int, Fraction or 'p/q' string, not a float")
    return Fraction(t)


def _tough_violated(pi: DegreeSequence, t: Fraction, i: int) -> bool:
    d, n = pi.padded, pi.n
    j = floor(i / t)
    return d[j] <= i and d[n - i] < n - j


def forcibly_t_tough(pi: DegreeSequence, t) -> Verdict:
    """``d_{floor(i/t)} <= i`` must imply ``d_{n-i} >= n - floor(i/t)`` for ``t <= i < tn/(t+1)``.

    ``t`` is handled as an exact rational.
    """
    t = _as_fraction(t)
    _require_graphical(pi)
    if t < 1:
        raise BadT("t must be at least 1")
    n = pi.n
    if not n > (t + 1) * ceil(t) / t:
        raise TooFewVertices(f"needs n > (t+1)*ceil(t)/t = {(t + 1) * ceil(t) / t}")
    i = ceil(t)
    while i < t * n / (t + 1):
        if _tough_violated(pi, t, i):
            return _fails(WitnessKind.TOUGH_INDEX, i=i)
        i += 1
    return HOLDS


# -- Kundu: potentially k-factor ----------------------------------------------


def potentially_k_factor(pi: DegreeSequence, k: int) -> Verdict:
    """Kundu's test: ``pi`` and ``(d_1 - k, ..., d_n - k)`` both graphical."""
    if k < 0:
        raise BadK("k must be nonnegative")
    if not is_graphical(pi):
        return _fails(WitnessKind.KUNDU_STAGE, stage=1)
    if not graphical([x - k for x in pi.degrees]):
        return _fails(WitnessKind.KUNDU_STAGE, stage=2)
    return HOLDS


# -- witness re-evaluation ------------------------------------------------------


def recheck(pi: DegreeSequence, witness: Witness, k: int | None = None, t=None) -> bool:
    """Re-evaluate only the clause a witness names; True iff it is violated."""
    ix = witness.indices
    kind = witness.kind
    if kind is WitnessKind.CHVATAL_INDEX:
        return _chvatal_violated(pi, ix["i"])
    if kind is WitnessKind.DEFICIENCY_INDEX:
        return _deficiency_violated(pi, ix["beta"], ix["i"])
    if kind is WitnessKind.TWO_FACTOR_CLAUSE:
        return two_factor_clause_fails(pi, ix["clause"], ix.get("i"))
    if kind is WitnessKind.K_FACTOR_MIN_DEGREE:
        return pi.d(1) < ix["k"]
    if kind is WitnessKind.K_FACTOR_TRIPLE:
        a, b, q = ix["a"], ix["b"], ix["q"]
        return (ix["r"], ix["s"]) == k_factor_rs(pi.n, k, a, b, q) and k_factor_triple_violated(pi, k, a, b, q)
    if kind is WitnessKind.TOUGH_INDEX:
        return _tough_violated(pi, _as_fraction(t), ix["i"])
    if kind is WitnessKind.KUNDU_STAGE:
        if ix["stage"] == 1:
            return not is_graphical(pi)
        return not graphical([x - k for x in pi.degrees])
    raise ValueError(f"unknown witness kind {kind}")
