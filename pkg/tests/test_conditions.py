from __future__ import annotations

from fractions import Fraction
from math import floor

import pytest

from factorseq.conditions import (
    Outcome,
    Witness,
    WitnessKind,
    chvatal_hamiltonian,
    deficiency_at_most,
    forcibly_k_factor,
    forcibly_k_factor_naive,
    forcibly_one_factor,
    forcibly_t_tough,
    forcibly_two_factor,
    k_factor_triple_violated,
    potentially_k_factor,
    recheck,
    two_factor_clause_fails,
)
from factorseq.enumeration import all_graphical_sequences
from factorseq.errors import BadK, BadT, NotGraphical, OddOrder, ParityError, RangeError, TooFewVertices
from factorseq.seqcore import DegreeSequence, parse_sequence

SEP = parse_sequence("4^4 6^3 10^4")


def seq(*d):
    return DegreeSequence(d)


def witness(v):
    assert v.outcome is Outcome.FAILS
    return v.witness.indices


# -- examples ------------------------------------------------------------------


def test_chvatal_examples():
    assert chvatal_hamiltonian(seq(3, 3, 3, 3)).holds
    assert witness(chvatal_hamiltonian(seq(2, 2, 2, 2, 2))) == {"i": 2}
    assert chvatal_hamiltonian(seq(2, 2, 2)).holds


def test_deficiency_examples():
    assert witness(deficiency_at_most(seq(0, 1, 1, 2), 0)) == {"i": 0, "beta": 0}
    assert deficiency_at_most(seq(1, 1, 2), 1).holds
    assert deficiency_at_most(seq(1, 1), 0).holds


def test_one_factor_examples():
    assert forcibly_one_factor(seq(1, 1)).holds
    assert witness(forcibly_one_factor(seq(1, 1, 1, 3))) == {"i": 1, "beta": 0}
    assert forcibly_one_factor(seq(2, 2, 2, 2)).holds


def test_two_factor_examples():
    assert forcibly_two_factor(SEP).holds
    assert witness(forcibly_two_factor(seq(2, 2, 2, 4, 4))) == {"clause": "i"}
    assert forcibly_two_factor(seq(2, 2, 2)).holds


def test_k_factor_examples():
    assert witness(forcibly_k_factor(SEP, 2)) == {"a": 4, "b": 5, "q": 2, "r": 6, "s": 5}
    assert forcibly_k_factor(seq(3, 3, 3, 3, 5, 5), 2).holds
    assert forcibly_k_factor(seq(5, 5, 5, 5, 5, 5), 2).holds


def test_k_factor_min_degree_clause():
    v = forcibly_k_factor(seq(1, 2, 2, 3), 2)
    assert v.witness.kind is WitnessKind.K_FACTOR_MIN_DEGREE
    assert str(v) == "FAILS (i) d_1=1 < k=2"


def test_k_factor_all_violating_triples_of_separation_example():
    # Frozen: every violating triple, in scan order.
    n = SEP.n
    hits = [
        (a, b, q)
        for a in range(0, (n + 1) // 2)
        for b in range(n - a, -1, -1)
        for q in range(0, n + 1)
        if k_factor_triple_violated(SEP, 2, a, b, q)
    ]
    assert hits[:4] == [(4, 5, 2), (4, 4, 2), (4, 4, 3), (4, 3, 4)]
    assert all(a >= 4 for a, _, _ in hits)


def test_k_factor_brute_force_on_regular_sequence():
    # Literal evaluation of the (*) clause over every triple.
    pi = seq(5, 5, 5, 5, 5, 5)
    n, k, d = 6, 2, (0, 5, 5, 5, 5, 5, 5)
    for a in range(n):
        if not 2 * a < n:
            continue
        for b in range(n - a + 1):
            for q in range(max(0, a * (k - b) + 2), n - a - b + 1):
                if sum(d[1 : b + 1]) > k * b + a * b - k * a + q - 2:
                    continue
                r = a + k + q - 2
                s = n - max(0, b - k + 1) - max(0, q - 1) - 1
                if (r <= s and d[b] <= r) or (r > s and d[n - a - b] <= s):
                    assert d[n - a] >= max(r, s) + 1
    assert forcibly_k_factor_naive(pi, 2).holds


def test_tough_examples():
    assert forcibly_t_tough(seq(3, 3, 3, 3), 1).holds
    assert witness(forcibly_t_tough(seq(2, 2, 2, 2, 2), 1)) == {"i": 2}
    assert witness(forcibly_t_tough(seq(3, 3, 3, 3, 5, 5), 2)) == {"i": 3}


def test_tough_uses_exact_rationals():
    # t = 3/2, n = 10: the scan is 2 <= i < 6 and floor(3 / (3/2)) = 2 exactly.
    pi = parse_sequence("3^10")
    assert forcibly_t_tough(pi, "3/2") == forcibly_t_tough(pi, Fraction(3, 2))
    assert witness(forcibly_t_tough(pi, "3/2")) == {"i": 3}
    with pytest.raises(TypeError):
        forcibly_t_tough(pi, 1.5)


def test_kundu_examples():
    assert potentially_k_factor(seq(2, 2, 2), 2).holds
    assert witness(potentially_k_factor(seq(1, 1, 1, 3), 1)) == {"stage": 2}
    assert potentially_k_factor(seq(3, 3, 3, 3), 3).holds
    assert witness(potentially_k_factor(seq(1, 1, 1), 0)) == {"stage": 1}


# -- preconditions ---------------------------------------------------------------


def test_preconditions_raise():
    with pytest.raises(NotGraphical):
        chvatal_hamiltonian(seq(1, 1, 1))
    with pytest.raises(TooFewVertices):
        chvatal_hamiltonian(seq(1, 1))
    with pytest.raises(ParityError):
        deficiency_at_most(seq(1, 1, 2), 0)
    with pytest.raises(RangeError):
        deficiency_at_most(seq(1, 1), 4)
    with pytest.raises(OddOrder):
        forcibly_one_factor(seq(1, 1, 2))
    with pytest.raises(TooFewVertices):
        forcibly_two_factor(seq(1, 1))
    with pytest.raises(BadK):
        forcibly_k_factor(seq(1, 1), 1)
    with pytest.raises(ParityError):
        forcibly_k_factor(seq(2, 2, 2, 2, 2), 3)
    with pytest.raises(BadT):
        forcibly_t_tough(seq(3, 3, 3, 3), Fraction(1, 2))
    with pytest.raises(TooFewVertices):
        forcibly_t_tough(seq(2, 2, 2), 2)
    with pytest.raises(BadK):
        potentially_k_factor(seq(1, 1), -1)


# -- reference implementations written straight from the formulas --------------


def ref_chvatal(d, n):
    for i in range(1, n):
        if d[i] <= i and i < n / 2 and d[n - i] < n - i:
            return i
    return None


def ref_deficiency(d, n, beta):
    for i in range(beta, n):
        if d[i + 1] <= i - beta and i - beta < (n - beta - 1) / 2 and d[n + beta - i] < n - i - 1:
            return i
    return None


def ref_tough(d, n, t):
    i = 1
    while i < t * n / (t + 1):
        if i >= t:
            j = floor(i / t)
            if d[j] <= i and d[n - i] < n - j:
                return i
        i += 1
    return None


def _least(v, key="i"):
    return None if v.holds else v.witness[key]


def test_against_reference_formulas():
    for n in range(3, 10):
        for pi in all_graphical_sequences(n):
            d = pi.padded
            assert _least(chvatal_hamiltonian(pi)) == ref_chvatal(d, n)
            for beta in range(n % 2, n + 1, 2):
                assert _least(deficiency_at_most(pi, beta)) == ref_deficiency(d, n, beta)
            for t in (Fraction(1), Fraction(3, 2), Fraction(2), Fraction(5, 3)):
                if n > (t + 1) * -(-t.numerator // t.denominator) / t:
                    assert _least(forcibly_t_tough(pi, t)) == ref_tough(d, n, t)


def test_two_factor_reference():
    for n in range(3, 10):
        for pi in all_graphical_sequences(n):
            d = pi.padded
            failed = []
            if n % 2 and d[(n + 1) // 2] < (n + 1) / 2:
                failed.append(("i", None))
            if n % 2 == 0 and not (d[(n - 2) // 2] >= n / 2 or d[(n + 2) // 2] >= (n + 2) / 2):
                failed.append(("ii", None))
            for i in range(0, n):
                if i <= (n - 2) / 2 and d[i] <= i and d[i + 1] <= i + 1:
                    if not (d[n - i - 1] >= n - i - 1 or d[n - i] >= n - i):
                        failed.append(("iii", i))
            for i in range(1, n):
                if i <= (n - 5) / 2 and d[i - 1] <= i and d[i + 2] <= i + 1:
                    if not (d[n - i - 3] >= n - i - 2 or d[n - i] >= n - i - 1):
                        failed.append(("iv", i))
            v = forcibly_two_factor(pi)
            if not failed:
                assert v.holds
            else:
                w = v.witness.indices
                assert (w["clause"], w.get("i")) == failed[0]
            for clause, i in failed:
                assert two_factor_clause_fails(pi, clause, i)


# -- invariants --------------------------------------------------------------------


def test_one_factor_equals_deficiency_zero():
    for n in range(2, 11, 2):
        for pi in all_graphical_sequences(n):
            assert forcibly_one_factor(pi) == deficiency_at_most(pi, 0)


def _all_verdicts(pi):
    n = pi.n
    out = []
    if n >= 3:
        out.append((chvatal_hamiltonian(pi), {}))
        out.append((forcibly_two_factor(pi), {}))
    for beta in range(n % 2, n + 1, 2):
        out.append((deficiency_at_most(pi, beta), {}))
    for k in (2, 3):
        if k * n % 2 == 0:
            out.append((forcibly_k_factor(pi, k), {"k": k}))
    for k in (0, 1, 2):
        out.append((potentially_k_factor(pi, k), {"k": k}))
    for t in (1, Fraction(3, 2), 2):
        if n > (t + 1) * -(-Fraction(t).numerator // Fraction(t).denominator) / t:
            out.append((forcibly_t_tough(pi, t), {"t": t}))
    return out


def test_witnesses_self_certify():
    for n in range(1, 9):
        for pi in all_graphical_sequences(n):
            for v, extra in _all_verdicts(pi):
                if not v.holds:
                    assert recheck(pi, v.witness, **extra), (pi, v)
                    assert recheck(pi, Witness.from_dict(v.witness.to_dict()), **extra)


def test_recheck_rejects_a_wrong_witness():
    w = Witness(WitnessKind.K_FACTOR_TRIPLE, {"a": 4, "b": 5, "q": 2, "r": 6, "s": 5})
    assert recheck(SEP, w, k=2)
    bad = Witness(WitnessKind.K_FACTOR_TRIPLE, {"a": 0, "b": 0, "q": 0, "r": 0, "s": 0})
    assert not recheck(SEP, bad, k=2)


@pytest.mark.slow
def test_pruned_k_factor_scan_equals_naive_exhaustive():
    for n in range(1, 13):
        for pi in all_graphical_sequences(n, cap=12):
            for k in (2, 3):
                if k * n % 2 == 0:
                    assert forcibly_k_factor(pi, k) == forcibly_k_factor_naive(pi, k), (pi, k)


def test_verdict_invariant():
    with pytest.raises(ValueError):
        from factorseq.conditions import Verdict

        Verdict(Outcome.FAILS)
