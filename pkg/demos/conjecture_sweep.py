"""Does the toughness condition at t=k imply the k-factor condition?

The sweep finds sequences where it does not.  All of them lack a vertex of
degree n-1, and for such sequences the triple (a, b, q) = (0, 0, 2) always
violates (*): r = k <= s = n - 2, d_0 = 0 <= r, so (*) asks for d_n >= n - 1.
The oracle confirms these sequences are nevertheless forcibly k-factor
graphical, so the failure is in the sufficient condition, not in the graphs.
"""

from __future__ import annotations

from factorseq.conditions import forcibly_k_factor, k_factor_triple_violated
from factorseq.enumeration import KFactor, Toughness, forcibly_oracle
from factorseq.explorer import scan_tough_implies_factor
from factorseq.seqcore import DegreeSequence

for k in (2, 3):
    rep = scan_tough_implies_factor(8, k)
    print(f"k={k}: {rep.summary_line}")
    for degrees in rep.summary["counterexample_sequences"]:
        pi = DegreeSequence(degrees)
        print(
            f"  {pi}: {forcibly_k_factor(pi, k)}; (0,0,2) violated: {k_factor_triple_violated(pi, k, 0, 0, 2)}; "
            f"forcibly {k}-factor: {forcibly_oracle(pi, KFactor(k)).value}; forcibly {k}-tough: {forcibly_oracle(pi, Toughness(k)).value}"
        )
