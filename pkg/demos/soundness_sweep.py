"""How often each sufficient condition fires, and how often it could have.

For every graphical sequence of a given order we compare the degree
condition with the exhaustive forcibly-oracle.  A condition is sound if it
never holds where the oracle says false; the gap between the two counts shows
how far from an exact characterization it is.
"""

from __future__ import annotations

import sys
from fractions import Fraction

from factorseq import conditions as cond
from factorseq.enumeration import DeficiencyAtMost, Hamiltonian, KFactor, Toughness, all_graphical_sequences, forcibly_oracle

n = int(sys.argv[1]) if len(sys.argv) > 1 else 7

checks = [("hamiltonian", cond.chvatal_hamiltonian, Hamiltonian())]
checks.append(("2-factor (exact 2-factor test)", cond.forcibly_two_factor, KFactor(2)))
if n % 2 == 0:
    checks.append(("1-factor", cond.forcibly_one_factor, KFactor(1)))
    checks.append(("2-factor (general k test)", lambda p: cond.forcibly_k_factor(p, 2), KFactor(2)))
else:
    checks.append(("deficiency <= 1", lambda p: cond.deficiency_at_most(p, 1), DeficiencyAtMost(1)))
checks.append(("1-tough", lambda p: cond.forcibly_t_tough(p, 1), Toughness(Fraction(1))))

seqs = list(all_graphical_sequences(n))
print(f"n={n}: {len(seqs)} graphical sequences")
for name, pred, prop in checks:
    fired = forcibly = unsound = 0
    for pi in seqs:
        holds = pred(pi).holds
        truth = forcibly_oracle(pi, prop).value
        fired += holds
        forcibly += truth
        unsound += holds and not truth
    print(f"  {name:32s} condition holds {fired:4d}, forcibly true {forcibly:4d}, unsound {unsound}")
