"""A sequence that is forcibly 2-factor graphical but fails the k=2 condition.

The general k-factor condition is not best possible at k=2: the sequence
4^4 6^3 10^4 passes the exact 2-factor test yet trips the k-factor scan.
The pi_n family then shows the k-factor condition can be close to tight.
"""

from __future__ import annotations

from factorseq import forcibly_k_factor, forcibly_two_factor, parse_sequence
from factorseq.conditions import k_factor_triple_violated
from factorseq.explorer import family_pi_n
from factorseq.oracle import has_k_factor

pi = parse_sequence("4^4 6^3 10^4")
print("pi =", pi)
print("two-factor condition:", forcibly_two_factor(pi))
print("k-factor condition, k=2:", forcibly_k_factor(pi, 2))

# Every triple that breaks (*), in scan order.
hits = [
    (a, b, q)
    for a in range(0, (pi.n + 1) // 2)
    for b in range(pi.n - a, -1, -1)
    for q in range(pi.n + 1)
    if k_factor_triple_violated(pi, 2, a, b, q)
]
print(f"{len(hits)} violating triples, first few:", hits[:5])

# pi_n passes the condition; pi'_n sits two degree units below and its
# realization has no k-factor.
for n in (6, 10, 14):
    first, second, k = family_pi_n(n)
    line = f"n={n:2d} k={k}: pi_n {forcibly_k_factor(first.sequence, k)}"
    if n <= 10:
        line += f", pi'_n realization has a {k}-factor: {has_k_factor(second.realization, k)}"
    print(line)
