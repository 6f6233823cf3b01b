"""Why the 2-factor and deficiency conditions cannot be weakened.

For each way the 2-factor condition can fail there is a majorizing sequence
with a realization lacking a 2-factor; likewise for the deficiency bound.
This script builds those families and confirms them with the exact oracles.
"""

from __future__ import annotations

from factorseq.conditions import forcibly_two_factor
from factorseq.explorer import family_deficiency, family_two_factor
from factorseq.graph import format_edge_list
from factorseq.oracle import deficiency, has_k_factor

print("2-factor families")
for n, clause, i in [(5, "i", None), (6, "ii", None), (7, "iii", 1), (9, "iv", 2)]:
    inst = family_two_factor(n, clause, i)
    g = inst.realization
    print(
        f"  n={n} clause ({clause}){'' if i is None else f' i={i}'}: {inst.sequence}"
        f"  verdict: {forcibly_two_factor(inst.sequence)}; 2-factor in realization: {has_k_factor(g, 2)}"
    )

print("\ndeficiency families (realized deficiency should be beta + 2)")
for n, i, beta in [(4, 1, 0), (6, 2, 0), (7, 2, 1), (10, 3, 2)]:
    inst = family_deficiency(n, i, beta)
    print(f"  n={n} i={i} beta={beta}: {inst.sequence}  deficiency {deficiency(inst.realization)}")

print("\nthe n=5 clause (i) realization as an edge list:")
print(format_edge_list(family_two_factor(5, "i").realization), end="")
