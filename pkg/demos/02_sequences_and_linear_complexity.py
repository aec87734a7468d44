"""Sidel'nikov subsequences and their exact (k-error) linear complexity.

The period-l sequence reads off the cubic-class index of alpha^n + 1.
Linear complexity comes from the gcd formula, cross-checked by
Berlekamp-Massey; the k-error variant searches every bounded-weight
perturbation exhaustively and returns the first minimizing witness.
"""

from sidelseq import (berlekamp_massey, build_field, k_error_report,
                      lc_via_gcd, perturb, sidelnikov_subsequence)

ctx = build_field(7)
seq = sidelnikov_subsequence(ctx, 3, 6)
print("q=7, d=3, l=6 sequence:", seq.terms)
print("lc via gcd:", lc_via_gcd(seq))
print("lc via Berlekamp-Massey:", berlekamp_massey(seq)[0])

rep = k_error_report(seq, 2)
for entry in rep.entries:
    print(f"  LC_{entry.k} = {entry.lc}   witness = {entry.witness}")
best = rep.entries[2]
print("perturbed terms:", perturb(seq, best.witness).terms)

print("\na longer example: q=103, d=3, half period l=51")
ctx103 = build_field(103)
seq103 = sidelnikov_subsequence(ctx103, 3, 51)
rep103 = k_error_report(seq103, 1)
print("LC =", rep103.lc, "  LC_1 =", rep103.entries[1].lc,
      "  witness =", rep103.entries[1].witness)
