"""Character sums, the Weil bound, and k-error complexity lower bounds.

Character sums are tallied exactly as integer counts over the d-th roots
of unity.  The general lower bound l/(sqrt(q)+2k) - 1 is compared against
exhaustively computed LC_k on a small sweep; the root-exclusion route
gives the much stronger floor (r-1)*d^m when its hypotheses hold.
"""

from sidelseq import (bound_report, build_field, character_sum,
                      k_error_report, klc_lower_bound, sidelnikov_subsequence,
                      verify_root_exclusion, weil_check)

ctx = build_field(7)
rep = character_sum(ctx, 3, [0, 1, 1])  # f = x^2 + x
print("f = x^2 + x over F_7, cubic character:")
print("  class counts:", rep.counts, " zeros:", rep.zeros)
print(f"  |sum| = {rep.magnitude:.6f}  vs  (e-1)sqrt(q) = {rep.weil_rhs:.6f}"
      f"  (equality case), check: {weil_check(rep)}")

print("\ngeneral bound vs exhaustive LC_k, q=31, d=3, l=30:")
ctx31 = build_field(31)
seq = sidelnikov_subsequence(ctx31, 3, 30)
report = k_error_report(seq, 2)
for entry in report.entries:
    bound = klc_lower_bound(31, 30, entry.k)
    print(f"  k={entry.k}: LC_k = {entry.lc}  >  {bound:.3f}")

print("\nroot-exclusion route at q=103, d=3, l=51 (r=17):")
ctx103 = build_field(103)
br = bound_report(ctx103, 3, 51, 1)
print("  applicable:", br.root_exclusion_ok, " floor:", br.klc_floor)
seq103 = sidelnikov_subsequence(ctx103, 3, 51)
print("  exhaustive check over all weight<=1 perturbations:",
      verify_root_exclusion(seq103, 17, 1))
