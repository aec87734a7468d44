"""The showcase instance: q = 1423, d = 3, l = 711.

Here l = 3^2 * 79 with 3 primitive mod 79 and 79 >= sqrt(q) + 3, and the
decomposition 1423 = 10^2 + 3*21^2 has B = 21 divisible by 3, so changing
any single term can only raise the linear complexity: LC_1 = LC exactly.
The exhaustive search over all 1422 single-term changes confirms it in
well under a minute.
"""

import time

from sidelseq import (ab_decomposition, build_field, k_error_report,
                      klc_floor, klc_lower_bound, one_error_prediction,
                      sequence_s_values, sidelnikov_subsequence)

t0 = time.time()
ctx = build_field(1423)
dec = ab_decomposition(ctx)
print(f"q=1423 = {dec.A}^2 + 3*({dec.B})^2,  B mod 3 = {dec.B % 3}")

pred = one_error_prediction(ctx)
print("prediction:", pred.relation)
for name, holds in pred.conditions:
    print(f"  [{'x' if holds else ' '}] {name}")

seq = sidelnikov_subsequence(ctx, 3, 711)
s1, s11 = sequence_s_values(seq)
print(f"S(1) = {s1}, first Hasse derivative at 1 = {s11} "
      f"(predicted {pred.s1}, {pred.s1_hasse})")

rep = k_error_report(seq, 1)
print(f"LC = {rep.lc},  LC_1 = {rep.entries[1].lc}  "
      f"(over 1 + 1422 candidates)")
print(f"general lower bound: {klc_lower_bound(1423, 711, 1):.4f}; "
      f"root-exclusion floor: {klc_floor(3, 2, 79)}")
print(f"elapsed: {time.time() - t0:.2f}s")
