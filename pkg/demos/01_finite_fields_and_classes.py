"""Finite fields with discrete-log tables, and cyclotomic classes.

A FieldCtx fixes a primitive element gamma and precomputes the full
dlog/antilog tables, so class membership questions reduce to a table
lookup plus a remainder.
"""

from sidelseq import build_field, class_index

ctx = build_field(7)
print(f"F_{ctx.q}: smallest primitive element gamma = {ctx.gamma}")
print("powers of gamma:", [ctx.antilog_table[k] for k in range(ctx.q - 1)])
print("dlog(6) =", ctx.discrete_log(6))
print("3 * 5 =", ctx.mul(3, 5), "   inv(3) =", ctx.inv(3))

print("\ncubic classes of F_7* (D_j = gamma^j * cubes):")
for j in range(3):
    members = [x for x in range(1, 7) if class_index(ctx, 3, x) == j]
    print(f"  D_{j} = {members}")

print("\nextension field F_9 = F_3[x]/(x^2 + 1), elements encoded base 3:")
ctx9 = build_field(3, 2, modulus=[1, 0, 1])
print(f"  modulus {ctx9.modulus}, gamma = {ctx9.gamma} "
      f"(coefficients {ctx9.coeffs(ctx9.gamma)}, i.e. x + 1)")
print("  orders:", {x: (ctx9.q - 1) // __import__('math').gcd(ctx9.q - 1, ctx9.log_table[x])
                    for x in range(1, 9)})
