"""Factorization of x^n - 1 over F_d (d prime), cached.

sympy does the factoring; the result is verified by multiplying the
factors back together before it is trusted.
"""

from __future__ import annotations

from functools import lru_cache

import sympy

_X = sympy.Symbol("x")


@lru_cache(maxsize=None)
def cyclic_factors(n: int, d: int) -> tuple:
    """Irreducible monic factors of x^n - 1 over F_d as coefficient tuples
    (constant term first), sorted by (degree, coefficients).  Requires
    gcd(n, d) = 1, which makes x^n - 1 squarefree."""
    if n < 1:
        raise ValueError("n must be positive")
    if n % d == 0:
        raise ValueError("n must be coprime to the modulus")
    poly = sympy.Poly(_X ** n - 1, _X, modulus=d)
    const, factors = poly.factor_list()
    if int(const) % d != 1:
        raise AssertionError("unexpected leading constant in factorization")
    out = []
    for f, mult in factors:
        if mult != 1:
            raise AssertionError("x^n - 1 must be squarefree when gcd(n, d) = 1")
        out.append(tuple(int(c) % d for c in reversed(f.all_coeffs())))
    out.sort(key=lambda g: (len(g), g))

    prod = [1]
    for g in out:
        nxt = [0] * (len(prod) + len(g) - 1)
        for i, a in enumerate(prod):
            if a:
                for j, b in enumerate(g):
                    nxt[i + j] = (nxt[i + j] + a * b) % d
        prod = nxt
    expected = [(d - 1)] + [0] * (n - 1) + [1]
    if prod != expected:
        raise AssertionError("factor product check failed")
    return tuple(out)
