"""Linear complexity machinery over prime fields F_d.

The linear complexity of an l-periodic sequence is l - deg gcd(x^l - 1,
S(x)) with S the period polynomial; Berlekamp-Massey provides an
independent route through the shortest recurrence.  The k-error variant
minimizes over every bounded-weight perturbation, exhaustively, with a
budget guard.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .field import is_prime
from .sequences import (PeriodicSequence, enumerate_error_patterns,
                        pattern_count, perturb)

DEFAULT_BUDGET = 10_000_000


class SearchBudgetError(RuntimeError):
    """The exhaustive search space exceeds the configured budget."""

    def __init__(self, count, budget):
        super().__init__(f"search space of {count} candidates exceeds budget {budget}")
        self.count = count
        self.budget = budget


class Poly:
    """Dense polynomial over F_d (d prime): coeffs[i] is the coefficient of
    x^i, trailing zeros stripped, empty tuple for the zero polynomial."""

    __slots__ = ("d", "coeffs")

    def __init__(self, coeffs, d):
        if not is_prime(d):
            raise ValueError(f"coefficient modulus must be prime, got {d}")
        c = [int(x) % d for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.d = d
        self.coeffs = tuple(c)

    @property
    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.d == other.d
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.d, self.coeffs))

    def __repr__(self):
        return f"Poly({list(self.coeffs)}, d={self.d})"

    def _check(self, other):
        if not isinstance(other, Poly):
            raise TypeError("expected a Poly")
        if self.d != other.d:
            raise ValueError("mixed coefficient moduli")

    def __add__(self, other):
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.d
        return Poly(out, self.d)

    def __sub__(self, other):
        self._check(other)
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] = (out[i] - c) % self.d
        return Poly(out, self.d)

    def __mul__(self, other):
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Poly([], self.d)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out, self.d)

    def scale(self, c):
        return Poly([c * x for x in self.coeffs], self.d)

    def monic(self):
        if self.is_zero() or self.coeffs[-1] == 1:
            return self
        return self.scale(pow(self.coeffs[-1], -1, self.d))

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        d = self.d
        b = other.coeffs
        db = len(b) - 1
        if self.degree < db:
            return Poly([], d), self
        a = list(self.coeffs)
        inv_lead = pow(b[-1], -1, d)
        quot = [0] * (len(a) - db)
        for i in range(len(a) - 1, db - 1, -1):
            c = a[i]
            if c:
                qc = c * inv_lead % d
                quot[i - db] = qc
                for t in range(db + 1):
                    a[i - db + t] = (a[i - db + t] - qc * b[t]) % d
        return Poly(quot, d), Poly(a[:db], d)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def evaluate(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.d
        return acc


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over F_d via the Euclidean algorithm."""
    if a.d != b.d:
        raise ValueError("mixed coefficient moduli")
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def xn_minus_one(n: int, d: int) -> Poly:
    return Poly([d - 1] + [0] * (n - 1) + [1], d)


def seq_poly(seq: PeriodicSequence) -> Poly:
    """Period polynomial S(x) = s_0 + s_1 x + ... + s_{l-1} x^{l-1}."""
    return Poly(seq.terms, seq.d)


def lc_via_gcd(seq: PeriodicSequence) -> int:
    """Linear complexity as l - deg gcd(x^l - 1, S(x)); 0 for the zero
    sequence (the recurrence definition forces that value)."""
    S = seq_poly(seq)
    if S.is_zero():
        return 0
    return seq.l - poly_gcd(xn_minus_one(seq.l, seq.d), S).degree


def berlekamp_massey(seq: PeriodicSequence):
    """Shortest linear recurrence over F_d; two full periods are fed, which
    pins the linear complexity of the periodic sequence.

    Returns (L, characteristic polynomial), the polynomial monic of degree
    exactly L with the recurrence coefficients.
    """
    d = seq.d
    s = seq.terms + seq.terms
    C = [1]
    B = [1]
    L = 0
    m = 1
    b = 1
    for n in range(len(s)):
        delta = s[n]
        for i in range(1, L + 1):
            if i < len(C) and C[i]:
                delta = (delta + C[i] * s[n - i]) % d
        if delta == 0:
            m += 1
            continue
        coef = delta * pow(b, -1, d) % d
        if 2 * L <= n:
            T = list(C)
            if len(C) < m + len(B):
                C = C + [0] * (m + len(B) - len(C))
            for i, bc in enumerate(B):
                C[m + i] = (C[m + i] - coef * bc) % d
            L = n + 1 - L
            B = T
            b = delta
            m = 1
        else:
            if len(C) < m + len(B):
                C = C + [0] * (m + len(B) - len(C))
            for i, bc in enumerate(B):
                C[m + i] = (C[m + i] - coef * bc) % d
            m += 1
    char = [0] * (L + 1)
    for i, c in enumerate(C[:L + 1]):
        char[L - i] = c
    return L, Poly(char, d)


def lucas_binomial(n: int, h: int, d: int) -> int:
    """C(n, h) mod d through the base-d digit product."""
    if n < 0 or h < 0:
        raise ValueError("n and h must be nonnegative")
    out = 1
    while h or n:
        nd, hd = n % d, h % d
        if hd > nd:
            return 0
        out = out * comb(nd, hd) % d
        n //= d
        h //= d
    return out


def hasse_derivative(S: Poly, h: int) -> Poly:
    """h-th Hasse derivative: sum_n C(n,h) s_n x^(n-h)."""
    if h < 0:
        raise ValueError("derivative order must be nonnegative")
    if h == 0:
        return S
    return Poly([lucas_binomial(n, h, S.d) * S.coeffs[n]
                 for n in range(h, len(S.coeffs))], S.d)


def root_multiplicity(S: Poly, theta: int) -> int:
    """Multiplicity of theta as a root of S: the least u whose u-th Hasse
    derivative does not vanish at theta."""
    if S.is_zero():
        raise ValueError("the zero polynomial has no root multiplicity")
    u = 0
    while hasse_derivative(S, u).evaluate(theta) == 0:
        u += 1
    return u


def root_multiplicity_by_division(S: Poly, theta: int) -> int:
    """The same quantity by repeated exact division by (x - theta)."""
    if S.is_zero():
        raise ValueError("the zero polynomial has no root multiplicity")
    lin = Poly([-theta % S.d, 1], S.d)
    u = 0
    while True:
        quo, rem = divmod(S, lin)
        if not rem.is_zero():
            return u
        S = quo
        u += 1


# ---------------------------------------------------------------------------
# k-error linear complexity

@dataclass(frozen=True)
class KErrorEntry:
    k: int
    lc: int
    witness: tuple  # error pattern achieving lc, first in enumeration order


@dataclass(frozen=True)
class ComplexityReport:
    d: int
    l: int
    lc: int
    entries: tuple  # KErrorEntry for k = 0..k_max, lc nonincreasing
    methods: tuple


def search_space_size(l: int, d: int, k: int) -> int:
    """Candidates a k-error search examines: identity plus all patterns."""
    return 1 + pattern_count(l, d, k)


def k_error_report(seq: PeriodicSequence, k: int,
                   budget: int | None = DEFAULT_BUDGET) -> ComplexityReport:
    """Exact LC_j for every j <= k, with a minimizing witness (the first
    one in enumeration order).  Raises SearchBudgetError when the candidate
    count exceeds the budget."""
    if not 0 <= k <= seq.l:
        raise ValueError("k must lie in [0, period]")
    count = search_space_size(seq.l, seq.d, k)
    if budget is not None and count > budget:
        raise SearchBudgetError(count, budget)
    from . import _kerror
    base_lc, weight_results = _kerror.exhaustive_search(seq, k)
    check = lc_via_gcd(seq)
    if base_lc != check:
        raise AssertionError(
            f"factored evaluator disagrees with the gcd formula: {base_lc} != {check}")
    entries = [KErrorEntry(0, base_lc, ())]
    best_val, best_wit = base_lc, ()
    for w, res in enumerate(weight_results, start=1):
        if res is not None and res[0] < best_val:
            val, idx = res
            witness = _kerror.unrank_pattern(seq.terms, seq.d, w, idx)
            verified = lc_via_gcd(perturb(seq, witness))
            if verified != val:
                raise AssertionError(
                    f"witness verification failed: search said {val}, gcd says {verified}")
            best_val, best_wit = val, witness
        entries.append(KErrorEntry(w, best_val, best_wit))
    return ComplexityReport(d=seq.d, l=seq.l, lc=base_lc,
                            entries=tuple(entries), methods=("gcd", "exhaustive"))


def k_error_lc(seq: PeriodicSequence, k: int,
               budget: int | None = DEFAULT_BUDGET) -> KErrorEntry:
    """The LC_k entry alone; see k_error_report."""
    return k_error_report(seq, k, budget).entries[k]


def k_error_lc_bruteforce(seq: PeriodicSequence, k: int):
    """Slow reference search: every pattern evaluated with lc_via_gcd.
    Used to validate the fast engine; O(count * l^2)."""
    best = lc_via_gcd(seq)
    witness = ()
    for pat in enumerate_error_patterns(seq, k):
        cand = lc_via_gcd(perturb(seq, pat))
        if cand < best:
            best, witness = cand, pat
    return best, witness
