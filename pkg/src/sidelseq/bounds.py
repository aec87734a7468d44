"""Lower bounds and exact predictions for the k-error linear complexity of
Sidel'nikov subsequences, plus an exact multiplicative character-sum engine
with Weil-bound checking.

Everything that can be integer-exact is: character sums are tallied as
integer count vectors over the d-th roots of unity, and the square-root
comparisons are done on squared integers.  Floats appear only in the final
reported magnitudes and bound values.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import fqpoly
from ._kerror import dadic_split
from .complexity import (DEFAULT_BUDGET, Poly, SearchBudgetError,
                         lucas_binomial, poly_gcd, search_space_size)
from .cyclotomy import (ab_decomposition, cyclotomic_numbers_bruteforce,
                        is_primitive_root)
from .field import FieldCtx, is_prime, prime_factors
from .sequences import PeriodicSequence, enumerate_error_patterns


class WeilNotApplicableError(ValueError):
    """The character-sum bound does not cover this polynomial."""


@dataclass(frozen=True)
class CharSumReport:
    q: int
    order: int      # order of the character chi, chi(gamma^j) = zeta^j
    f: tuple        # polynomial over F_q, encoded coefficients, constant first
    e: int          # distinct roots of f in its splitting field
    counts: tuple   # counts[j] = #{c in F_q : f(c) in D_j}
    zeros: int      # #{c : f(c) = 0}; chi(0) = 0 contributes nothing
    magnitude: float
    weil_rhs: float  # (e - 1) * sqrt(q)
    lemma_applicable: bool

    @property
    def value(self):
        z = 0j
        for j, c in enumerate(self.counts):
            z += c * cmath.exp(2j * cmath.pi * j / self.order)
        return z


def character_sum(ctx: FieldCtx, order: int, f) -> CharSumReport:
    """Exact tally of sum over c in F_q of chi(f(c)) for the order-`order`
    character sending gamma to a primitive root of unity."""
    q = ctx.q
    if order <= 1:
        raise ValueError("character order must exceed 1")
    if (q - 1) % order:
        raise ValueError(f"character order {order} does not divide q-1 = {q - 1}")
    f = fqpoly.trim(f)
    if not f:
        raise ValueError("f must be nonzero")

    counts = [0] * order
    zeros = 0
    if ctx.m == 1:
        xs = np.arange(q, dtype=np.int64)
        vals = np.full(q, f[-1] % q, dtype=np.int64)
        for c in reversed(f[:-1]):
            vals = (vals * xs + c) % q
        log = np.asarray(ctx.log_table, dtype=np.int64)
        nz = vals != 0
        zeros = int(q - np.count_nonzero(nz))
        tally = np.bincount(log[vals[nz]] % order, minlength=order)
        counts = [int(t) for t in tally]
    else:
        for c in ctx.elements():
            v = fqpoly.evaluate(ctx, f, c)
            if v == 0:
                zeros += 1
            else:
                counts[ctx.log_table[v] % order] += 1

    parts = fqpoly.squarefree_decomposition(ctx, f)
    e = sum(fqpoly.degree(g) for g, _ in parts)
    applicable = fqpoly.degree(f) >= 1 and not all(m % order == 0 for _, m in parts)

    z = 0j
    for j, c in enumerate(counts):
        z += c * cmath.exp(2j * cmath.pi * j / order)
    return CharSumReport(q=q, order=order, f=tuple(f), e=e, counts=tuple(counts),
                         zeros=zeros, magnitude=abs(z),
                         weil_rhs=(e - 1) * math.sqrt(q),
                         lemma_applicable=applicable)


def weil_check(report: CharSumReport, tol: float = 1e-6) -> bool:
    """Whether the tallied magnitude respects (e-1)*sqrt(q).  Raises
    WeilNotApplicableError when f is a constant times an order-th power,
    which the bound does not cover (distinct from returning False)."""
    if not report.lemma_applicable:
        raise WeilNotApplicableError(
            "bound needs a nonconstant f that is not a perfect power of the character order")
    return report.magnitude <= report.weil_rhs + tol


# ---------------------------------------------------------------------------
# general lower bound

def klc_lower_bound(q: int, l: int, k: int) -> float:
    """Strict lower bound on LC_k: l/(sqrt(q)+2k) - 1 for odd l, with the
    denominator 2 larger for even l."""
    t = 2 * k if l % 2 else 2 * k + 2
    return l / (math.sqrt(q) + t) - 1


def exceeds_klc_lower_bound(lc_k: int, q: int, l: int, k: int) -> bool:
    """Exact integer check of lc_k > l/(sqrt(q)+t) - 1 (no float rounding)."""
    t = 2 * k if l % 2 else 2 * k + 2
    lhs = lc_k + 1                      # want lhs * (sqrt(q) + t) > l
    rhs = l - t * lhs                   # i.e. lhs * sqrt(q) > rhs
    if rhs < 0:
        return True
    return lhs * lhs * q > rhs * rhs


# ---------------------------------------------------------------------------
# root-exclusion route: prime r | l with d a primitive root mod r

def root_exclusion_applicability(q: int, d: int, l: int, r: int, k: int):
    """Checks the hypotheses that keep every r-th root of unity out of the
    root set of all weight-<=k perturbations.  Returns (ok, reasons)."""
    reasons = []
    r_prime = is_prime(r) and r % 2 == 1
    if not r_prime:
        reasons.append("r must be an odd prime")
    if r == d:
        reasons.append("r must differ from d")
    if l % r:
        reasons.append("r must divide l")
    if r_prime and r != d and not is_primitive_root(d, r):
        reasons.append("d must be a primitive root modulo r")
    t = r - 2 * k - 1
    if t < 0 or t * t < q:
        reasons.append("r must be at least sqrt(q) + 2k + 1")
    return not reasons, reasons


def verify_root_exclusion(seq: PeriodicSequence, r: int, k: int,
                          budget: int | None = DEFAULT_BUDGET) -> bool:
    """True iff T(x) stays coprime to 1 + x + ... + x^(r-1) for the base
    sequence and every perturbation of weight <= k (exhaustive)."""
    l, d = seq.l, seq.d
    if l % r:
        raise ValueError(f"r = {r} must divide the period {l}")
    count = search_space_size(l, d, k)
    if budget is not None and count > budget:
        raise SearchBudgetError(count, budget)
    psi = Poly([1] * r, d)
    folded = [0] * r
    for p, t in enumerate(seq.terms):
        folded[p % r] = (folded[p % r] + t) % d
    if not _coprime_to_psi(folded, psi, d):
        return False
    for pat in enumerate_error_patterns(seq, k):
        fl = list(folded)
        for pos, val in pat:
            fl[pos % r] = (fl[pos % r] + val - seq.terms[pos]) % d
        if not _coprime_to_psi(fl, psi, d):
            return False
    return True


def _coprime_to_psi(folded, psi, d):
    T = Poly(folded, d)
    if T.is_zero():
        return False
    return poly_gcd(T, psi).degree == 0


def klc_floor(d: int, m: int, r: int) -> int:
    """Guaranteed floor (r-1)*d^m on LC_k when the root-exclusion
    hypotheses hold for l = d^m * r * v."""
    return (r - 1) * d ** m


# ---------------------------------------------------------------------------
# exact one-error predictions for d = 3, l = (q-1)/2, q = 7 (mod 12)

_S11_B_COEFF = {0: 0, 1: -1, 2: 1}  # by the cube class of 2


@dataclass(frozen=True)
class OneErrorPrediction:
    q: int
    gamma: int
    l: int
    A: int
    B: int
    b: int
    s1: int          # predicted S(1) mod 3
    s1_hasse: int    # predicted first Hasse derivative at 1, mod 3
    relation: str    # "LC1=LC", "LC1=l-1", or "none"
    conditions: tuple  # ((description, holds), ...) behind the LC relation


def one_error_prediction(ctx: FieldCtx) -> OneErrorPrediction:
    """Predicted S(1) = -B and S'(1) = (1-A)/3 + c*B (mod 3) for the
    ternary half-period subsequence, with c in {0,-1,+1} set by the cube
    class of 2; plus the exact one-error relation when the period has the
    form 3^a * r with r prime, 3 primitive mod r and r >= sqrt(q) + 3."""
    q = ctx.q
    if q % 12 != 7:
        raise ValueError(f"predictions cover q = 7 (mod 12) only, got q = {q}")
    dec = ab_decomposition(ctx)
    l = (q - 1) // 2
    a = 0
    rest = l
    while rest % 3 == 0:
        rest //= 3
        a += 1
    shape_ok = a >= 1 and rest != 3 and rest != 1 and is_prime(rest)
    conds = [("period is 3^a * r with a >= 1 and r prime, r != 3", shape_ok),
             ("3 is a primitive root modulo r",
              shape_ok and is_primitive_root(3, rest)),
             ("r >= sqrt(q) + 3",
              shape_ok and rest - 3 >= 0 and (rest - 3) ** 2 >= q),
             ("B = 0 (mod 3)", dec.B % 3 == 0)]
    if all(ok for _, ok in conds):
        relation = "LC1=l-1" if dec.A % 9 != 1 else "LC1=LC"
    else:
        relation = "none"
    c = _S11_B_COEFF[dec.b % 3]
    return OneErrorPrediction(
        q=q, gamma=ctx.gamma, l=l, A=dec.A, B=dec.B, b=dec.b,
        s1=-dec.B % 3,
        s1_hasse=((1 - dec.A) // 3 + c * dec.B) % 3,
        relation=relation,
        conditions=tuple(conds))


def sequence_s_values(seq: PeriodicSequence):
    """(S(1), first Hasse derivative at 1) mod d, directly from one period."""
    d = seq.d
    s1 = sum(seq.terms) % d
    s11 = sum(n * t for n, t in enumerate(seq.terms)) % d
    return s1, s11


def hasse_at_one_via_cyclotomy(ctx: FieldCtx, d: int, l: int, h: int,
                               max_order: int = 5000) -> int:
    """The h-th Hasse derivative of S at 1, computed from cyclotomic-number
    counts instead of the polynomial; must equal the direct evaluation.

    Valid for h < d^e where d^e divides l; uses the order-(q-1)/l * d^e
    brute-force table, so h must be small enough for that order to stay
    within max_order."""
    q = ctx.q
    if (q - 1) % l or (q - 1) % d:
        raise ValueError("d and l must divide q-1")
    e = 1
    while d ** e <= h:
        e += 1
    if l % d ** e:
        raise ValueError(f"period has no d^{e} part; h = {h} is out of range")
    step = (q - 1) // l
    w = step * d ** e
    if w > max_order:
        raise ValueError(f"needs order-{w} cyclotomic numbers, over the cap {max_order}")
    table = cyclotomic_numbers_bruteforce(ctx, w)
    total = 0
    for i in range(h, d ** e):
        coef = lucas_binomial(i, h, d)
        if coef == 0:
            continue
        inner = 0
        for j in range(step * d ** (e - 1)):
            for m in range(1, d):
                inner += table.counts[step * i][j * d + m] * m
        total += coef * inner
    return total % d


# ---------------------------------------------------------------------------
# combined report

@dataclass(frozen=True)
class BoundReport:
    q: int
    gamma: int
    d: int
    l: int
    k: int
    general_bound: float
    s: int               # d-adic valuation of l
    r: int | None        # prime picked for the root-exclusion route
    v: int | None        # cofactor in l = d^s * r * v
    root_exclusion_ok: bool
    reasons: tuple
    klc_floor: int | None
    one_error: OneErrorPrediction | None


def bound_report(ctx: FieldCtx, d: int, l: int, k: int) -> BoundReport:
    """Every applicable bound for the (q, d, l, k) tuple, with reasons for
    any inapplicable route."""
    q = ctx.q
    if not is_prime(d) or (q - 1) % d:
        raise ValueError(f"d must be a prime divisor of q-1 = {q - 1}")
    if l < 1 or (q - 1) % l:
        raise ValueError(f"l = {l} does not divide q-1 = {q - 1}")
    s, rest = dadic_split(l, d)
    general = klc_lower_bound(q, l, k)
    choice = None
    for r in sorted(prime_factors(rest), reverse=True):
        ok, reasons = root_exclusion_applicability(q, d, l, r, k)
        if choice is None or (ok and not choice[1]):
            choice = (r, ok, reasons)
        if ok:
            break
    if choice is None:
        r_sel, ok, reasons, v, floor = None, False, ["period is a power of d"], None, None
    else:
        r_sel, ok, reasons = choice
        v = rest // r_sel
        floor = klc_floor(d, s, r_sel) if ok else None
    one = None
    if d == 3 and q % 12 == 7 and l == (q - 1) // 2:
        one = one_error_prediction(ctx)
    return BoundReport(q=q, gamma=ctx.gamma, d=d, l=l, k=k, general_bound=general,
                       s=s, r=r_sel, v=v, root_exclusion_ok=ok,
                       reasons=tuple(reasons), klc_floor=floor, one_error=one)
