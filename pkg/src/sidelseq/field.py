"""Exact arithmetic in small finite fields F_q, q = p^m.

Elements are encoded as integers in [0, q): for m = 1 the residue itself,
for m > 1 the base-p value of the coefficient vector (constant term in the
least significant digit).  The encoding doubles as the canonical element
ordering, which makes "the smallest primitive element" well defined and
keeps runs reproducible.

build_field precomputes the full discrete-log and antilog tables, so every
multiplicative operation afterwards is a table lookup.  The intended scale
is q up to roughly 10^5, which covers every search this package performs.
"""

from __future__ import annotations

MAX_FIELD_SIZE = 2_000_000


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def as_prime_power(q: int) -> tuple[int, int]:
    """Split q into (p, m) with q = p^m, p prime; ValueError otherwise."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    ps = prime_factors(q)
    if len(ps) != 1:
        raise ValueError(f"{q} is not a prime power")
    p = ps[0]
    m = 0
    while q % p == 0:
        q //= p
        m += 1
    if q != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, m


# ---------------------------------------------------------------------------
# Polynomials over F_p as coefficient lists (constant term first): only the
# pieces that modulus handling and direct multiplication need.

def _fp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mod(a, b, p):
    """Remainder of a modulo monic b."""
    r = [c % p for c in a]
    db = len(b) - 1
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c:
            r[i] = 0
            for t in range(db):
                r[i - db + t] = (r[i - db + t] - c * b[t]) % p
    return _fp_trim(r)


def _digits(x, p, m):
    out = []
    for _ in range(m):
        out.append(x % p)
        x //= p
    return out


def _encode(digits, p):
    v = 0
    for c in reversed(digits):
        v = v * p + c
    return v


def _fp_is_irreducible(poly, p):
    """Exhaustive trial division; poly must be monic over F_p."""
    deg = len(poly) - 1
    if deg == 1:
        return True
    if poly[0] == 0:
        return False
    for ddeg in range(1, deg // 2 + 1):
        for enc in range(p ** ddeg):
            div = _digits(enc, p, ddeg) + [1]
            if not _fp_mod(poly, div, p):
                return False
    return True


def _find_irreducible(p, m):
    """Monic irreducible of degree m over F_p with the smallest encoding."""
    for enc in range(p ** m):
        cand = _digits(enc, p, m) + [1]
        if _fp_is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # unreachable


def _direct_mul(p, m, modulus):
    """Multiplication on encoded elements, without dlog tables."""
    if m == 1:
        def mul(a, b):
            return a * b % p
        return mul

    mod_low = modulus[:-1]

    def mul(a, b):
        da = _digits(a, p, m)
        db = _digits(b, p, m)
        conv = [0] * (2 * m - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    conv[i + j] += ca * cb
        for i in range(2 * m - 2, m - 1, -1):
            c = conv[i] % p
            if c:
                for t in range(m):
                    conv[i - m + t] -= c * mod_low[t]
        return _encode([c % p for c in conv[:m]], p)

    return mul


def _pow_direct(mul, a, n):
    r = None
    base = a
    while n:
        if n & 1:
            r = base if r is None else mul(r, base)
        base = mul(base, base)
        n >>= 1
    return 1 if r is None else r


def _is_primitive(g, q, mul, divisor_primes):
    if g == 0:
        return False
    return all(_pow_direct(mul, g, (q - 1) // rho) != 1 for rho in divisor_primes)


def find_primitive_element(p, m=1, modulus=None):
    """Smallest primitive element of F_{p^m} in the canonical encoding order."""
    q = p ** m
    if q == 2:
        return 1
    if m > 1 and modulus is None:
        modulus = _find_irreducible(p, m)
    mul = _direct_mul(p, m, modulus)
    rhos = prime_factors(q - 1)
    for g in range(2, q):
        if _is_primitive(g, q, mul, rhos):
            return g
    raise AssertionError("no primitive element found")  # unreachable


class FieldCtx:
    """A finite field with a fixed primitive element and dlog tables.

    Immutable after construction and safe to share across workers; all
    operations are pure reads.
    """

    __slots__ = ("p", "m", "q", "modulus", "gamma", "log_table", "antilog_table")

    def __init__(self, p, m, modulus, gamma, log_table, antilog_table):
        self.p = p
        self.m = m
        self.q = p ** m
        self.modulus = modulus
        self.gamma = gamma
        self.log_table = log_table
        self.antilog_table = antilog_table

    def __repr__(self):
        return f"FieldCtx(q={self.q}, p={self.p}, m={self.m}, gamma={self.gamma})"

    def elements(self):
        return range(self.q)

    def coeffs(self, x):
        """Coefficient vector of x, constant term first (length m)."""
        return tuple(_digits(x, self.p, self.m))

    def encode(self, coeffs):
        coeffs = list(coeffs)
        if len(coeffs) > self.m:
            raise ValueError("coefficient vector longer than extension degree")
        coeffs += [0] * (self.m - len(coeffs))
        return _encode([c % self.p for c in coeffs], self.p)

    # -- additive structure -------------------------------------------------

    def add(self, a, b):
        if self.m == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        mult = 1
        while a or b:
            out += ((a % p) + (b % p)) % p * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a):
        if self.m == 1:
            return -a % self.p
        p = self.p
        out = 0
        mult = 1
        while a:
            out += -(a % p) % p * mult
            a //= p
            mult *= p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    # -- multiplicative structure (table lookups) ---------------------------

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.antilog_table[(self.log_table[a] + self.log_table[b]) % (self.q - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.antilog_table[-self.log_table[a] % (self.q - 1)]

    def pow(self, a, n):
        if a == 0:
            if n < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0 if n else 1
        return self.antilog_table[self.log_table[a] * n % (self.q - 1)]

    def discrete_log(self, x):
        """Exponent k in [0, q-2] with gamma^k = x; undefined for x = 0."""
        if not 0 < x < self.q:
            raise ValueError("discrete log is defined for nonzero field elements only")
        return self.log_table[x]


def build_field(p, m=1, modulus=None, gamma=None) -> FieldCtx:
    """Construct F_{p^m} with populated dlog tables.

    modulus: optional monic irreducible of degree m over F_p as a
    coefficient list (constant term first); the canonically smallest one is
    chosen when omitted.  gamma: optional primitive element (validated);
    the canonically smallest one is chosen when omitted.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"p must be prime, got {p!r}")
    if m < 1:
        raise ValueError("extension degree m must be >= 1")
    q = p ** m
    if q > MAX_FIELD_SIZE:
        raise ValueError(f"field size {q} exceeds the supported maximum {MAX_FIELD_SIZE}")

    if m == 1:
        if modulus is not None and [c % p for c in modulus] != [0, 1]:
            raise ValueError("modulus is fixed to x for prime fields")
        modulus = (0, 1)
    elif modulus is None:
        modulus = _find_irreducible(p, m)
    else:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree m")
        if not _fp_is_irreducible(list(modulus), p):
            raise ValueError("modulus is reducible over F_p")

    mul = _direct_mul(p, m, modulus)
    rhos = prime_factors(q - 1)
    if gamma is None:
        if q == 2:
            gamma = 1
        else:
            gamma = next(g for g in range(2, q) if _is_primitive(g, q, mul, rhos))
    else:
        if not 0 < gamma < q:
            raise ValueError("gamma must be a nonzero field element")
        if q > 2 and not _is_primitive(gamma, q, mul, rhos):
            raise ValueError(f"{gamma} is not a primitive element of F_{q}")

    antilog = [1]
    cur = 1
    for _ in range(q - 2):
        cur = mul(cur, gamma)
        antilog.append(cur)
    if mul(cur, gamma) != 1:
        raise AssertionError("chosen element does not have full order")
    log_table = [-1] * q
    for k, x in enumerate(antilog):
        log_table[x] = k

    return FieldCtx(p, m, modulus, gamma, log_table, antilog)
