"""Exhaustive k-error search engine.

Over F_d, x^l - 1 = (x^r - 1)^(d^s) where l = d^s * r with r coprime to d,
so deg gcd(x^l - 1, T) is the sum over the distinct irreducible factors g
of x^r - 1 of deg(g) * min(d^s, mult_g(T)).  Whether g^j divides a
perturbed candidate is a linear update of precomputed monomial residues,
which vectorizes across whole candidate blocks; level j+1 is only probed
on the (shrinking) subset that passed level j, so the expected cost per
candidate is a few vector operations.

Candidate enumeration order matches sequences.enumerate_error_patterns:
weights ascending, position tuples lexicographic, replacement values
ascending; np.argmin's first-hit rule then yields the canonical witness.
"""

from __future__ import annotations

from itertools import combinations, islice
from math import comb

import numpy as np

from ._factor import cyclic_factors

_BLOCK_CELLS = 1 << 22  # rough cap on candidates x table-width per block


def dadic_split(l: int, d: int):
    """l = d^s * r with r coprime to d; returns (s, r)."""
    s = 0
    while l % d == 0:
        l //= d
        s += 1
    return s, l


class _FactorTables:
    """Monomial-residue tables for one irreducible factor g of x^r - 1,
    built lazily per power g^level."""

    def __init__(self, g, l, d, cap):
        self.e = len(g) - 1
        self.l = l
        self.d = d
        self.cap = cap
        self._powers = {1: list(g)}
        self._tables = {}
        self._base = {}

    def _power(self, level):
        while level not in self._powers:
            top = max(self._powers)
            cur = self._powers[top]
            g = self._powers[1]
            nxt = [0] * (len(cur) + len(g) - 1)
            for i, a in enumerate(cur):
                if a:
                    for j, b in enumerate(g):
                        nxt[i + j] = (nxt[i + j] + a * b) % self.d
            self._powers[top + 1] = nxt
        return self._powers[level]

    def table(self, level):
        """Rows x^p mod g^level for p in [0, l), shape (l, deg(g^level))."""
        if level not in self._tables:
            mod = self._power(level)
            degm = len(mod) - 1
            d = self.d
            rows = np.zeros((self.l, degm), dtype=np.int32)
            row = [0] * degm
            row[0] = 1
            for p in range(self.l):
                rows[p] = row
                top = row[degm - 1]
                row = [0] + row[:degm - 1]
                if top:
                    for t in range(degm):
                        row[t] = (row[t] - top * mod[t]) % d
            self._tables[level] = rows
        return self._tables[level]

    def base_residue(self, level, terms):
        if level not in self._base:
            self._base[level] = terms @ self.table(level) % self.d
        return self._base[level]


def _base_contrib(terms, ft):
    contrib = 0
    for level in range(1, ft.cap + 1):
        if ft.base_residue(level, terms).any():
            break
        contrib += ft.e
    return contrib


def _factor_contrib(contrib, ft, terms, P, D, w):
    """Add e * min(cap, mult) for one factor across a candidate block."""
    d = ft.d
    idx = None
    for level in range(1, ft.cap + 1):
        tab = ft.table(level)
        base = ft.base_residue(level, terms)
        if idx is None:
            acc = np.tile(base, (P.shape[0], 1))
            for i in range(w):
                acc += D[:, i, None] * tab[P[:, i]]
            hit = np.nonzero(~(acc % d).any(axis=1))[0]
        else:
            Ps, Ds = P[idx], D[idx]
            acc = np.tile(base, (idx.size, 1))
            for i in range(w):
                acc += Ds[:, i, None] * tab[Ps[:, i]]
            hit = idx[np.nonzero(~(acc % d).any(axis=1))[0]]
        if hit.size == 0:
            return
        contrib[hit] += ft.e
        idx = hit


def _search_weight(terms, deltas, l, d, w, factors):
    """Minimum lc over weight-w perturbations; returns (lc, local_index)."""
    if w > l:
        return None
    reps = (d - 1) ** w
    digit_grid = np.indices((d - 1,) * w).reshape(w, -1).T  # (reps, w), last fastest
    max_width = max(ft.e * ft.cap for ft in factors)
    block_pairs = max(1, _BLOCK_CELLS // max(1, reps * max_width))
    best = None
    combo_iter = combinations(range(l), w)
    pair_offset = 0
    while True:
        block = list(islice(combo_iter, block_pairs))
        if not block:
            break
        P = np.repeat(np.asarray(block, dtype=np.int64), reps, axis=0)
        T = np.tile(digit_grid, (len(block), 1))
        D = deltas[P, T]
        contrib = np.zeros(P.shape[0], dtype=np.int64)
        for ft in factors:
            _factor_contrib(contrib, ft, terms, P, D, w)
        lc_vals = l - contrib
        i = int(np.argmin(lc_vals))
        cand = (int(lc_vals[i]), pair_offset * reps + i)
        if best is None or cand < best:
            best = cand
        pair_offset += len(block)
    return best


def exhaustive_search(seq, k):
    """Base lc plus, per weight w = 1..k, the minimum lc over weight-w
    perturbations with the first achieving candidate index."""
    d, l = seq.d, seq.l
    terms = np.asarray(seq.terms, dtype=np.int64)
    s, r = dadic_split(l, d)
    cap = d ** s
    factors = [_FactorTables(list(g), l, d, cap) for g in cyclic_factors(r, d)]
    base_lc = l - sum(_base_contrib(terms, ft) for ft in factors)

    t_idx = np.arange(d - 1, dtype=np.int64)
    vals_sorted = t_idx[None, :] + (t_idx[None, :] >= terms[:, None])
    deltas = (vals_sorted - terms[:, None]) % d

    results = []
    for w in range(1, k + 1):
        results.append(_search_weight(terms, deltas, l, d, w, factors))
    return base_lc, results


def unrank_combination(l, w, idx):
    """Position tuple at index idx in lexicographic combination order."""
    out = []
    a = 0
    for i in range(w):
        while True:
            c = comb(l - a - 1, w - i - 1)
            if idx < c:
                out.append(a)
                a += 1
                break
            idx -= c
            a += 1
    return tuple(out)


def unrank_pattern(base_terms, d, w, idx):
    """Invert the weight-w enumeration order into an error pattern."""
    reps = (d - 1) ** w
    combo_idx, rep_idx = divmod(idx, reps)
    positions = unrank_combination(len(base_terms), w, combo_idx)
    digits = []
    for _ in range(w):
        rep_idx, dig = divmod(rep_idx, d - 1)
        digits.append(dig)
    digits.reverse()
    return tuple((pos, dig + (dig >= base_terms[pos]))
                 for pos, dig in zip(positions, digits))


def factored_lc(terms, d):
    """Scalar reference for the engine's arithmetic: the same factored
    gcd-degree computation, one candidate at a time."""
    l = len(terms)
    T = [t % d for t in terms]
    if not any(T):
        return 0
    s, r = dadic_split(l, d)
    cap = d ** s
    total = 0
    for g in cyclic_factors(r, d):
        g = list(g)
        mult = 0
        W = T
        while mult < cap:
            quo, rem = _list_divmod(W, g, d)
            if any(rem):
                break
            W = quo
            mult += 1
        total += (len(g) - 1) * mult
    return l - total


def _list_divmod(a, b, d):
    """Long division of coefficient lists (constant first); b is monic."""
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], a
    quot = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            quot[i - db] = c
            for t in range(db + 1):
                a[i - db + t] = (a[i - db + t] - c * b[t]) % d
    return quot, a[:db]
