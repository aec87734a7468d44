"""Polynomial machinery, linear complexity routes, and the k-error search."""

import random
from math import comb

import pytest

from sidelseq._kerror import (dadic_split, factored_lc, unrank_combination,
                              unrank_pattern)
from sidelseq.complexity import (Poly, SearchBudgetError, berlekamp_massey,
                                 hasse_derivative, k_error_lc,
                                 k_error_lc_bruteforce, k_error_report,
                                 lc_via_gcd, lucas_binomial, poly_gcd,
                                 root_multiplicity,
                                 root_multiplicity_by_division,
                                 search_space_size, seq_poly, xn_minus_one)
from sidelseq.field import build_field
from sidelseq.sequences import (PeriodicSequence, enumerate_error_patterns,
                                perturb, sidelnikov_subsequence)


def test_poly_normalization_and_ops():
    p = Poly([1, 2, 0, 0], 3)
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    z = Poly([], 3)
    assert z.is_zero() and z.degree == -1
    a = Poly([1, 1], 3)     # 1 + x
    b = Poly([2, 1], 3)     # 2 + x
    assert (a * b).coeffs == (2, 0, 1)
    q, r = divmod(a * b, a)
    assert q == b and r.is_zero()


def test_poly_gcd_examples():
    # x+1 and (x+2)^3 are coprime over F_3
    a = Poly([1, 1], 3)
    b = Poly([2, 1], 3)
    cube = b * b * b
    assert poly_gcd(a, cube).degree == 0
    assert poly_gcd(a, Poly([], 3)) == a.monic()
    sq = Poly([2, 1], 3) * Poly([2, 1], 3)
    assert poly_gcd(sq, sq * Poly([2, 1], 3)) == sq.monic()
    with pytest.raises(ValueError):
        poly_gcd(Poly([], 3), Poly([], 3))


def test_lc_via_gcd_examples():
    assert lc_via_gcd(PeriodicSequence(3, (0, 0, 0, 0))) == 0
    assert lc_via_gcd(PeriodicSequence(3, (1, 0, 0, 0, 0))) == 5
    assert lc_via_gcd(PeriodicSequence(3, (1, 1, 0))) == 3


def test_berlekamp_massey_examples():
    L, char = berlekamp_massey(PeriodicSequence(3, (0, 0, 0)))
    assert (L, char) == (0, Poly([1], 3))
    L, char = berlekamp_massey(PeriodicSequence(3, (1, 1, 0)))
    assert L == 3
    assert char.degree == 3 and char.coeffs[-1] == 1


def test_bm_char_poly_satisfies_recurrence():
    rng = random.Random(5)
    for _ in range(50):
        d = rng.choice([3, 5])
        l = rng.randrange(2, 16)
        seq = PeriodicSequence(d, tuple(rng.randrange(d) for _ in range(l)))
        L, char = berlekamp_massey(seq)
        s = seq.terms * 3
        for n in range(len(s) - L):
            acc = sum(char.coeffs[i] * s[n + i] for i in range(L + 1)) % d
            assert acc == 0


def test_oracle_equivalence_gcd_vs_bm():
    rng = random.Random(99)
    for _ in range(500):
        d = rng.choice([3, 5])
        l = rng.randrange(3, 51)
        seq = PeriodicSequence(d, tuple(rng.randrange(d) for _ in range(l)))
        L, _ = berlekamp_massey(seq)
        assert L == lc_via_gcd(seq)


def test_factored_lc_matches_gcd():
    rng = random.Random(31)
    for _ in range(200):
        d = rng.choice([2, 3, 5])
        l = rng.randrange(1, 40)
        terms = tuple(rng.randrange(d) for _ in range(l))
        assert factored_lc(terms, d) == lc_via_gcd(PeriodicSequence(d, terms))


def test_lucas_binomial():
    assert lucas_binomial(7, 2, 3) == 0
    assert lucas_binomial(4, 1, 3) == 1
    for n in range(61):
        for h in range(n + 1):
            for d in (3, 5):
                assert lucas_binomial(n, h, d) == comb(n, h) % d
    assert lucas_binomial(5, 7, 3) == 0  # h > n


def test_lucas_periodicity_in_digit_window():
    # for h < d^e the value depends on n only through n mod d^e
    d, e = 3, 2
    for h in range(d ** e):
        for n in range(h, 60):
            m = n % d ** e
            while m < h:
                m += d ** e
            assert lucas_binomial(n, h, d) == lucas_binomial(m, h, d)


def test_hasse_derivative_examples():
    S = Poly([1, 1, 1], 3)  # (x-1)^2 over F_3
    assert hasse_derivative(S, 1).coeffs == (1, 2)
    assert hasse_derivative(S, 0) == S
    assert hasse_derivative(S, 5).is_zero()


def test_root_multiplicity():
    S = Poly([1, 1, 1], 3)
    assert root_multiplicity(S, 1) == 2
    assert root_multiplicity(Poly([1, 1], 3), 2) == 1
    assert root_multiplicity(Poly([1, 2, 1], 3), 1) == 0
    with pytest.raises(ValueError):
        root_multiplicity(Poly([], 3), 1)


def test_root_multiplicity_two_routes_agree():
    rng = random.Random(17)
    for _ in range(200):
        deg = rng.randrange(1, 12)
        coeffs = [rng.randrange(3) for _ in range(deg)] + [rng.randrange(1, 3)]
        S = Poly(coeffs, 3)
        for theta in range(3):
            assert root_multiplicity(S, theta) == root_multiplicity_by_division(S, theta)


def test_hasse_lc_link():
    # lc = l - sum of multiplicities of the roots of x^l - 1 inside S
    for q, d, l in [(7, 3, 6), (13, 3, 12), (31, 3, 15), (31, 5, 30)]:
        ctx = build_field(q)
        seq = sidelnikov_subsequence(ctx, d, l)
        S = seq_poly(seq)
        g = poly_gcd(xn_minus_one(l, d), S)
        assert lc_via_gcd(seq) == l - g.degree
        assert factored_lc(seq.terms, d) == lc_via_gcd(seq)


def test_k_error_examples():
    seq = PeriodicSequence(3, (1, 0, 0))
    entry = k_error_lc(seq, 1)
    assert entry.lc == 0
    assert entry.witness == ((0, 0),)
    assert k_error_lc(seq, 0).lc == lc_via_gcd(seq)
    ctx = build_field(7)
    s6 = sidelnikov_subsequence(ctx, 3, 6)
    rep = k_error_report(s6, 1)
    assert rep.lc == 5
    assert rep.entries[1].lc == 4
    assert rep.entries[1].witness == ((0, 1),)


def test_k_error_monotone_and_witness_valid():
    rng = random.Random(3)
    for _ in range(30):
        d = rng.choice([2, 3, 5])
        l = rng.randrange(2, 12)
        seq = PeriodicSequence(d, tuple(rng.randrange(d) for _ in range(l)))
        k = rng.randrange(0, min(l, 3) + 1)
        rep = k_error_report(seq, k)
        lcs = [e.lc for e in rep.entries]
        assert lcs == sorted(lcs, reverse=True)
        for e in rep.entries:
            assert len(e.witness) <= e.k
            assert lc_via_gcd(perturb(seq, e.witness)) == e.lc


def test_k_error_engine_matches_bruteforce():
    rng = random.Random(1234)
    for _ in range(40):
        d = rng.choice([2, 3, 5])
        l = rng.randrange(2, 10)
        k = rng.randrange(0, min(l, 2) + 1)
        seq = PeriodicSequence(d, tuple(rng.randrange(d) for _ in range(l)))
        rep = k_error_report(seq, k)
        val, wit = k_error_lc_bruteforce(seq, k)
        assert rep.entries[k].lc == val
        assert rep.entries[k].witness == wit


def test_search_budget():
    seq = PeriodicSequence(3, tuple([1] * 30))
    with pytest.raises(SearchBudgetError) as exc:
        k_error_report(seq, 2, budget=100)
    assert exc.value.count == search_space_size(30, 3, 2)


def test_unranking_matches_enumeration():
    for d, l, k in [(3, 5, 2), (2, 6, 2), (5, 4, 1)]:
        seq = PeriodicSequence(d, tuple(i % d for i in range(l)))
        pats = list(enumerate_error_patterns(seq, k))
        idx = 0
        for w in range(1, k + 1):
            reps = (d - 1) ** w
            for t in range(comb(l, w) * reps):
                assert unrank_pattern(seq.terms, d, w, t) == pats[idx]
                idx += 1


def test_unrank_combination_lex():
    from itertools import combinations
    for l, w in [(6, 2), (7, 3), (5, 1)]:
        for i, combo in enumerate(combinations(range(l), w)):
            assert unrank_combination(l, w, i) == combo


def test_dadic_split():
    assert dadic_split(711, 3) == (2, 79)
    assert dadic_split(51, 3) == (1, 17)
    assert dadic_split(10, 3) == (0, 10)


def test_extension_field_end_to_end():
    ctx = build_field(7, 2)
    seq = sidelnikov_subsequence(ctx, 3, 48)
    assert lc_via_gcd(seq) == berlekamp_massey(seq)[0] == factored_lc(seq.terms, 3)
    rep = k_error_report(seq, 1)
    assert rep.entries[1].lc <= rep.lc
    assert lc_via_gcd(perturb(seq, rep.entries[1].witness)) == rep.entries[1].lc
