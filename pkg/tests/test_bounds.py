"""Character sums, Weil checks, lower bounds, root exclusion, predictions."""

import math
import random

import pytest

from sidelseq import fqpoly
from sidelseq.bounds import (WeilNotApplicableError, bound_report,
                             character_sum, exceeds_klc_lower_bound,
                             hasse_at_one_via_cyclotomy, klc_floor,
                             klc_lower_bound, one_error_prediction,
                             root_exclusion_applicability, sequence_s_values,
                             verify_root_exclusion, weil_check)
from sidelseq.complexity import hasse_derivative, seq_poly
from sidelseq.field import build_field
from sidelseq.sequences import PeriodicSequence, sidelnikov_subsequence


def test_character_sum_full_sum_vanishes():
    ctx = build_field(7)
    rep = character_sum(ctx, 3, [1, 1])  # f = x + 1
    assert rep.magnitude < 1e-9
    assert rep.e == 1
    assert rep.weil_rhs == 0.0
    assert weil_check(rep)
    repx = character_sum(ctx, 3, [0, 1])  # f = x
    assert repx.magnitude < 1e-9


def test_character_sum_equality_case():
    ctx = build_field(7)
    rep = character_sum(ctx, 3, [0, 1, 1])  # f = x^2 + x
    a, b, c = rep.counts
    assert (a, b, c) == (2, 0, 3)
    assert rep.zeros == 2
    # |a + b w + c w^2|^2 for the cube roots of unity, exactly in integers
    assert a * a + b * b + c * c - a * b - b * c - a * c == 7
    assert rep.e == 2
    assert abs(rep.magnitude - math.sqrt(7)) < 1e-9
    assert weil_check(rep)


def test_character_sum_tally_partition():
    ctx = build_field(13)
    rep = character_sum(ctx, 4, [5, 0, 3, 1])
    assert sum(rep.counts) + rep.zeros == 13


def test_weil_not_applicable_for_powers():
    ctx = build_field(7)
    cube = fqpoly.mul(ctx, fqpoly.mul(ctx, [1, 1], [1, 1]), [1, 1])
    rep = character_sum(ctx, 3, cube)
    assert not rep.lemma_applicable
    with pytest.raises(WeilNotApplicableError):
        weil_check(rep)
    const = character_sum(ctx, 3, [4])
    with pytest.raises(WeilNotApplicableError):
        weil_check(const)


def test_character_sum_extension_field():
    ctx = build_field(3, 2, modulus=[1, 0, 1])
    rep = character_sum(ctx, 2, [1, 1])
    assert sum(rep.counts) + rep.zeros == 9
    assert weil_check(rep)


def test_weil_random_polys_small():
    rng = random.Random(2024)
    for q in (11, 17, 19, 23):
        ctx = build_field(q)
        for d in [dd for dd in range(2, q) if (q - 1) % dd == 0]:
            done = 0
            while done < 10:
                deg = rng.randrange(1, 5)
                coeffs = [rng.randrange(q) for _ in range(deg)] + [rng.randrange(1, q)]
                rep = character_sum(ctx, d, coeffs)
                if not rep.lemma_applicable:
                    continue
                assert weil_check(rep), (q, d, coeffs)
                done += 1


def test_klc_lower_bound_values():
    assert abs(klc_lower_bound(1423, 711, 1) - 16.899) < 1e-3
    assert abs(klc_lower_bound(7, 6, 0) - 0.2915) < 1e-4
    for k in range(4):
        assert klc_lower_bound(49, 24, k + 1) < klc_lower_bound(49, 24, k)


def test_exceeds_klc_lower_bound_exact():
    for q, l, k in [(1423, 711, 1), (7, 6, 0), (103, 51, 1), (49, 16, 2)]:
        bound = klc_lower_bound(q, l, k)
        for lck in range(0, l + 1):
            assert exceeds_klc_lower_bound(lck, q, l, k) == (lck > bound)


def test_root_exclusion_applicability():
    ok, reasons = root_exclusion_applicability(1423, 3, 711, 79, 1)
    assert ok and reasons == []
    ok, reasons = root_exclusion_applicability(1423, 3, 711, 3, 1)
    assert not ok and "r must differ from d" in reasons
    ok, reasons = root_exclusion_applicability(1423, 3, 711, 5, 1)
    assert not ok
    assert "r must divide l" in reasons
    assert "r must be at least sqrt(q) + 2k + 1" in reasons
    ok, reasons = root_exclusion_applicability(103, 3, 51, 17, 1)
    assert ok


def test_verify_root_exclusion():
    allones = PeriodicSequence(3, (1,) * 7)
    assert verify_root_exclusion(allones, 7, 0) is False  # geometric sum vanishes
    ctx = build_field(103)
    seq = sidelnikov_subsequence(ctx, 3, 51)
    assert verify_root_exclusion(seq, 17, 0) is True
    assert verify_root_exclusion(seq, 17, 1) is True


def test_klc_floor():
    assert klc_floor(3, 2, 79) == 702
    assert klc_floor(3, 0, 11) == 10
    assert klc_floor(3, 1, 17) == 48


def test_one_error_prediction_q7():
    ctx = build_field(7)
    pred = one_error_prediction(ctx)
    assert (pred.A, pred.B, pred.b % 3) == (-2, 1, 2)
    assert pred.s1 == 2
    assert pred.s1_hasse == 2
    assert pred.relation == "none"  # the r-shape hypothesis fails at l = 3
    seq = sidelnikov_subsequence(ctx, 3, 3)
    assert sequence_s_values(seq) == (2, 2)


def test_one_error_prediction_q1423():
    ctx = build_field(1423)
    pred = one_error_prediction(ctx)
    assert pred.A == 10
    assert pred.B % 3 == 0
    assert pred.relation == "LC1=LC"  # A = 10 is 1 (mod 9), so not the l-1 clause
    assert pred.s1 == 0
    seq = sidelnikov_subsequence(ctx, 3, 711)
    assert verify_root_exclusion(seq, 79, 0) is True  # single gcd computation


def test_one_error_prediction_rejects():
    with pytest.raises(ValueError):
        one_error_prediction(build_field(13))


def test_one_error_l_minus_one_clause_q1399():
    # l = 699 = 3 * 233, B = -9, A = 34 not 1 (mod 9): LC_1 = l - 1 exactly
    from sidelseq.complexity import k_error_report
    from sidelseq.sequences import sidelnikov_subsequence as gen
    ctx = build_field(1399)
    pred = one_error_prediction(ctx)
    assert pred.relation == "LC1=l-1"
    seq = gen(ctx, 3, pred.l)
    rep = k_error_report(seq, 1)
    assert rep.entries[1].lc == pred.l - 1 == 698


def test_s_value_congruences_sample():
    from sidelseq.field import is_prime
    for q in [q for q in range(7, 400) if q % 12 == 7 and is_prime(q)]:
        ctx = build_field(q)
        pred = one_error_prediction(ctx)
        seq = sidelnikov_subsequence(ctx, 3, (q - 1) // 2)
        assert sequence_s_values(seq) == (pred.s1, pred.s1_hasse), q


def test_hasse_via_cyclotomy_matches_direct():
    ctx = build_field(7)
    for l, h in [(3, 0), (3, 1), (6, 0), (6, 1), (6, 2)]:
        seq = sidelnikov_subsequence(ctx, 3, l)
        direct = hasse_derivative(seq_poly(seq), h).evaluate(1)
        assert hasse_at_one_via_cyclotomy(ctx, 3, l, h) == direct
    ctx31 = build_field(31)
    for h in (0, 1, 2):
        seq = sidelnikov_subsequence(ctx31, 3, 15)
        direct = hasse_derivative(seq_poly(seq), h).evaluate(1)
        assert hasse_at_one_via_cyclotomy(ctx31, 3, 15, h) == direct


def test_hasse_via_cyclotomy_rejects_large_h():
    ctx = build_field(7)
    with pytest.raises(ValueError):
        hasse_at_one_via_cyclotomy(ctx, 3, 3, 3)  # needs 9 | l


def test_bound_report_q103():
    ctx = build_field(103)
    rep = bound_report(ctx, 3, 51, 1)
    assert rep.s == 1 and rep.r == 17 and rep.v == 1
    assert rep.root_exclusion_ok
    assert rep.klc_floor == 48
    assert rep.one_error is not None  # 103 = 7 (mod 12) and l = 51 is half period
    assert rep.general_bound < 51


def test_bound_report_fields_consistent():
    ctx = build_field(31)
    rep = bound_report(ctx, 3, 15, 2)
    assert rep.klc_floor is None or rep.root_exclusion_ok
    assert rep.general_bound <= rep.l
