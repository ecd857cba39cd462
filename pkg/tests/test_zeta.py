"""Counts -> power sums -> symmetric functions -> P2 -> Picard bound."""

import random

import pytest

from corpus import (
    FACTOR_A,
    FACTOR_B,
    KNOWN_COUNTS_P3,
    P2_COEFFS,
    POWER_SUM_RELATIONS,
    SYMMETRIC_C,
)
from wehler.errors import InconsistentDataError, UsageError
from wehler.zeta import (
    ZetaData,
    build_P2,
    counts_from_P2,
    cyclotomic,
    euler_phi,
    newton_girard,
    picard_upper_bound,
    poly_div_exact,
    poly_mul,
    power_sums_from_counts,
    r_polynomial,
    sturm_root_count,
    zeta_data,
    zeta_report,
)


def _check_relations(counts, p=3):
    power = power_sums_from_counts(counts, p)
    P = {k: v for k, v in enumerate(power, 1)}
    N = {k: v for k, v in enumerate(counts, 1)}
    for k, (const, terms) in POWER_SUM_RELATIONS.items():
        assert P[k] == N[k] + sum(a * P[j] for j, a in terms.items()) + const, k


def test_power_sums_known_values():
    power = power_sums_from_counts(KNOWN_COUNTS_P3, 3)
    assert power[:3] == (3, 213, 135)


def test_power_sums_satisfy_published_recurrences():
    _check_relations(KNOWN_COUNTS_P3)


def test_power_sums_recurrences_on_random_counts():
    # the closed form and the recurrences agree as linear maps, so they
    # agree on arbitrary integer vectors, not just true point counts
    rng = random.Random(41)
    for _ in range(100):
        counts = [rng.randint(-10 ** 6, 10 ** 6) for _ in range(11)]
        _check_relations(counts)


def test_power_sums_all_trivial_counts():
    # N_m = 1 + p^(2m) makes every S_m zero; only the even-k constant
    # term survives: P_4 = 11 * C(4,2) * 81 = 5346
    counts = [1 + 3 ** (2 * m) for m in range(1, 12)]
    power = power_sums_from_counts(counts, 3)
    assert power[0] == 0
    assert power[3] == 5346


def test_power_sums_need_eleven_counts():
    with pytest.raises(UsageError):
        power_sums_from_counts([13, 97], 3)


def test_newton_girard_known_values():
    power = power_sums_from_counts(KNOWN_COUNTS_P3, 3)
    assert newton_girard(power) == SYMMETRIC_C


def test_newton_girard_detects_corrupt_counts():
    corrupted = list(KNOWN_COUNTS_P3)
    corrupted[1] += 1
    power = power_sums_from_counts(corrupted, 3)
    with pytest.raises(InconsistentDataError):
        newton_girard(power)


def test_r_polynomial_shape():
    r = r_polynomial(SYMMETRIC_C)
    assert len(r) == 12 and r[-1] == 1
    assert r[10] == -SYMMETRIC_C[0]
    assert r[0] == -SYMMETRIC_C[10]


def test_build_P2_known_coefficients():
    assert build_P2(SYMMETRIC_C, 3) == P2_COEFFS
    assert P2_COEFFS[0] == 1
    assert P2_COEFFS[-1] == 3 ** 22 == 31381059609
    assert len(P2_COEFFS) == 23


def test_P2_functional_equation():
    for k in range(12):
        assert P2_COEFFS[22 - k] == 3 ** (2 * (11 - k)) * P2_COEFFS[k]


def test_P2_equals_published_factorization():
    assert poly_mul(list(FACTOR_A), list(FACTOR_B)) == list(P2_COEFFS)


def test_counts_round_trip_through_P2():
    assert counts_from_P2(P2_COEFFS, 3) == KNOWN_COUNTS_P3
    with pytest.raises(UsageError):
        counts_from_P2(P2_COEFFS, 3, terms=12)


def test_poly_helpers():
    assert poly_mul([1, 1], [1, -1]) == [1, 0, -1]
    assert poly_div_exact([1, 0, -1], [1, 1]) == [1, -1]
    assert poly_div_exact([1, 0, 1], [1, 1]) is None
    assert poly_div_exact([1], [1, 1]) is None


def test_euler_phi_and_cyclotomic():
    assert [euler_phi(n) for n in range(1, 13)] == \
        [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]
    assert cyclotomic(1) == (-1, 1)
    assert cyclotomic(2) == (1, 1)
    assert cyclotomic(4) == (1, 0, 1)
    assert cyclotomic(6) == (1, -1, 1)
    assert cyclotomic(12) == (1, 0, -1, 0, 1)
    # x^n - 1 = prod of cyclotomics over divisors
    for n in (6, 12):
        prod = [1]
        for d in range(1, n + 1):
            if n % d == 0:
                prod = poly_mul(prod, list(cyclotomic(d)))
        want = [0] * (n + 1)
        want[0], want[n] = -1, 1
        assert prod == want


def test_picard_bound_known_surface():
    bound, mults = picard_upper_bound(P2_COEFFS, 3)
    assert bound == 2
    assert mults == {1: 2}


def test_picard_bound_synthetic_extremes():
    # (1 - 3T)^22: all reciprocal roots are 3 * 1
    full = [1]
    for _ in range(22):
        full = poly_mul(full, [1, -3])
    bound, mults = picard_upper_bound(full, 3)
    assert bound == 22 and mults == {1: 22}
    # a quadratic with alpha = 3i: Phi_4(3T) = 1 + 9T^2
    bound, mults = picard_upper_bound([1, 0, 9], 3)
    assert bound == 2 and mults == {4: 1}


def test_sturm_root_counting():
    # (u - 1)(u - 2)(u + 3)
    poly = poly_mul(poly_mul([-1, 1], [-2, 1]), [3, 1])
    assert sturm_root_count(poly) == 3
    assert sturm_root_count(poly, 0, None) == 2
    assert sturm_root_count(poly, None, 0) == 1
    assert sturm_root_count(poly, 1, 2) == 1  # (1, 2] half-open
    assert sturm_root_count([1, 0, 1]) == 0  # u^2 + 1


def test_all_a_roots_real_and_bounded():
    # the a_i are real (alpha and its conjugate pair off) and |a_i| <= 2p
    r = r_polynomial(SYMMETRIC_C)
    assert sturm_root_count(r) == 11
    assert sturm_root_count(r, -6, 6) == 11


def test_zeta_data_and_report():
    data = zeta_data(KNOWN_COUNTS_P3, 3)
    assert isinstance(data, ZetaData)
    assert data.p2 == P2_COEFFS
    assert data.picard_bound == 2
    d = data.to_dict()
    assert d["picard_exact"] is True
    assert d["cyclotomic_multiplicities"] == {"1": 2}
    report = zeta_report(data)
    assert "1 / ((1 - T) * P2(T) * (1 - 9T))" in report
    assert "Phi_1(3T)^2" in report
    assert "Picard number upper bound: 2" in report
    assert "exactly 2" in report


def test_zeta_pipeline_without_unit_roots():
    # a synthetic P2 = prod (1 - a_i T + 9 T^2): alpha/3 is a root of unity
    # only when a_i is one of 0, 3, -3, 6, -6, so avoiding those leaves no
    # cyclotomic factor at all; the counts it generates must say so too
    a_values = (1, 2, 4, 5, -1, -2, -4, -5, 1, 2, 4)
    p2 = [1]
    for a in a_values:
        p2 = poly_mul(p2, [1, -a, 9])
    counts = counts_from_P2(p2, 3)
    data = zeta_data(counts, 3)
    assert data.p2 == tuple(p2)
    assert data.picard_bound == 0
    assert data.multiplicities == {}
    report = zeta_report(data)
    assert "root-of-unity factors: none" in report
    assert "exactly 2" not in report
