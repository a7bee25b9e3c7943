from fractions import Fraction

import numpy as np
import pytest

from extremal_trees import (
    ParameterDomainError,
    Poly,
    bracket_factor,
    check_root_bound_inequality,
    factor_leading_coeffs,
    fn_max_root,
    graeffe_bound,
    graeffe_radicand,
    largest_root_bound,
    leading_coeffs_of,
    verify_upper_bound_pipeline,
)
from extremal_trees.charpoly import divisors
from extremal_trees.graeffe import LeadingCoeffs, root_bound_radicand
from extremal_trees.spectral import lambda2_window


def test_zero_polynomial_bound():
    c = LeadingCoeffs(6, Fraction(0), Fraction(0), Fraction(0), Fraction(0))
    assert graeffe_bound(c) == 0.0


def test_known_quartic():
    # (z-2)(z-1)z(z+1): power sum computed by brute force from the roots
    roots = [2, 1, 0, -1]
    power_sum = sum(r**4 for r in roots)
    assert power_sum == 18
    c = leading_coeffs_of(Poly.from_roots(roots))
    assert graeffe_radicand(c) == power_sum
    assert graeffe_bound(c) == pytest.approx(18**0.25)
    assert graeffe_bound(c) >= max(roots)


def test_radicand_is_fourth_power_sum_for_quartics():
    rng = np.random.RandomState(11)
    for _ in range(50):
        roots = [Fraction(int(x), 8) for x in rng.randint(-40, 40, size=4)]
        c = leading_coeffs_of(Poly.from_roots(roots))
        assert graeffe_radicand(c) == sum(r**4 for r in roots)


def test_negative_radicand_rejected():
    # z^4 + 1 has all-complex roots with power sum -4
    c = leading_coeffs_of(Poly((1, 0, 0, 0, 1)))
    assert graeffe_radicand(c) == -4
    with pytest.raises(ParameterDomainError):
        graeffe_bound(c)


def test_soundness_on_random_real_rooted():
    rng = np.random.RandomState(0)
    for _ in range(200):
        deg = rng.randint(4, 11)
        roots = [Fraction(float(x)) for x in rng.uniform(-5, 5, size=deg)]
        c = leading_coeffs_of(Poly.from_roots(roots))
        # exact comparison: the power sum dominates the largest fourth power
        assert graeffe_radicand(c) >= max(roots) ** 4
        assert graeffe_bound(c) >= float(max(roots)) - 1e-12


def test_leading_coeffs_requires_monic():
    with pytest.raises(ParameterDomainError):
        leading_coeffs_of(Poly((0, 0, 0, 2)))
    with pytest.raises(ParameterDomainError):
        leading_coeffs_of(Poly((1, 1)))


def test_factor_coeffs_closed_form_values():
    c = factor_leading_coeffs(5, 2, 6)
    assert (c.a1, c.a2, c.a3, c.a4) == (
        Fraction(-7, 2),
        Fraction(0),
        Fraction(25, 8),
        Fraction(-5, 16),
    )
    assert factor_leading_coeffs(3, 1, 4).a4 == 0  # killed by the (n-3) factor


@pytest.mark.parametrize("m", range(1, 6))
def test_factor_coeffs_match_exact_expansion(m):
    for d in range(2 * m + 2, 2 * m + 9):
        for n in [n for n in divisors(2 * m + 1) if n != 1]:
            b = bracket_factor(n, m, d)
            c = factor_leading_coeffs(n, m, d)
            scale = Fraction(2**n)
            assert Fraction(b[n]) / scale == 1
            assert Fraction(b[n - 1]) / scale == c.a1
            assert Fraction(b[n - 2]) / scale == c.a2
            assert Fraction(b[n - 3]) / scale == c.a3
            assert (Fraction(b[n - 4]) / scale if n >= 4 else Fraction(0)) == c.a4


def test_root_bound_equals_graeffe_of_factor_coeffs():
    for n, m, d in [(3, 1, 4), (5, 2, 6), (7, 3, 8), (9, 4, 12), (3, 4, 12)]:
        direct = largest_root_bound(n, m, d)
        via_coeffs = graeffe_bound(factor_leading_coeffs(n, m, d))
        assert abs(direct - via_coeffs) < 1e-12


def test_root_bound_monotone_in_n():
    for m, d in [(4, 10), (7, 16), (10, 22), (12, 26)]:
        ns = [n for n in divisors(2 * m + 1) if n != 1]
        bounds = [largest_root_bound(n, m, d) for n in ns]
        assert bounds == sorted(bounds)


def test_top_divisor_radicand_closed_form():
    # at n = 2m+1 the radicand collapses to the 8m^2+4m+1 tail
    for m, d in [(2, 6), (3, 8), (5, 12)]:
        expected = (
            d**4 + 4 * d**3 - (8 * m - 2) * d**2 + 4 * d + 8 * m**2 + 4 * m + 1
        )
        assert root_bound_radicand(2 * m + 1, m, d) == expected
        assert largest_root_bound(2 * m + 1, m, d) == pytest.approx(
            0.5 * expected**0.25, abs=1e-12
        )


def test_quartic_inequality_values():
    assert check_root_bound_inequality(2, 6)
    assert check_root_bound_inequality(2, 7)
    # (2,6) is the tightest small case: 1721^(1/4) ~ 6.4407 vs 6.4444
    assert 1721**0.25 < 6 - 5 / 9 + 1
    with pytest.raises(ParameterDomainError):
        check_root_bound_inequality(1, 4)
    with pytest.raises(ParameterDomainError):
        check_root_bound_inequality(2, 5)


def test_fn_max_root_is_a_root():
    for n, m, d in [(3, 1, 4), (5, 2, 6), (7, 3, 8), (9, 4, 10)]:
        z0 = fn_max_root(n, m, d)
        b = bracket_factor(n, m, d)
        scale = max(abs(c) for c in b.float_coeffs())
        assert abs(b(z0)) < 1e-6 * scale
        assert z0 <= largest_root_bound(n, m, d) + 1e-9


@pytest.mark.parametrize("m,d", [(1, 4), (2, 6), (3, 8)])
def test_pipeline(m, d):
    report = verify_upper_bound_pipeline(m, d)
    assert report.passed
    assert report.consistency_gap < 1e-6
    lo, hi = lambda2_window(m, d)
    assert lo - 1e-9 <= report.lam2 < hi + 1e-9
    for row in report.rows:
        assert row.max_root <= row.root_bound + 1e-9
        assert 2 * row.max_root - 1 < hi + 1e-9


def test_factor_params_validated():
    with pytest.raises(ParameterDomainError):
        factor_leading_coeffs(4, 2, 6)  # even n
    with pytest.raises(ParameterDomainError):
        factor_leading_coeffs(1, 2, 6)  # n must be >= 3 here
    with pytest.raises(ParameterDomainError):
        largest_root_bound(7, 2, 6)  # 7 does not divide 5
