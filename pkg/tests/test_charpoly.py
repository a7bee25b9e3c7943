import math
from fractions import Fraction

import numpy as np
import pytest

from extremal_trees import (
    CheckFailure,
    ParameterDomainError,
    Poly,
    SizeGuardError,
    bracket_factor,
    build_extremal_graph,
    char_poly_exact,
    char_poly_oracle,
    chebyshev_T,
    chebyshev_U,
    eigenvalues_dense,
    verify_determinant_identities,
    verify_root_of_unity_identities,
)
from extremal_trees.charpoly import divisors, euler_phi

from conftest import complete_graph, path_graph


def test_divisor_helpers():
    assert divisors(9) == [1, 3, 9]
    assert divisors(7) == [1, 7]
    assert euler_phi(9) == 6
    assert euler_phi(1) == 1


@pytest.mark.parametrize("m,d", [(1, 4), (2, 6), (3, 9)])
def test_bracket_n1_linear(m, d):
    # the n=1 factor must collapse to 2z - (d+1), i.e. x - d under z=(x+1)/2
    assert bracket_factor(1, m, d) == Poly((-(d + 1), 2))


def test_bracket_314_hand_expansion():
    # (-1)*T_3 + (2-4)*T_3/z + 3*(z-1)*U_2 with T_3 = 4z^3-3z, U_2 = 4z^2-1
    assert bracket_factor(3, 1, 4) == Poly((9, 0, -20, 8))


@pytest.mark.parametrize("m", range(1, 6))
def test_bracket_leading_coefficient(m):
    d = 2 * m + 3
    for n in divisors(2 * m + 1):
        b = bracket_factor(n, m, d)
        assert b.degree == n
        assert b.leading == 2**n


def test_bracket_rejects_even_n():
    with pytest.raises(ParameterDomainError):
        bracket_factor(2, 1, 4)
    with pytest.raises(ParameterDomainError):
        bracket_factor(5, 1, 4)  # 5 does not divide 3


@pytest.mark.parametrize("m,d", [(1, 4), (1, 5), (2, 6), (3, 8)])
def test_char_poly_shape(m, d):
    p = char_poly_exact(m, d)
    n = (2 * m + 1) * (d + 1)
    assert p.degree == n
    assert p.leading == 1
    assert p[n - 1] == 0  # zero trace


@pytest.mark.parametrize("m,d", [(1, 4), (2, 6)])
def test_char_poly_equals_oracle(m, d):
    assert char_poly_exact(m, d) == char_poly_oracle(build_extremal_graph(m, d))


def test_oracle_known_spectra():
    # K_5: (x-4)(x+1)^4; path on 2 vertices: x^2 - 1
    expected = Poly((-4, 1)) * Poly((1, 1)) ** 4
    assert char_poly_oracle(complete_graph(5)) == expected
    assert char_poly_oracle(path_graph(2)) == Poly((-1, 0, 1))


def test_oracle_size_guard():
    with pytest.raises(SizeGuardError):
        char_poly_oracle(build_extremal_graph(3, 18))  # 133 vertices


@pytest.mark.parametrize("m,d", [(1, 4), (2, 6)])
def test_degree_d_eigenvalue_simple(m, d):
    p = char_poly_exact(m, d)
    assert p(d) == 0
    assert p.derivative()(d) != 0
    # all other eigenvalues stay strictly below d
    values = eigenvalues_dense(build_extremal_graph(m, d)).values
    assert values[1] < d - 1e-3


@pytest.mark.parametrize("m,d", [(1, 4), (2, 6), (3, 8)])
def test_char_poly_vanishes_at_dense_eigenvalues(m, d):
    # evaluate exactly in rationals: float Horner on these coefficient sizes
    # is pure cancellation noise
    p = char_poly_exact(m, d)
    dp = p.derivative()
    n = p.degree
    for lam in eigenvalues_dense(build_extremal_graph(m, d)).values:
        x = Fraction(lam)
        residual = abs(p(x))
        assert residual <= Fraction(n) * Fraction(1, 10**10) * max(1, abs(dp(x)))


@pytest.mark.parametrize("m,d", [(1, 4), (2, 6), (4, 10)])
def test_factor_grouping_equivalence(m, d):
    # re-assemble the product indexed by j = 1..2m+1 instead of by divisors
    k = 2 * m + 1
    q = Poly((1,))
    for j in range(1, k + 1):
        g = math.gcd(k, j)
        n = k // g
        q = q * (2 * chebyshev_T(n)) ** (g - 1) * bracket_factor(n, m, d)
    half = Poly((Fraction(1, 2), Fraction(1, 2)))
    p = (q.compose(half) * Poly((1, 1)) ** ((d - 2 * m) * k)).to_int()
    assert p == char_poly_exact(m, d)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_root_of_unity_identities(m):
    report = verify_root_of_unity_identities(m, trials=40, tol=1e-10, seed=7)
    assert report.passed
    assert report.max_deviation < 1e-10


def test_root_of_unity_identities_fail_loudly():
    with pytest.raises(CheckFailure):
        verify_root_of_unity_identities(2, trials=20, tol=1e-18, seed=0)


def test_determinant_identities():
    report = verify_determinant_identities(trials=100, tol=1e-10, seed=3)
    assert report.passed
    # frozen spot value: det(2I + J) = 2^3 + 3*4 = 20 for n = 3
    assert abs(np.linalg.det(2 * np.eye(3) + np.ones((3, 3))) - 20.0) < 1e-12


def test_u_t_relation_inside_brackets():
    # T_n - (z-1) U_{n-1} appearing in the identities stays consistent with
    # the bracket: B_n = (1-2m) T_n + (2m-d) T_n/z + (2m+1)(z-1)U_{n-1}
    m, d, n = 2, 7, 5
    t, u = chebyshev_T(n), chebyshev_U(n - 1)
    lhs = bracket_factor(n, m, d)
    rhs = (1 - 2 * m) * t + (2 * m - d) * t.shift_down() + (2 * m + 1) * (
        Poly((-1, 1)) * u
    )
    assert lhs == rhs
