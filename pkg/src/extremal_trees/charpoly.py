"""Exact characteristic polynomial of G(m,d) and its supporting identities.

The closed form is assembled from Chebyshev polynomials: with z = (x+1)/2 and
n ranging over the divisors of 2m+1 (g = (2m+1)/n, each divisor occurring
with multiplicity phi(n)),

    p(x) = (x+1)^((d-2m)(2m+1)) * prod_n [ (2 T_n(z))^(g-1) * B_n(z) ]^phi(n),

where B_n is the degree-n bracket factor produced by ``bracket_factor``.  The
assembly is done in exact rational arithmetic and must come out integral and
monic; anything else is an implementation bug and raises ConsistencyError.

``char_poly_oracle`` provides the independent cross-check: the Faddeev-
LeVerrier trace recursion applied to the adjacency matrix, in exact integer
arithmetic (every division the recursion performs is asserted exact).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .chebyshev import chebyshev_T, chebyshev_U
from .errors import (
    CheckFailure,
    ConsistencyError,
    ParameterDomainError,
    SizeGuardError,
)
from .graphs import Graph
from .polynomials import Poly

ORACLE_SIZE_GUARD = 128


def divisors(k: int) -> list[int]:
    out = [d for d in range(1, k + 1) if k % d == 0]
    return out


def euler_phi(k: int) -> int:
    return sum(1 for j in range(1, k + 1) if math.gcd(j, k) == 1)


def bracket_factor(n: int, m: int, d: int) -> Poly:
    """The degree-n factor B_n(z) = (-2m+1)T_n + (2m-d)T_n/z + (2m+1)(z-1)U_{n-1}.

    Defined for odd n dividing 2m+1 (T_n is odd, so T_n/z is a polynomial).
    Leading coefficient is 2^n.
    """
    if n < 1 or n % 2 == 0:
        raise ParameterDomainError(f"bracket factor needs odd n >= 1, got n={n}")
    if m < 1 or (2 * m + 1) % n != 0:
        raise ParameterDomainError(f"n={n} must divide 2m+1={2 * m + 1}")
    if d < 2 * m + 2:
        raise ParameterDomainError(f"require d >= 2m+2; got m={m}, d={d}")
    t_n = chebyshev_T(n)
    u_prev = chebyshev_U(n - 1)
    z = Poly.x()
    return (
        (-2 * m + 1) * t_n
        + (2 * m - d) * t_n.shift_down()
        + (2 * m + 1) * ((z - 1) * u_prev)
    )


def char_poly_exact(m: int, d: int) -> Poly:
    """Closed-form characteristic polynomial of G(m,d), exact and monic in x."""
    if m < 1 or d < 2 * m + 2:
        raise ParameterDomainError(f"require d >= 2m+2 >= 4; got m={m}, d={d}")
    k = 2 * m + 1
    q = Poly((1,))
    for n in divisors(k):
        g = k // n
        factor = (2 * chebyshev_T(n)) ** (g - 1) * bracket_factor(n, m, d)
        q = q * factor ** euler_phi(n)
    # substitute z = (x+1)/2, then clear the (x+1)^((d-2m)k) prefactor in
    half_x_plus_1 = Poly((Fraction(1, 2), Fraction(1, 2)))
    p = q.compose(half_x_plus_1)
    p = p * (Poly((1, 1)) ** ((d - 2 * m) * k))
    if not p.is_integral():
        raise ConsistencyError("characteristic polynomial has a non-integer coefficient")
    p = p.to_int()
    if p.degree != k * (d + 1) or p.leading != 1:
        raise ConsistencyError(
            f"expected monic of degree {k * (d + 1)}, got degree {p.degree}, "
            f"leading {p.leading}"
        )
    return p


def char_poly_oracle(g: Graph) -> Poly:
    """Characteristic polynomial by the Faddeev-LeVerrier recursion, exact.

    Integer matrices throughout; the trace/k division at each step is exact
    for integer inputs and is asserted.  Refuses graphs above the desk-scale
    size guard (use char_poly_exact for family members instead).
    """
    n = g.n
    if n > ORACLE_SIZE_GUARD:
        raise SizeGuardError(
            f"oracle limited to {ORACLE_SIZE_GUARD} vertices (got {n}); "
            "use char_poly_exact for family graphs"
        )
    a = g.adjacency_matrix().astype(object)
    ident = np.eye(n, dtype=object)
    coeffs = [1]  # descending: x^n, x^(n-1), ...
    mk = ident.copy()
    for k in range(1, n + 1):
        am = a @ mk
        tr = int(np.trace(am))
        if tr % k != 0:
            raise ConsistencyError(f"trace recursion produced non-integer step at k={k}")
        ck = -(tr // k)
        coeffs.append(ck)
        mk = am + ck * ident
    if np.any(mk != 0):
        raise ConsistencyError("trace recursion did not terminate at the zero matrix")
    return Poly(list(reversed(coeffs)))


@dataclass
class IdentityReport:
    """Outcome of a randomized identity check; worst deviation and where."""

    name: str
    trials: int
    seed: int
    tol: float
    max_deviation: float = 0.0
    worst_case: dict = field(default_factory=dict)
    passed: bool = True

    def record(self, deviation: float, **context) -> None:
        if deviation > self.max_deviation:
            self.max_deviation = deviation
            self.worst_case = context
        if deviation > self.tol:
            self.passed = False

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "trials": self.trials,
            "seed": self.seed,
            "tol": self.tol,
            "max_deviation": self.max_deviation,
            "worst_case": {k: repr(v) for k, v in self.worst_case.items()},
            "passed": self.passed,
        }


def _rel_dev(lhs: complex, rhs: complex) -> float:
    return abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs))


def _sample_away_from_poles(rng, ms: int, zeta: complex, lo=-3.0, hi=6.0):
    """Random x with all quadratic denominators and z bounded away from zero."""
    for _ in range(1000):
        x = rng.uniform(lo, hi)
        z = (x + 1.0) / 2.0
        if abs(z) < 1e-3:
            continue
        dens = [
            x * x + 2 * x - 1 + 2 * (zeta**j).real for j in range(1, ms + 1)
        ]
        if all(abs(den) > 1e-3 for den in dens):
            return x
    raise RuntimeError("could not sample an evaluation point away from the poles")


def verify_root_of_unity_identities(
    m: int, trials: int, tol: float, seed: int = 0
) -> IdentityReport:
    """Numerically check the Chebyshev product/sum identities at roots of unity.

    For every (2m+1)-th root of unity zeta = exp(2*pi*i*t/(2m+1)) with
    g = gcd(2m+1, t) and n = (2m+1)/g, and z = (x+1)/2:

      prod_{j<=m} (x^2+2x-1+zeta^j+conj) = (2 T_n(z))^g / (2z)
      sum_{j<=m}  (2x+zeta^j+conj)/(x^2+2x-1+zeta^j+conj)
                  = -1/(2z) + (2m+1)(T_n(z)-(z-1)U_{n-1}(z)) / (2 T_n(z))

    plus the odd-index product form T_{2m+1}(z)/z = 4^m prod (z^2 - sin^2(pi j/(2m+1))).
    Evaluation points are resampled away from the poles.  Raises CheckFailure
    if any deviation exceeds tol.
    """
    if m < 1:
        raise ParameterDomainError(f"need m >= 1, got m={m}")
    k = 2 * m + 1
    rng = np.random.RandomState(seed)
    report = IdentityReport("root-of-unity identities", trials, seed, tol)
    for t in range(1, k + 1):
        zeta = complex(np.cos(2 * np.pi * t / k), np.sin(2 * np.pi * t / k))
        g = math.gcd(k, t)
        n = k // g
        t_n = chebyshev_T(n)
        u_prev = chebyshev_U(n - 1)
        for _ in range(trials):
            x = _sample_away_from_poles(rng, m, zeta)
            z = (x + 1.0) / 2.0
            cosines = [2 * (zeta**j).real for j in range(1, m + 1)]
            dens = [x * x + 2 * x - 1 + c for c in cosines]

            prod_lhs = 1.0
            for den in dens:
                prod_lhs *= den
            prod_rhs = (2 * t_n(z)) ** g / (2 * z)
            report.record(_rel_dev(prod_lhs, prod_rhs), t=t, x=x, side="product")

            if abs(t_n(z)) > 1e-3:
                sum_lhs = sum((2 * x + c) / den for c, den in zip(cosines, dens))
                sum_rhs = -1 / (2 * z) + k * (t_n(z) - (z - 1) * u_prev(z)) / (
                    2 * t_n(z)
                )
                report.record(_rel_dev(sum_lhs, sum_rhs), t=t, x=x, side="sum")

    t_top = chebyshev_T(k)
    sines = [np.sin(np.pi * j / k) ** 2 for j in range(1, m + 1)]
    for _ in range(trials):
        z = rng.uniform(-2.0, 2.0)
        if abs(z) < 1e-3:
            continue
        lhs = t_top(z) / z
        rhs = 4**m
        for s in sines:
            rhs *= z * z - s
        report.record(_rel_dev(lhs, rhs), t=k, x=2 * z - 1, side="odd product form")

    if not report.passed:
        raise CheckFailure(
            f"root-of-unity identity deviation {report.max_deviation:.3e} > {tol:.1e} "
            f"at {report.worst_case}"
        )
    return report


def verify_determinant_identities(trials: int, tol: float, seed: int = 0) -> IdentityReport:
    """Numerically check det(A+uv^T) = (1+v^T A^-1 u) det A and the aI+bJ formulas.

    Random dense A (resampled until well-conditioned), random u, v; and for
    aI_n + bJ_n both det = a^n + n a^(n-1) b and the explicit inverse.
    """
    rng = np.random.RandomState(seed)
    report = IdentityReport("determinant identities", trials, seed, tol)
    for _ in range(trials):
        n = rng.randint(2, 7)
        a = rng.uniform(-2.0, 2.0, (n, n))
        while abs(np.linalg.det(a)) < 0.1:
            a = rng.uniform(-2.0, 2.0, (n, n))
        u = rng.uniform(-2.0, 2.0, n)
        v = rng.uniform(-2.0, 2.0, n)
        lhs = np.linalg.det(a + np.outer(u, v))
        rhs = (1.0 + v @ np.linalg.solve(a, u)) * np.linalg.det(a)
        report.record(_rel_dev(lhs, rhs), n=n, side="rank-one update")

        aa = rng.uniform(0.5, 3.0) * rng.choice([-1.0, 1.0])
        bb = rng.uniform(-2.0, 2.0)
        if abs(aa + n * bb) < 0.1:
            bb += 0.5
        mat = aa * np.eye(n) + bb * np.ones((n, n))
        report.record(
            _rel_dev(np.linalg.det(mat), aa**n + n * aa ** (n - 1) * bb),
            n=n,
            side="aI+bJ determinant",
        )
        inv = np.eye(n) / aa - (bb / (aa * (aa + n * bb))) * np.ones((n, n))
        report.record(
            float(np.max(np.abs(inv @ mat - np.eye(n)))), n=n, side="aI+bJ inverse"
        )

    if not report.passed:
        raise CheckFailure(
            f"determinant identity deviation {report.max_deviation:.3e} > {tol:.1e} "
            f"at {report.worst_case}"
        )
    return report
