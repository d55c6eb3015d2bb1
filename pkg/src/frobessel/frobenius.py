"""Cyclic group determinants and the generalized Bessel eigenproblem.

The group determinant of the cyclic group of order ``n`` factors over the
characters ``k -> omega**(jk)``; :func:`group_determinant` evaluates that
product and checks it against an LU determinant of the circulant matrix.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import DomainError, MismatchError
from .numerics import QuadratureSpec, default_quadrature_spec, finite_difference, integrate_line
from .series import IntegerPolynomial, TruncatedSeries


@dataclass(frozen=True)
class CyclicGroupData:
    """Cyclic group of order ``n`` with primitive root exp(2 pi i / n)."""

    n: int

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise DomainError("group order must be a positive integer")

    @property
    def omega(self) -> complex:
        return cmath.exp(2j * math.pi / self.n)

    def root(self, k: int) -> complex:
        """omega**k, reduced mod n before exponentiating to limit rounding."""
        return cmath.exp(2j * math.pi * (k % self.n) / self.n)


def character_product(g: CyclicGroupData, values: Sequence[complex]) -> complex:
    """prod_j sum_k omega^{jk} x_k."""
    n = g.n
    total = 1 + 0j
    for j in range(n):
        total *= sum(g.root(j * k) * complex(values[k]) for k in range(n))
    return total


def circulant_matrix(values: Sequence[complex]) -> np.ndarray:
    """Matrix of the group determinant, entry (i, j) = x_{(i - j) mod n}."""
    n = len(values)
    x = np.asarray(values, dtype=complex)
    idx = (np.arange(n)[:, None] - np.arange(n)[None, :]) % n
    return x[idx]


def circulant_determinant(values: Sequence[complex]) -> complex:
    """LU (partial pivoting) determinant of the circulant matrix."""
    return complex(np.linalg.det(circulant_matrix(values)))


def group_determinant(g: CyclicGroupData, values: Sequence[complex],
                      rtol: float = 1e-10) -> complex:
    """Group determinant of a cyclic group, as the product over characters.

    The value is checked against the circulant determinant computed by LU
    decomposition; the comparison is relative to the larger of the two
    magnitudes, with an absolute floor ``1e-12 * (sum |x_k|)**n`` for
    near-singular inputs.

    Raises
    ------
    MismatchError
        If the routes disagree beyond ``rtol``.
    """
    if len(values) != g.n:
        raise DomainError(f"expected {g.n} values, got {len(values)}")
    prod = character_product(g, values)
    det = circulant_determinant(values)
    scale = max(abs(prod), abs(det))
    floor = 1e-12 * sum(abs(complex(v)) for v in values) ** g.n
    if abs(prod - det) > rtol * scale + floor:
        raise MismatchError(f"character product {prod} != circulant determinant {det}")
    return prod


def cyclic_convolution(x: Sequence[complex], y: Sequence[complex]) -> List[complex]:
    """(x * y)_k = sum_i x_i y_{k-i mod n}: the group-algebra product."""
    n = len(x)
    return [sum(complex(x[i]) * complex(y[(k - i) % n]) for i in range(n)) for k in range(n)]


def separable_change_of_vars(g: CyclicGroupData) -> np.ndarray:
    """Matrix V with V[j, k] = omega**(j k); V V^* / n is the identity."""
    n = g.n
    return np.array([[g.root(j * k) for k in range(n)] for j in range(n)], dtype=complex)


def norm_form(d: float, p: Tuple[float, float]) -> float:
    """x^2 - d y^2."""
    return p[0] * p[0] - d * p[1] * p[1]


def brahmagupta_compose(d: float, p1: Tuple[float, float],
                        p2: Tuple[float, float]) -> Tuple[float, float]:
    """(x1 x2 + d y1 y2, x1 y2 + x2 y1); multiplicative for x^2 - d y^2."""
    x1, y1 = p1
    x2, y2 = p2
    return (x1 * x2 + d * y1 * y2, x1 * y2 + x2 * y1)


def factorize(n: int) -> List[Tuple[int, int]]:
    """Prime factorization by trial division, as (prime, exponent) pairs."""
    if n < 1:
        raise DomainError("n must be a positive integer")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def moebius(n: int) -> int:
    """Moebius function."""
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def totient(n: int) -> int:
    """Euler's totient."""
    r = n
    for p, _ in factorize(n):
        r = r // p * (p - 1)
    return r


def divisors(n: int) -> List[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _x_power_minus_one(d: int) -> IntegerPolynomial:
    return IntegerPolynomial([-1] + [0] * (d - 1) + [1])


@lru_cache(maxsize=None)
def _cyclotomic_moebius(m: int) -> IntegerPolynomial:
    num = IntegerPolynomial([1])
    den = IntegerPolynomial([1])
    for d in divisors(m):
        mu = moebius(m // d)
        if mu == 1:
            num = num * _x_power_minus_one(d)
        elif mu == -1:
            den = den * _x_power_minus_one(d)
    return num.exact_div(den)


def cyclotomic(m: int, verify: bool = True) -> IntegerPolynomial:
    """m-th cyclotomic polynomial via the Moebius product over divisors.

    With ``verify`` the factorization X^m - 1 = prod_{d | m} phi_d(X) is
    checked exactly.
    """
    if m < 1:
        raise DomainError("m must be a positive integer")
    phi = _cyclotomic_moebius(m)
    if verify:
        prod = IntegerPolynomial([1])
        for d in divisors(m):
            prod = prod * _cyclotomic_moebius(d)
        if prod != _x_power_minus_one(m):
            raise MismatchError(f"divisor product of cyclotomic polynomials != X^{m} - 1")
    return phi


# generalized Bessel functions ----------------------------------------------

def generalized_bessel(k: int, z, tol: float = 1e-16) -> complex:
    """E_k(z) = sum_m z^m / (m!)^k."""
    if k < 1:
        raise DomainError("k must be >= 1")
    if not tol > 0:
        raise DomainError("tol must be positive")
    z = complex(z)
    term = 1 + 0j
    total = 1 + 0j
    m = 0
    while True:
        m += 1
        nxt = term * z / m ** k
        total += nxt
        if abs(nxt) < tol * abs(total) and abs(nxt) <= abs(term):
            return total
        term = nxt
        if m > 100000:
            return total


def generalized_bessel_series(k: int, order: int) -> TruncatedSeries:
    """Exact coefficients 1/(m!)^k of E_k through ``order``."""
    return TruncatedSeries(Fraction(1, math.factorial(m) ** k) for m in range(order + 1))


def generalized_bessel_eigen_residual(k: int, order: int) -> TruncatedSeries:
    """delta^k E_k - z E_k through ``order`` (exact; zero when the identity holds)."""
    e = generalized_bessel_series(k, order)
    lhs = e
    for _ in range(k):
        lhs = lhs.delta()
    return lhs - e.shift(1).truncate(order)


@dataclass(frozen=True)
class EigenProblemSpec:
    """Data of the product eigenproblem: constant C and kernel densities.

    A kernel entry of ``None`` stands for the zero density.
    """

    dimension: int = 2
    constant_term: complex = 1.0
    kernel_densities: Tuple[Optional[Callable[[float], complex]], ...] = field(
        default_factory=lambda: (None, None))

    def __post_init__(self):
        if self.dimension < 2:
            raise DomainError("eigenproblem dimension must be >= 2")


def product_eigen_solution(spec: EigenProblemSpec, x: Sequence[float],
                           spec_q: Optional[QuadratureSpec] = None) -> complex:
    """Solution of d^n U / dx_1...dx_n = U built from kernel densities.

    For n = 2::

        U = int_0^{x1} phi(t) E_2(x2 (x1 - t)) dt
          + int_0^{x2} psi(t) E_2(x1 (x2 - t)) dt + C E_2(x1 x2)

    For n > 2 only the term C E_n(x_1 ... x_n) is supported.
    """
    spec_q = default_quadrature_spec() if spec_q is None else spec_q
    n = spec.dimension
    if len(x) != n:
        raise DomainError(f"point must have {n} coordinates")
    dens = tuple(spec.kernel_densities) + (None,) * (n - len(spec.kernel_densities))
    prod = 1.0
    for xi in x:
        prod *= xi
    value = complex(spec.constant_term) * generalized_bessel(n, prod)
    if n > 2:
        if any(d is not None for d in dens):
            raise DomainError("kernel densities are only supported in dimension 2")
        return value
    x1, x2 = float(x[0]), float(x[1])
    phi, psi = dens[0], dens[1]
    if phi is not None and x1 != 0:
        value += integrate_line(lambda t: phi(t) * generalized_bessel(2, x2 * (x1 - t)),
                                0.0, x1, spec_q)
    if psi is not None and x2 != 0:
        value += integrate_line(lambda t: psi(t) * generalized_bessel(2, x1 * (x2 - t)),
                                0.0, x2, spec_q)
    return value


def eigen_pde_residual(spec: EigenProblemSpec, x: Sequence[float], h: float = 5e-3,
                       spec_q: Optional[QuadratureSpec] = None) -> complex:
    """d^2U/dx1 dx2 - U at ``x`` (n = 2), mixed derivative by nested central differences."""
    if spec.dimension != 2:
        raise DomainError("PDE residual is implemented for dimension 2")
    spec_q = QuadratureSpec(1e-13, 1e-13, 4000) if spec_q is None else spec_q
    x1, x2 = float(x[0]), float(x[1])

    def inner(s):
        return finite_difference(
            lambda t: product_eigen_solution(spec, (s, t), spec_q), x2, 1, h)

    mixed = finite_difference(inner, x1, 1, h)
    return mixed - product_eigen_solution(spec, (x1, x2), spec_q)


def lorentz_boost(t: float) -> np.ndarray:
    """[[cosh t, sinh t], [sinh t, cosh t]]."""
    c, s = math.cosh(t), math.sinh(t)
    return np.array([[c, s], [s, c]])
