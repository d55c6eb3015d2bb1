"""Gauss and generalized hypergeometric functions, complete elliptic integrals.

The Gauss function has two independent routes here: the power series and
Euler's integral.  A third route through theta functions lives in
:mod:`frobessel.theta`.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError, MismatchError, NonConvergence, PoleError
from .kernels import hyp_series
from .numerics import (QuadratureSpec, default_quadrature_spec, gamma, integrate_line,
                       richardson_difference)

__all__ = [
    "gamma", "pochhammer", "HypergeometricParams", "gauss_2f1", "euler_integral_2f1",
    "hypergeometric_ode_residual", "pfq", "bessel_via_1f1", "EllipticModulus",
    "elliptic_K", "elliptic_K_series",
]

MAX_TERMS = 200000


def _nonpositive_integer(x) -> bool:
    x = complex(x)
    return x.imag == 0 and x.real <= 0 and float(x.real).is_integer()


def pochhammer(a, n: int):
    """Rising factorial (a)_n = a (a+1) ... (a+n-1); exact for exact ``a``."""
    if n < 0:
        raise DomainError("n must be non-negative")
    r = 1
    for i in range(n):
        r *= a + i
    return r


@dataclass(frozen=True)
class HypergeometricParams:
    """Upper (numerator) and lower (denominator) parameter lists."""

    upper: tuple
    lower: tuple

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(complex(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(complex(b) for b in self.lower))
        for b in self.lower:
            if _nonpositive_integer(b):
                raise PoleError(f"lower parameter {b} is a non-positive integer")


def _terminates(upper) -> bool:
    return any(_nonpositive_integer(a) for a in upper)


def pfq(params: HypergeometricParams, z, tol: float = 1e-16) -> complex:
    """Generalized hypergeometric series pFq(upper; lower; z).

    Raises
    ------
    DomainError
        If p > q + 1, or p = q + 1 with |z| >= 1 and no terminating parameter.
    NonConvergence
        If the term budget runs out.
    """
    p, q = len(params.upper), len(params.lower)
    z = complex(z)
    if p > q + 1 and not _terminates(params.upper):
        raise DomainError("pFq diverges for p > q + 1")
    if p == q + 1 and abs(z) >= 1 and not _terminates(params.upper):
        raise DomainError("the series needs |z| < 1 when p = q + 1")
    value, n, ok = hyp_series(params.upper, params.lower, z, tol, MAX_TERMS)
    if not ok:
        raise NonConvergence(f"hypergeometric series not converged after {n} terms")
    return value


def gauss_2f1(a, b, c, z, tol: float = 1e-16) -> complex:
    """Gauss series sum (a)_n (b)_n / ((c)_n n!) z^n for |z| < 1.

    Raises
    ------
    PoleError
        If c is a non-positive integer.
    DomainError
        If |z| >= 1.
    """
    if _nonpositive_integer(c):
        raise PoleError(f"c = {c} is a non-positive integer")
    z = complex(z)
    if abs(z) >= 1:
        raise DomainError("Gauss series requires |z| < 1")
    return pfq(HypergeometricParams((a, b), (c,)), z, tol)


def hypergeometric_ode_residual(a, b, c, z, h: float = 2e-3) -> complex:
    """z(1-z)y'' + (c - (a+b+1)z) y' - ab y for y = 2F1(a,b;c;.) at z.

    Derivatives are Richardson-extrapolated central differences taken along
    the real direction, which suffices because y is holomorphic.  ``h`` must
    keep the stencil inside the unit disc.
    """
    z = complex(z)

    def y(t):
        return gauss_2f1(a, b, c, z + t)

    y0 = y(0.0)
    d1 = richardson_difference(y, 0.0, 1, h)
    d2 = richardson_difference(y, 0.0, 2, h)
    return z * (1 - z) * d2 + (c - (a + b + 1) * z) * d1 - a * b * y0


def euler_integral_2f1(a, b, c, z, spec: Optional[QuadratureSpec] = None) -> complex:
    """Euler's integral for 2F1.

    Gamma(c)/(Gamma(b)Gamma(c-b)) int_0^1 t^(b-1) (1-t)^(c-b-1) (1-zt)^(-a) dt,
    valid for Re c > Re b > 0 and z off the cut [1, inf).
    """
    spec = default_quadrature_spec() if spec is None else spec
    a, b, c, z = complex(a), complex(b), complex(c), complex(z)
    if not (c.real > b.real > 0):
        raise DomainError("Euler integral needs Re c > Re b > 0")
    if z.imag == 0 and z.real >= 1:
        raise DomainError("z lies on the branch cut [1, inf)")
    e1 = b - 1
    e2 = c - b - 1

    # each half is written in the distance to its own endpoint, so that
    # (1 - t) is never formed by cancellation near t = 1
    def near_zero(t):
        return t ** e1 * (1 - t) ** e2 * (1 - z * t) ** (-a)

    def near_one(s):
        return s ** e2 * (1 - s) ** e1 * (1 - z + z * s) ** (-a)

    def exponent(e: complex):
        return None if (e.imag == 0 and e.real >= 0 and e.real.is_integer()) else e.real

    half = QuadratureSpec(spec.abs_tol / 2, spec.rel_tol, spec.max_subdivisions)
    val = (integrate_line(near_zero, 0.0, 0.5, half, singular_left=exponent(e1))
           + integrate_line(near_one, 0.0, 0.5, half, singular_left=exponent(e2)))
    return gamma(c) / (gamma(b) * gamma(c - b)) * val


def bessel_via_1f1(nu, z, tol: float = 1e-16) -> complex:
    """(z/2)^nu e^{-iz} / Gamma(nu+1) 1F1(nu + 1/2; 2 nu + 1; 2 i z)."""
    z = complex(z)
    nu = complex(nu)
    f = pfq(HypergeometricParams((nu + 0.5,), (2 * nu + 1,)), 2j * z, tol)
    return (z / 2) ** nu * cmath.exp(-1j * z) / gamma(nu + 1) * f


def verify_bessel_1f1(n: int, z, rtol: float = 1e-8) -> float:
    """Compare :func:`bessel_via_1f1` with the ascending-series J_n; returns the residual."""
    from .bessel import bessel_j

    lhs = bessel_j(n, z)
    rhs = bessel_via_1f1(n, z)
    res = abs(lhs - rhs)
    if res > rtol * max(1.0, abs(lhs)):
        raise MismatchError(f"1F1 form of J_{n}({z}) = {rhs} differs from series {lhs}")
    return res


@dataclass(frozen=True)
class EllipticModulus:
    """Squared modulus k^2 of a complete elliptic integral."""

    k_squared: complex

    @property
    def complementary(self) -> "EllipticModulus":
        return EllipticModulus(1 - complex(self.k_squared))


def _as_modulus(m) -> EllipticModulus:
    return m if isinstance(m, EllipticModulus) else EllipticModulus(complex(m))


def elliptic_K_series(m) -> complex:
    """(pi/2) 2F1(1/2, 1/2; 1; k^2)."""
    k2 = complex(_as_modulus(m).k_squared)
    return 0.5 * math.pi * gauss_2f1(0.5, 0.5, 1.0, k2)


def elliptic_K(m, spec: Optional[QuadratureSpec] = None, check: bool = True,
               rtol: float = 1e-9) -> complex:
    """Complete elliptic integral K = int_0^1 dz / sqrt((1-z^2)(1-k^2 z^2)).

    For |k^2| < 1 the quadrature value is checked against the Gauss series
    form (pi/2) 2F1(1/2, 1/2; 1; k^2).
    """
    spec = default_quadrature_spec() if spec is None else spec
    k2 = complex(_as_modulus(m).k_squared)
    if k2.imag == 0 and k2.real >= 1:
        raise DomainError("k^2 must lie off [1, inf)")

    def integrand(s):
        # s = 1 - t, so that 1 - t^2 = s (2 - s) keeps full precision near t = 1
        t = 1.0 - s
        return 1.0 / (cmath.sqrt(s * (2.0 - s)) * cmath.sqrt(1 - k2 * t * t))

    val = integrate_line(integrand, 0.0, 1.0, spec, singular_left=-0.5)
    if check and abs(k2) < 1:
        ser = elliptic_K_series(k2)
        if abs(ser - val) > rtol * abs(ser):
            raise MismatchError(f"K quadrature {val} differs from series {ser}")
    return val
