"""Jacobi theta functions, the modular lambda function, and theta-based
routes to the Weierstrass function and to Gauss's 2F1.

Theta series use the nome q = exp(i pi tau) and the argument convention
theta_1(v) = 2 q^{1/4} sum (-1)^n q^{n(n+1)} sin((2n+1) pi v), so that
lambda(i) = 1/2 and lambda = 16 q + O(q^2).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Dict, Optional

from .errors import (DomainError, LatticePointError, MismatchError,
                     SlowConvergence)
from .hypergeo import elliptic_K
from .kernels import theta_series
from .numerics import QuadratureSpec, default_quadrature_spec, gamma, integrate_line

IM_TAU_FLOOR = 0.05
DEFAULT_TOL = 1e-17


@dataclass(frozen=True)
class ModularPoint:
    """A point tau of the upper half-plane."""

    tau: complex

    def __post_init__(self):
        object.__setattr__(self, "tau", complex(self.tau))
        if not self.tau.imag > 0:
            raise DomainError("tau must have positive imaginary part")

    @property
    def nome(self) -> complex:
        return cmath.exp(1j * math.pi * self.tau)


@dataclass(frozen=True)
class ThetaValues:
    """theta_1..theta_4 at one (v, tau)."""

    v1: complex
    v2: complex
    v3: complex
    v4: complex

    def jacobi_defect(self) -> complex:
        """theta_3^4 - theta_2^4 - theta_4^4 (zero at v = 0)."""
        return self.v3 ** 4 - self.v2 ** 4 - self.v4 ** 4


def _point(tau) -> ModularPoint:
    return tau if isinstance(tau, ModularPoint) else ModularPoint(complex(tau))


def theta_eval(v, tau, tol: float = DEFAULT_TOL) -> ThetaValues:
    """The four theta series at ``(v, tau)``.

    Raises
    ------
    SlowConvergence
        If Im tau < 0.05, where the series need too many terms.
    """
    tau = _point(tau)
    if tau.tau.imag < IM_TAU_FLOOR:
        raise SlowConvergence(f"Im tau = {tau.tau.imag:g} is below the floor {IM_TAU_FLOOR}")
    v = complex(v)
    t1, t2, t3, t4, _ = theta_series(v, tau.tau, tol)
    if v == 0:
        t1 = 0j
    return ThetaValues(t1, t2, t3, t4)


def theta_nullwerte(tau, tol: float = DEFAULT_TOL) -> ThetaValues:
    return theta_eval(0.0, tau, tol)


def lambda_modular(tau, tol: float = DEFAULT_TOL, check: bool = True) -> complex:
    """lambda(tau) = theta_2(0)^4 / theta_3(0)^4.

    With ``check`` the complementary identity 1 - lambda = theta_4^4/theta_3^4
    is confirmed to 1e-10.
    """
    th = theta_nullwerte(tau, tol)
    lam = (th.v2 / th.v3) ** 4
    if check:
        comp = (th.v4 / th.v3) ** 4
        if abs(1 - lam - comp) > 1e-10 * max(1.0, abs(lam)):
            raise MismatchError(f"1 - lambda = {1 - lam} but theta_4^4/theta_3^4 = {comp}")
    return lam


def tau_from_x(x, spec: Optional[QuadratureSpec] = None) -> ModularPoint:
    """tau = i K(1-x) / K(x), the inverse of lambda near the imaginary axis.

    Both complete integrals are computed by quadrature and confirmed against
    their Gauss-series form (pi/2) 2F1(1/2, 1/2; 1; .).

    Raises
    ------
    DomainError
        Unless |x| < 1 and |1 - x| < 1 (x = 0, 1 excluded).
    """
    x = complex(x)
    if x in (0, 1) or not (abs(x) < 1 and abs(1 - x) < 1):
        raise DomainError("tau_from_x needs |x| < 1 and |1 - x| < 1")
    spec = default_quadrature_spec() if spec is None else spec
    k = elliptic_K(x, spec)
    kp = elliptic_K(1 - x, spec)
    return ModularPoint(1j * kp / k)


def implied_omega1(tau, tol: float = DEFAULT_TOL) -> complex:
    """Half-period (pi/2) theta_3(0)^2 that makes e_1 - e_3 = 1."""
    return 0.5 * math.pi * theta_nullwerte(tau, tol).v3 ** 2


def branch_points(x) -> tuple:
    """e_1, e_2, e_3 with e_1 - e_3 = 1, e_2 - e_3 = x, sum zero."""
    x = complex(x)
    e3 = -(1 + x) / 3
    return e3 + 1, e3 + x, e3


def weierstrass_consistency(u, tau, omega1: Optional[complex] = None,
                            tol: float = DEFAULT_TOL) -> Dict[str, object]:
    """Three theta-quotient expressions for wp(u), which must agree.

    With v = u / (2 omega1) and x = lambda(tau)::

        wp - e_1 = (theta_4(0)/theta_3(0))^2 (theta_2(v)/theta_1(v))^2
        wp - e_2 = (theta_2(0) theta_4(0)/theta_3(0)^2)^2 (theta_3(v)/theta_1(v))^2
        wp - e_3 = (theta_2(0)/theta_3(0))^2 (theta_4(v)/theta_1(v))^2

    The prefactors are the squares of (1-x)^{1/4}, (x(1-x))^{1/4}, x^{1/4}
    written without branch choices.  ``omega1`` defaults to the half-period
    implied by the normalization e_1 - e_3 = 1.

    Raises
    ------
    LatticePointError
        If theta_1(v) vanishes (u is a lattice point).
    """
    tau = _point(tau)
    if omega1 is None:
        omega1 = implied_omega1(tau, tol)
    omega1 = complex(omega1)
    u = complex(u)
    v = u / (2 * omega1)
    z = theta_nullwerte(tau, tol)
    th = theta_eval(v, tau, tol)
    if abs(th.v1) < 1e-14 * max(1.0, abs(th.v2), abs(th.v3), abs(th.v4)):
        raise LatticePointError("u is a lattice point: theta_1(v) = 0")
    x = (z.v2 / z.v3) ** 4
    e1, e2, e3 = branch_points(x)
    r1 = (z.v4 / z.v3) ** 2 * (th.v2 / th.v1) ** 2
    r2 = (z.v2 * z.v4 / z.v3 ** 2) ** 2 * (th.v3 / th.v1) ** 2
    r3 = (z.v2 / z.v3) ** 2 * (th.v4 / th.v1) ** 2
    cands = (e1 + r1, e2 + r2, e3 + r3)
    spread = max(abs(a - b) for a in cands for b in cands)
    wp = sum(cands) / 3
    return {
        "wp": wp,
        "candidates": cands,
        "spread": spread,
        "relative_spread": spread / max(1.0, abs(wp)),
        "e": (e1, e2, e3),
        "x": x,
        "v": v,
        "omega1": omega1,
        "diff_31": r3 - r1,
    }


def wirtinger_integrand(v: float, a, b, c, tau, null: ThetaValues,
                        tol: float = DEFAULT_TOL) -> complex:
    """Phi(v, tau) with theta_1 normalised by theta_1'(0) = pi theta_2 theta_3 theta_4 at 0."""
    th = theta_eval(v, tau, tol)
    d1 = math.pi * null.v2 * null.v3 * null.v4
    return ((th.v1 / d1) ** (2 * b - 1)
            * (th.v2 / null.v2) ** (2 * (c - b) - 1)
            * (th.v3 / null.v3) ** (1 - 2 * a)
            * (th.v4 / null.v4) ** (1 - 2 * (c - a)))


def wirtinger_2f1(a, b, c, tau, spec: Optional[QuadratureSpec] = None,
                  tol: float = DEFAULT_TOL) -> complex:
    """2F1(a, b; c; lambda(tau)) from the theta-integral representation.

    F = 2 pi^{2b} Gamma(c) theta_3(0)^{4b} / (Gamma(b) Gamma(c-b))
        * int_0^{1/2} Phi(v, tau) dv,

    for 0 < Re b < Re c.  Phi behaves like v^{2b-1} at 0 and like
    (1/2 - v)^{2(c-b)-1} at 1/2 (theta_2 vanishes there); both endpoint
    exponents are declared to the quadrature.
    """
    spec = default_quadrature_spec() if spec is None else spec
    a, b, c = complex(a), complex(b), complex(c)
    if not (0 < b.real < c.real):
        raise DomainError("theta representation needs 0 < Re b < Re c")
    tau = _point(tau)
    null = theta_nullwerte(tau, tol)

    def integrand(v):
        return wirtinger_integrand(v, a, b, c, tau, null, tol)

    def exponent(s: complex):
        if s.imag == 0 and s.real >= 0 and float(s.real).is_integer():
            return None
        return s.real

    val = integrate_line(integrand, 0.0, 0.5, spec,
                         singular_left=exponent(2 * b - 1),
                         singular_right=exponent(2 * (c - b) - 1))
    pref = 2 * math.pi ** (2 * b) * gamma(c) * null.v3 ** (4 * b) / (gamma(b) * gamma(c - b))
    return pref * val
