"""Shared numerical engine: adaptive quadrature, contour integrals, differencing.

All routines accept complex-valued integrands.  Adaptive integration uses
15-point Gauss-Kronrod panels with a global error queue; integrable power
singularities at the endpoints are removed by the substitution
``t = a + (b - a) u**p`` before subdivision.
"""
from __future__ import annotations

import cmath
import heapq
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Union

from .errors import DomainError, NonConvergence, NonFinite, PoleError
from .kernels import gk15

ComplexFn = Callable[[float], complex]
Singularity = Union[None, bool, float, Fraction]

_EPS = 2.220446049250313e-16


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances and budget for adaptive quadrature."""

    abs_tol: float = 1e-10
    rel_tol: float = 1e-10
    max_subdivisions: int = 2000

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise DomainError("QuadratureSpec tolerances must be positive")
        if self.max_subdivisions < 1:
            raise DomainError("QuadratureSpec.max_subdivisions must be >= 1")

    def tightened(self, factor: float) -> "QuadratureSpec":
        """Copy with both tolerances divided by ``factor``."""
        return QuadratureSpec(self.abs_tol / factor, self.rel_tol / factor,
                              self.max_subdivisions)


@dataclass(frozen=True)
class ContourSpec:
    """Circle ``|z - center| = radius`` sampled at ``node_count`` points."""

    radius: float = 1.0
    node_count: int = 256
    center: complex = 0j

    def __post_init__(self):
        if not self.radius > 0:
            raise DomainError("ContourSpec.radius must be positive")
        if self.node_count < 8 or self.node_count % 2:
            raise DomainError("ContourSpec.node_count must be even and >= 8")


def default_quadrature_spec() -> QuadratureSpec:
    """Default spec, with tolerance overridable through ``FB_TOL``."""
    raw = os.environ.get("FB_TOL")
    if raw:
        try:
            tol = float(raw)
        except ValueError:
            raise DomainError(f"FB_TOL is not a decimal number: {raw!r}") from None
        return QuadratureSpec(tol, tol, 2000)
    return QuadratureSpec()


def _spec(spec: Optional[QuadratureSpec]) -> QuadratureSpec:
    return default_quadrature_spec() if spec is None else spec


def substitution_power(exponent: Singularity) -> int:
    """Power ``p`` of the endpoint substitution for a ``(t-a)**s`` singularity.

    A rational exponent ``r/q`` with small denominator is made exactly
    polynomial by ``p = q``.  Otherwise ``p`` is chosen so that the
    transformed exponent ``p*(1+s) - 1`` is at least 1.  An endpoint flagged
    singular without an exponent gets ``p = 2``.
    """
    if exponent is None or exponent is False:
        return 1
    if exponent is True:
        return 2
    s = float(exponent)
    if s <= -1:
        raise DomainError(f"endpoint exponent {s} is not integrable")
    if s >= 0 and float(s).is_integer():
        return 1
    frac = Fraction(s).limit_denominator(12)
    if abs(float(frac) - s) < 1e-12 and frac.denominator > 1:
        return frac.denominator
    return max(2, math.ceil(1.0 / (1.0 + s)))


def _check(value, where):
    value = complex(value)
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise NonFinite(f"integrand is not finite at {where!r}")
    return value


def _adaptive(g: ComplexFn, a: float, b: float, spec: QuadratureSpec):
    """Globally adaptive GK15 on a finite interval; returns (value, error)."""
    if a == b:
        return 0j, 0.0

    def checked(t):
        return _check(g(t), t)

    val, err = gk15(checked, a, b)
    heap = [(-err, a, b, val, err)]
    total = val
    total_err = err
    mass = abs(val)
    count = 1
    while True:
        target = max(spec.abs_tol, spec.rel_tol * abs(total))
        noise = 50 * _EPS * mass
        if total_err <= max(target, noise):
            return total, total_err
        if count >= spec.max_subdivisions:
            raise NonConvergence(
                f"quadrature budget of {spec.max_subdivisions} panels exhausted "
                f"(error estimate {total_err:.3e}, target {target:.3e})")
        _, lo, hi, v, e = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            # cannot split further in floating point; accept this panel
            heapq.heappush(heap, (0.0, lo, hi, v, 0.0))
            total_err -= e
            continue
        v1, e1 = gk15(checked, lo, mid)
        v2, e2 = gk15(checked, mid, hi)
        total += v1 + v2 - v
        total_err += e1 + e2 - e
        mass += abs(v1) + abs(v2) - abs(v)
        heapq.heappush(heap, (-e1, lo, mid, v1, e1))
        heapq.heappush(heap, (-e2, mid, hi, v2, e2))
        count += 1


def _line_with_error(f, a, b, spec, singular_left, singular_right):
    a = float(a)
    b = float(b)
    if a == b:
        return 0j, 0.0
    if a > b:
        v, e = _line_with_error(f, b, a, spec, singular_right, singular_left)
        return -v, e
    left = singular_left not in (None, False)
    right = singular_right not in (None, False)
    if left and right:
        m = 0.5 * (a + b)
        half = QuadratureSpec(spec.abs_tol / 2, spec.rel_tol, spec.max_subdivisions)
        v1, e1 = _line_with_error(f, a, m, half, singular_left, None)
        v2, e2 = _line_with_error(f, m, b, half, None, singular_right)
        return v1 + v2, e1 + e2
    width = b - a
    if left:
        p = substitution_power(singular_left)
        if p == 1:
            return _adaptive(f, a, b, spec)

        def g(u):
            t = a + width * u ** p
            if t == a:
                # u**p below resolution: the transformed integrand vanishes here
                return 0j
            return f(t) * (p * width * u ** (p - 1))

        return _adaptive(g, 0.0, 1.0, spec)
    if right:
        p = substitution_power(singular_right)
        if p == 1:
            return _adaptive(f, a, b, spec)

        def g(u):
            t = b - width * u ** p
            if t == b:
                # u**p below resolution: the transformed integrand vanishes here
                return 0j
            return f(t) * (p * width * u ** (p - 1))

        return _adaptive(g, 0.0, 1.0, spec)
    return _adaptive(f, a, b, spec)


def integrate_line(f: ComplexFn, a: float, b: float,
                   spec: Optional[QuadratureSpec] = None, *,
                   singular_left: Singularity = None,
                   singular_right: Singularity = None) -> complex:
    """Integrate ``f`` over ``[a, b]``.

    Parameters
    ----------
    f : callable
        Complex-valued function of one real variable.
    a, b : float
        Integration limits.
    spec : QuadratureSpec, optional
        Tolerances; defaults to :func:`default_quadrature_spec`.
    singular_left, singular_right : float or bool, optional
        Declared endpoint behaviour ``f ~ (t - a)**s``.  ``True`` flags a
        singularity of unknown exponent.

    Raises
    ------
    NonConvergence
        Subdivision budget exhausted.
    NonFinite
        ``f`` returned inf or nan at an evaluation node.
    """
    return _line_with_error(f, a, b, _spec(spec), singular_left, singular_right)[0]


def integrate_line_with_error(f: ComplexFn, a: float, b: float,
                              spec: Optional[QuadratureSpec] = None, *,
                              singular_left: Singularity = None,
                              singular_right: Singularity = None):
    """Like :func:`integrate_line` but returns ``(value, error_estimate)``."""
    return _line_with_error(f, a, b, _spec(spec), singular_left, singular_right)


def integrate_halfline(f: ComplexFn, a: float,
                       spec: Optional[QuadratureSpec] = None, *,
                       singular_left: Singularity = None,
                       decay_power: Optional[float] = None) -> complex:
    """Integrate ``f`` over ``[a, inf)`` via ``t = a + u/(1-u)``.

    ``decay_power`` declares algebraic decay ``f ~ t**(-s)``; the image of
    infinity is then an endpoint singularity of exponent ``s - 2``.
    """
    a = float(a)

    def g(u):
        w = 1.0 - u
        if w <= 0.0:
            return 0j
        return f(a + u / w) / (w * w)

    right = None
    if decay_power is not None:
        if decay_power <= 1:
            raise DomainError("decay power must exceed 1 for a convergent integral")
        if decay_power < 2:
            right = decay_power - 2.0
    return _line_with_error(g, 0.0, 1.0, _spec(spec), singular_left, right)[0]


def integrate_circle(f: Callable[[complex], complex],
                     spec: Optional[ContourSpec] = None) -> complex:
    """Trapezoid rule for the closed contour integral of ``f`` over a circle."""
    spec = ContourSpec() if spec is None else spec
    n = spec.node_count
    c = complex(spec.center)
    total = 0j
    for k in range(n):
        w = spec.radius * cmath.exp(2j * math.pi * k / n)
        total += _check(f(c + w), c + w) * w
    return total * (2j * math.pi / n)


def cauchy_derivative(f: Callable[[complex], complex], z0: complex, order: int,
                      radius: float = 0.25, node_count: int = 64) -> complex:
    """Derivative of a holomorphic ``f`` at ``z0`` by Cauchy's integral formula."""
    if order < 0:
        raise DomainError("derivative order must be non-negative")
    spec = ContourSpec(radius=radius, node_count=node_count, center=complex(z0))
    z0 = complex(z0)
    val = integrate_circle(lambda z: f(z) / (z - z0) ** (order + 1), spec)
    return val * math.factorial(order) / (2j * math.pi)


_STENCILS = {
    1: ((-1, -0.5), (1, 0.5)),
    2: ((-1, 1.0), (0, -2.0), (1, 1.0)),
    3: ((-2, -0.5), (-1, 1.0), (1, -1.0), (2, 0.5)),
    4: ((-2, 1.0), (-1, -4.0), (0, 6.0), (1, -4.0), (2, 1.0)),
}


def finite_difference(f: ComplexFn, x: float, order: int, h: float) -> complex:
    """Second-order central difference estimate of ``f^(order)(x)``."""
    if order not in _STENCILS:
        raise DomainError("finite_difference order must be in 1..4")
    if not h > 0:
        raise DomainError("step h must be positive")
    total = 0j
    for k, w in _STENCILS[order]:
        total += w * _check(f(x + k * h), x + k * h)
    return total / h ** order


def richardson_difference(f: ComplexFn, x: float, order: int, h: float) -> complex:
    """Central difference with one Richardson step, error O(h**4)."""
    coarse = finite_difference(f, x, order, h)
    fine = finite_difference(f, x, order, 0.5 * h)
    return (4.0 * fine - coarse) / 3.0


# Lanczos approximation, g = 7, nine coefficients.
_LANCZOS_G = 7
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def gamma(s) -> complex:
    """Complex Gamma function (Lanczos with reflection for Re s < 1/2)."""
    s = complex(s)
    if s.imag == 0 and s.real <= 0 and s.real.is_integer():
        raise PoleError(f"Gamma has a pole at {s.real:g}")
    if s.imag == 0 and s.real > 0 and s.real.is_integer() and s.real < 171:
        return complex(math.factorial(int(s.real) - 1))
    if s.real < 0.5:
        return math.pi / (cmath.sin(math.pi * s) * gamma(1 - s))
    s -= 1
    x = _LANCZOS[0]
    for i in range(1, _LANCZOS_G + 2):
        x += _LANCZOS[i] / (s + i)
    t = s + _LANCZOS_G + 0.5
    return math.sqrt(2 * math.pi) * t ** (s + 0.5) * cmath.exp(-t) * x


def real_gamma(s: float) -> float:
    """Real Gamma via :func:`gamma`; raises on poles."""
    return gamma(s).real
