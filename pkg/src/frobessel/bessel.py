"""Bessel J_n and Macdonald K_nu: series, recurrences, integral formulas,
Neumann polynomials and series, and the Borel-transform ODE example.

Symbolic checks (Rayleigh, ladder operators, Borel ODEs) work on exact
rational coefficients and convert to floating point only for evaluation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Tuple

from .errors import (DomainError, MismatchError, RecurrenceInconsistent,
                     TruncationTooShort)
from .hypergeo import HypergeometricParams, pfq
from .kernels import j_series, j_series_derivative
from .numerics import (ContourSpec, QuadratureSpec, cauchy_derivative,
                       default_quadrature_spec, gamma, integrate_circle,
                       integrate_halfline, integrate_line)
from .series import TruncatedSeries

SERIES_LIMIT = 30.0
DEFAULT_TOL = 1e-16


@dataclass(frozen=True)
class BesselOrder:
    """Order nu = twice_order / 2 (integers and half-integers)."""

    twice_order: int

    @property
    def nu(self) -> float:
        return self.twice_order / 2

    @property
    def is_integer(self) -> bool:
        return self.twice_order % 2 == 0

    def as_integer(self) -> int:
        if not self.is_integer:
            raise DomainError(f"order {self.nu} is not an integer")
        return self.twice_order // 2


# J_n by ascending series ----------------------------------------------------

def _check_regime(z):
    if abs(complex(z)) > SERIES_LIMIT:
        raise DomainError(f"|z| = {abs(complex(z)):g} exceeds the series regime |z| <= {SERIES_LIMIT:g}")


def bessel_j(n: int, z, tol: float = DEFAULT_TOL) -> complex:
    """J_n(z) from the ascending series; J_{-n} = (-1)^n J_n.

    Raises
    ------
    DomainError
        For |z| > 30, where cancellation in the series becomes severe.
    """
    if not tol > 0:
        raise DomainError("tol must be positive")
    n = int(n)
    _check_regime(z)
    if n < 0:
        v = j_series(-n, z, tol)
        return -v if n % 2 else v
    return j_series(n, z, tol)


def bessel_j_derivative(n: int, z, tol: float = DEFAULT_TOL) -> complex:
    """J_n'(z) from the term-wise differentiated series."""
    n = int(n)
    _check_regime(z)
    if n < 0:
        v = j_series_derivative(-n, z, tol)
        return -v if n % 2 else v
    return j_series_derivative(n, z, tol)


def recurrence_residual_j(n: int, z) -> Tuple[complex, complex]:
    """Residuals of (2n/z) J_n = J_{n-1} + J_{n+1} and 2 J_n' = J_{n-1} - J_{n+1}."""
    z = complex(z)
    if z == 0:
        raise DomainError("z must be nonzero")
    jm, j0, jp = bessel_j(n - 1, z), bessel_j(n, z), bessel_j(n + 1, z)
    d = bessel_j_derivative(n, z)
    return (2 * n / z * j0 - jm - jp, 2 * d - jm + jp)


def j_coefficients(n: int, terms: int) -> Dict[int, Fraction]:
    """Exact coefficients of J_n (n >= 0) as {power of z: coefficient}."""
    out = {}
    for k in range(terms):
        out[2 * k + n] = Fraction((-1) ** k, math.factorial(k) * math.factorial(k + n) * 2 ** (2 * k + n))
    return out


# Laurent polynomials ----------------------------------------------------------

class LaurentPolynomial:
    """Finite sum of rational multiples of integer powers of t.

    Zero coefficients are never stored.  Used for the Neumann polynomials
    (negative powers only) and for truncated Bessel series under the
    operators d/dt and multiplication by powers of t.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, Fraction]):
        self.coeffs = {int(k): Fraction(v) for k, v in coeffs.items() if v != 0}

    def __repr__(self):
        terms = " + ".join(f"{v}*t^{k}" for k, v in sorted(self.coeffs.items()))
        return f"LaurentPolynomial({terms or '0'})"

    def __eq__(self, other):
        if isinstance(other, LaurentPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return LaurentPolynomial(out)

    def __neg__(self):
        return LaurentPolynomial({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "LaurentPolynomial":
        return LaurentPolynomial({k: v * c for k, v in self.coeffs.items()})

    def shift(self, m: int) -> "LaurentPolynomial":
        """Multiply by t**m."""
        return LaurentPolynomial({k + m: v for k, v in self.coeffs.items()})

    def derivative(self) -> "LaurentPolynomial":
        return LaurentPolynomial({k - 1: k * v for k, v in self.coeffs.items()})

    def exponents(self) -> List[int]:
        return sorted(self.coeffs)

    def __call__(self, t) -> complex:
        t = complex(t)
        return sum(float(v) * t ** k for k, v in self.coeffs.items()) + 0j


# Rayleigh, Sonine, ladders ------------------------------------------------------

RAYLEIGH_TERMS = 80


def rayleigh_j(m: int, z, terms: int = RAYLEIGH_TERMS) -> complex:
    """J_m(z) = (-1)^m z^m (z^{-1} d/dz)^m J_0(z) on the truncated J_0 series.

    The series is kept in the variable w = z^2, where z^{-1} d/dz acts as
    2 d/dw, so every step is exact.

    Raises
    ------
    TruncationTooShort
        If the last retained term is not negligible at ``z``.
    """
    if m < 0:
        raise DomainError("m must be non-negative")
    z = complex(z)
    coeffs = [Fraction((-1) ** k, math.factorial(k) ** 2 * 4 ** k) for k in range(terms)]
    for _ in range(m):
        coeffs = [2 * (k + 1) * coeffs[k + 1] for k in range(len(coeffs) - 1)]
    w = z * z
    last = abs(float(coeffs[-1])) * abs(w) ** (len(coeffs) - 1)
    if last > 1e-17 * max(1.0, abs(z) ** 0):
        raise TruncationTooShort(f"Rayleigh series with {terms} terms is too short at |z|={abs(z):g}")
    total = 0j
    for c in reversed(coeffs):
        total = total * w + float(c)
    return (-1) ** m * z ** m * total


def sonine_j(m: int, z, spec: Optional[QuadratureSpec] = None) -> complex:
    """J_m(z) = z^m / (2^{m-1} Gamma(m)) int_0^{pi/2} sin t cos^{2m-1} t J_0(z sin t) dt."""
    if m < 1:
        raise DomainError("Sonine's integral needs m >= 1")
    spec = default_quadrature_spec() if spec is None else spec
    z = complex(z)
    if z == 0:
        return 0j
    _check_regime(z)

    def integrand(t):
        s = math.sin(t)
        return s * math.cos(t) ** (2 * m - 1) * j_series(0, z * s, DEFAULT_TOL)

    val = integrate_line(integrand, 0.0, 0.5 * math.pi, spec)
    return z ** m / (2 ** (m - 1) * math.factorial(m - 1)) * val


LADDER_TERMS = 60


def _j_laurent(n: int, terms: int = LADDER_TERMS) -> LaurentPolynomial:
    if n < 0:
        p = _j_laurent(-n, terms)
        return p.scale(-1) if n % 2 else p
    return LaurentPolynomial(j_coefficients(n, terms))


def _lower(p: LaurentPolynomial, c) -> LaurentPolynomial:
    """(D + c/x) p."""
    return p.derivative() + p.shift(-1).scale(c)


def ladder_factorization_residual(n: int, z, terms: int = LADDER_TERMS) -> Tuple[complex, complex]:
    """Residuals of (D-(n-1)/x)(D+n/x) J_n + J_n and (D+(n+1)/x)(D-n/x) J_n + J_n.

    Operators act exactly on the truncated series; the only surviving
    terms come from the truncation edge.
    """
    z = complex(z)
    if z == 0:
        raise DomainError("z must be nonzero")
    j = _j_laurent(n, terms)
    r1 = _lower(_lower(j, n), -(n - 1)) + j
    r2 = _lower(_lower(j, -n), n + 1) + j
    return r1(z), r2(z)


def ladder_first_order_residual(n: int, z, terms: int = LADDER_TERMS) -> Tuple[complex, complex]:
    """Residuals of (D + n/x) J_n = J_{n-1} and (D - n/x) J_n = -J_{n+1}."""
    z = complex(z)
    if z == 0:
        raise DomainError("z must be nonzero")
    j = _j_laurent(n, terms)
    down = _lower(j, n)(z) - bessel_j(n - 1, z)
    up = _lower(j, -n)(z) + bessel_j(n + 1, z)
    return down, up


def printed_first_order_residual(n: int, z) -> Tuple[complex, complex]:
    """The two first-order relations with the signs as printed in the source.

    Both read J_n' - (n/z) J_n on the left, with right-hand sides J_{n+1}
    and J_{n-1}; returned for the record, they do not vanish.
    """
    z = complex(z)
    lhs = bessel_j_derivative(n, z) - n / z * bessel_j(n, z)
    return lhs - bessel_j(n + 1, z), lhs - bessel_j(n - 1, z)


# Neumann polynomials and series -------------------------------------------------

@lru_cache(maxsize=None)
def _neumann(n: int) -> LaurentPolynomial:
    if n == 0:
        return LaurentPolynomial({-1: 1})
    if n == 1:
        return -_neumann(0).derivative()
    return _neumann(n - 2) - _neumann(n - 1).derivative().scale(2)


def neumann_theta(n: int) -> LaurentPolynomial:
    """Neumann polynomial Theta_n from Theta_{n+1} = Theta_{n-1} - 2 Theta_n'."""
    if n < 0:
        raise DomainError("n must be non-negative")
    return _neumann(n)


def neumann_bound(n: int, t) -> float:
    """2^{n-1} n! |t|^{-n-1} e^{|t|^2/4}."""
    r = abs(complex(t))
    return 2.0 ** (n - 1) * math.factorial(n) * r ** (-n - 1) * math.exp(r * r / 4)


def neumann_expand(t, z, N: int) -> complex:
    """Partial Neumann series Theta_0(t) J_0(z) + 2 sum_{n=1}^N Theta_n(t) J_n(z)."""
    t, z = complex(t), complex(z)
    if not abs(z) < abs(t):
        raise DomainError("Neumann series needs |z| < |t|")
    total = neumann_theta(0)(t) * bessel_j(0, z)
    for n in range(1, N + 1):
        total += 2 * neumann_theta(n)(t) * bessel_j(n, z)
    return total


def contour_orthogonality(m: int, n: int, spec: Optional[ContourSpec] = None) -> complex:
    """Contour integral of J_m(z) Theta_n(z) around a circle about the origin."""
    spec = ContourSpec() if spec is None else spec
    theta = neumann_theta(n)
    return integrate_circle(lambda z: bessel_j(m, z) * theta(z), spec)


def neumann_neumann_integral(m: int, n: int, spec: Optional[ContourSpec] = None) -> complex:
    """Contour integral of Theta_m Theta_n (vanishes: no 1/z term)."""
    spec = ContourSpec() if spec is None else spec
    a, b = neumann_theta(m), neumann_theta(n)
    return integrate_circle(lambda z: a(z) * b(z), spec)


def neumann_gram_expected(m: int, n: int) -> complex:
    """Exact value of the J_m Theta_n contour integral by residues.

    2 pi i for m = n = 0, pi i for m = n >= 1 and zero otherwise.
    """
    if m != n:
        return 0j
    return 2j * math.pi if m == 0 else 1j * math.pi


# product formula ------------------------------------------------------------------

def product_2f3_params(mu: int, nu: int) -> HypergeometricParams:
    """Parameters matching the series of J_mu J_nu term by term."""
    s = mu + nu
    return HypergeometricParams(((s + 1) / 2, (s + 2) / 2), (nu + 1, mu + 1, s + 1))


def product_2f3_printed_params(mu: int, nu: int) -> HypergeometricParams:
    """The parameter list as printed, with the first upper entry repeated."""
    s = mu + nu
    return HypergeometricParams(((s + 1) / 2, (s + 1) / 2), (nu + 1, mu + 1, s + 1))


def product_2f3(mu: int, nu: int, z, rtol: float = 1e-9) -> complex:
    """Gamma(mu+1) Gamma(nu+1) J_nu(z) J_mu(z) as (z/2)^{mu+nu} 2F3(...; -z^2).

    The result is compared with the product of the two series values.

    Raises
    ------
    MismatchError
        If the hypergeometric form and the direct product differ.
    """
    if mu < 0 or nu < 0:
        raise DomainError("orders must be non-negative")
    z = complex(z)
    if abs(z) > 5:
        raise DomainError("product formula is evaluated for |z| <= 5")
    rhs = (z / 2) ** (mu + nu) * pfq(product_2f3_params(mu, nu), -z * z)
    direct = math.factorial(mu) * math.factorial(nu) * bessel_j(nu, z) * bessel_j(mu, z)
    if abs(rhs - direct) > rtol * max(1.0, abs(direct)):
        raise MismatchError(f"2F3 form {rhs} differs from J product {direct}")
    return rhs


def product_2f3_report(mu: int, nu: int, z) -> Dict[str, float]:
    """Residuals of the resolved and of the printed parameter readings."""
    z = complex(z)
    direct = math.factorial(mu) * math.factorial(nu) * bessel_j(nu, z) * bessel_j(mu, z)
    pre = (z / 2) ** (mu + nu)
    good = pre * pfq(product_2f3_params(mu, nu), -z * z)
    printed = pre * pfq(product_2f3_printed_params(mu, nu), -z * z)
    return {"resolved_residual": abs(good - direct), "printed_residual": abs(printed - direct)}


# Macdonald functions -----------------------------------------------------------------

_TIGHT = QuadratureSpec(1e-14, 1e-13, 4000)


def _macdonald_moments(nu: float, z: float, spec: QuadratureSpec, moments=(0,)):
    """int_0^inf e^{-z s} (s(2+s))^{nu-1/2} (1+s)^j ds for each j, with t = 1 + s."""
    out = []
    for j in moments:
        def integrand(s, j=j):
            return math.exp(-z * s) * (s * (2.0 + s)) ** (nu - 0.5) * (1.0 + s) ** j

        out.append(integrate_halfline(integrand, 0.0, spec, singular_left=nu - 0.5).real)
    return out


def _macdonald_prefactor(nu: float, z: float) -> float:
    return math.sqrt(math.pi) / gamma(nu + 0.5).real * (z / 2) ** nu * math.exp(-z)


def macdonald_k(n, z: float, spec: Optional[QuadratureSpec] = None) -> float:
    """K_nu(z) = sqrt(pi)/Gamma(nu+1/2) (z/2)^nu int_1^inf e^{-tz} (t^2-1)^{nu-1/2} dt.

    Integer orders are the contract; half-integers also work.  Negative
    orders use K_{-nu} = K_nu.
    """
    z = float(z)
    if not z > 0:
        raise DomainError("Macdonald function needs z > 0")
    nu = abs(float(n))
    spec = default_quadrature_spec() if spec is None else spec
    (m0,) = _macdonald_moments(nu, z, spec)
    return _macdonald_prefactor(nu, z) * m0


def macdonald_k_derivatives(n, z: float, spec: Optional[QuadratureSpec] = None):
    """(K, K', K'') from differentiating the integral representation under the sign."""
    z = float(z)
    if not z > 0:
        raise DomainError("Macdonald function needs z > 0")
    nu = abs(float(n))
    spec = _TIGHT if spec is None else spec
    m0, m1, m2 = _macdonald_moments(nu, z, spec, (0, 1, 2))
    c = math.sqrt(math.pi) / gamma(nu + 0.5).real
    # g(z) = (z/2)^nu, I(z) = int e^{-tz} (t^2-1)^{nu-1/2} dt = e^{-z} m0
    e = math.exp(-z)
    i0, i1, i2 = e * m0, -e * m1, e * m2
    g0 = (z / 2) ** nu
    g1 = nu / z * g0
    g2 = nu * (nu - 1) / (z * z) * g0
    k = c * g0 * i0
    k1 = c * (g1 * i0 + g0 * i1)
    k2 = c * (g2 * i0 + 2 * g1 * i1 + g0 * i2)
    return k, k1, k2


def macdonald_ode_residual(n, z: float, spec: Optional[QuadratureSpec] = None) -> float:
    """z^2 K'' + z K' - (z^2 + n^2) K."""
    k, k1, k2 = macdonald_k_derivatives(n, z, spec)
    return z * z * k2 + z * k1 - (z * z + float(n) ** 2) * k


def macdonald_recurrence_residuals(n: int, z: float,
                                   spec: Optional[QuadratureSpec] = None) -> Tuple[float, float, float]:
    """Residuals of K_n' + (n/z) K_n = -K_{n-1}, -K_n' + (n/z) K_n = K_{n+1},
    and their sum (2n/z) K_n = K_{n+1} - K_{n-1}."""
    spec = _TIGHT if spec is None else spec
    k, k1, _ = macdonald_k_derivatives(n, z, spec)
    km = macdonald_k(n - 1, z, spec)
    kp = macdonald_k(n + 1, z, spec)
    return (k1 + n / z * k + km, -k1 + n / z * k - kp, 2 * n / z * k - (kp - km))


# elementary solutions for half-integer order -------------------------------------------

def elementary_phi(p) -> List[Fraction]:
    """Polynomial solution of phi'' + 2(1 - p/x) phi' - 2p phi/x = 0 with phi(0) = 1.

    Coefficients follow a_{m+1} = -2(m-p) a_m / ((m+1)(m-2p)); the series
    terminates at degree p for positive integer p.

    Raises
    ------
    RecurrenceInconsistent
        If the recurrence meets a zero denominator or fails to terminate.
    """
    pf = Fraction(p)
    if pf.denominator != 1 or pf < 1:
        raise RecurrenceInconsistent(f"p = {p} must be a positive integer for a terminating solution")
    p = int(pf)
    a = [Fraction(1)]
    for m in range(p + 1):
        den = (m + 1) * (m - 2 * p)
        if den == 0:
            raise RecurrenceInconsistent("zero denominator before termination")
        a.append(Fraction(-2 * (m - p), 1) * a[m] / den)
    if a[-1] != 0:
        raise RecurrenceInconsistent("coefficient recurrence did not terminate")
    return a[:-1]


def elementary_bessel(p: int, z) -> complex:
    """y(z) = z^{-1/2} e^{-iz} (-iz)^{-p} phi(-iz), a solution of Bessel's
    equation of order p + 1/2 in elementary functions."""
    import cmath

    z = complex(z)
    if z == 0:
        raise DomainError("z must be nonzero")
    coeffs = elementary_phi(p)
    x = -1j * z
    phi = 0j
    for c in reversed(coeffs):
        phi = phi * x + float(c)
    return z ** -0.5 * cmath.exp(-1j * z) * x ** (-p) * phi


def elementary_bessel_ode_residual(p: int, z, radius: Optional[float] = None) -> complex:
    """z^2 y'' + z y' + (z^2 - nu^2) y with nu = p + 1/2, relative to max |term|.

    Derivatives come from Cauchy's integral formula on a small circle, which
    is far more accurate than differencing for this holomorphic y.
    """
    z = complex(z)
    r = min(0.25, abs(z) / 4) if radius is None else radius

    def y(w):
        return elementary_bessel(p, w)

    y0 = y(z)
    y1 = cauchy_derivative(y, z, 1, r, 64)
    y2 = cauchy_derivative(y, z, 2, r, 64)
    nu2 = (p + 0.5) ** 2
    terms = (z * z * y2, z * y1, (z * z - nu2) * y0)
    scale = max(abs(t) for t in terms)
    return sum(terms) / scale


def spherical_j_three_halves(z: float) -> float:
    """sqrt(2/(pi z)) (sin z / z - cos z)."""
    return math.sqrt(2 / (math.pi * z)) * (math.sin(z) / z - math.cos(z))


# Borel transform of J_0 and its differential equations ---------------------------------

def j0_series(order: int) -> TruncatedSeries:
    """Exact J_0 coefficients through z^order."""
    c = j_coefficients(0, order // 2 + 1)
    return TruncatedSeries(c.get(k, Fraction(0)) for k in range(order + 1))


def printed_j0_borel_series(order: int) -> TruncatedSeries:
    """sum_r (-1)^r/(r!)^3 (x/2)^{2r}: the printed form of the J_0 transform."""
    out = []
    for k in range(order + 1):
        if k % 2:
            out.append(Fraction(0))
        else:
            r = k // 2
            out.append(Fraction((-1) ** r, math.factorial(r) ** 3 * 4 ** r))
    return TruncatedSeries(out)


def _d(f: TruncatedSeries, k: int) -> TruncatedSeries:
    for _ in range(k):
        f = f.derivative()
    return f


def ode_transport(coeffs: Mapping[Tuple[int, int], Fraction], g: TruncatedSeries) -> TruncatedSeries:
    """sum_{k,m} A_{km} (d/dz)^k (z^m g) for the coefficient table A."""
    out = None
    for (k, m), a in sorted(coeffs.items()):
        if a == 0:
            continue
        term = _d(g.shift(m), k) * a
        out = term if out is None else out + term
    return out if out is not None else g * 0


J0_TRANSPORT = {(0, 0): 1, (2, 0): 1, (3, 1): -3, (4, 2): 1}
GEOMETRIC_TRANSPORT = {(0, 0): 1, (0, 1): 1, (1, 1): -1}


def _max_coeff(s: TruncatedSeries) -> float:
    return max(abs(float(c)) for c in s.coeffs)


def borel_ode_check(order_max: int = 40) -> Dict[str, object]:
    """Exact residual series of the candidate differential equations.

    Three residuals are reported, each as (maximum |coefficient|, exactly
    zero?, number of checked orders):

    ``third_order``   x^2 f''' + 3x f'' + f' + 2x f on the printed series
                      f = sum (-1)^r/(r!)^3 (x/2)^{2r}, the equation implied by
                      delta^3 E_3 = z E_3.
    ``printed``       x^2 f'''' + 5x f''' + 4 f'' + x f on the same f.
    ``transported``   z^2 g'''' + 5z g''' + 4 g'' + g, i.e. the table A_{km}
                      pushed through the transport rule, applied to the actual
                      Borel transform g of J_0 (coefficients a_n/n!).
    """
    from .series import borel_transform

    if order_max < 20:
        raise DomainError("order_max must be at least 20")
    n = order_max + 6
    f = printed_j0_borel_series(n)
    x = TruncatedSeries([0, 1] + [0] * (n - 1))
    third = x * x * _d(f, 3) + 3 * x * _d(f, 2) + _d(f, 1) + 2 * x * f
    printed = x * x * _d(f, 4) + 5 * x * _d(f, 3) + 4 * _d(f, 2) + x * f
    g = borel_transform(j0_series(n))
    transported = ode_transport(J0_TRANSPORT, g)
    report = {"f0": f.coeffs[0]}
    for name, s in (("third_order", third), ("printed", printed), ("transported", transported)):
        s = s.truncate(order_max)
        report[name] = {"max_residual": _max_coeff(s), "exact_zero": s.is_zero(),
                        "orders_checked": order_max + 1}
    return report
