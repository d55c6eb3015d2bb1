"""Cross-ratios, the John transform over lines in R^3, and the regularized
moments of the power distribution x_+^{a-1}.

Lines are written in the affine chart x1 = x3*alpha1 + beta1,
x2 = x3*alpha2 + beta2, or in the general form x = t*alpha + beta.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

from .errors import DegenerateInput, DomainError, PoleError
from .hypergeo import gauss_2f1
from .numerics import (QuadratureSpec, default_quadrature_spec, finite_difference,
                       gamma, integrate_halfline, integrate_line)


# projective line ---------------------------------------------------------------

@dataclass(frozen=True)
class ProjectivePoint:
    """A point of the complex projective line: a finite value or infinity."""

    value: Optional[complex] = None
    infinite: bool = False

    def __post_init__(self):
        if self.infinite == (self.value is not None):
            raise DomainError("a projective point is either finite or infinite, not both")
        if self.value is not None:
            object.__setattr__(self, "value", complex(self.value))

    @classmethod
    def infinity(cls) -> "ProjectivePoint":
        return cls(None, True)

    @classmethod
    def of(cls, x) -> "ProjectivePoint":
        if isinstance(x, ProjectivePoint):
            return x
        if x is None or (isinstance(x, str) and x.lower() in ("inf", "infinity", "oo")):
            return cls.infinity()
        return cls(complex(x))


INF = ProjectivePoint.infinity()


def mobius_apply(coeffs: Tuple[complex, complex, complex, complex], p) -> ProjectivePoint:
    """Image of ``p`` under z -> (a z + b)/(c z + d)."""
    a, b, c, d = (complex(x) for x in coeffs)
    if abs(a * d - b * c) == 0:
        raise DegenerateInput("Moebius map is singular")
    p = ProjectivePoint.of(p)
    if p.infinite:
        return INF if c == 0 else ProjectivePoint(a / c)
    den = c * p.value + d
    if den == 0:
        return INF
    return ProjectivePoint((a * p.value + b) / den)


def _diff(p: ProjectivePoint, q: ProjectivePoint) -> Optional[complex]:
    """p - q, or None when the factor contains infinity (it cancels)."""
    if p.infinite or q.infinite:
        return None
    return p.value - q.value


def cross_ratio(p1, p2, p3, p4) -> complex:
    """[p1, p2, p3, p4] = (p1-p3)(p2-p4) / ((p1-p4)(p2-p3)).

    Factors that contain the point at infinity cancel between numerator
    and denominator.

    Raises
    ------
    DegenerateInput
        If two of the points coincide.
    """
    pts = [ProjectivePoint.of(p) for p in (p1, p2, p3, p4)]
    for i in range(4):
        for j in range(i + 1, 4):
            if pts[i] == pts[j]:
                raise DegenerateInput("cross-ratio needs four distinct points")
    num = [_diff(pts[0], pts[2]), _diff(pts[1], pts[3])]
    den = [_diff(pts[0], pts[3]), _diff(pts[1], pts[2])]
    top = 1 + 0j
    for f in num:
        if f is not None:
            top *= f
    bot = 1 + 0j
    for f in den:
        if f is not None:
            bot *= f
    return top / bot


def s3_orbit(t) -> List[complex]:
    """The six images t, 1/t, 1/(1-t), 1-1/t, 1-t, t/(t-1)."""
    t = complex(t)
    if t in (0, 1):
        raise DegenerateInput("t must differ from 0 and 1")
    return [t, 1 / t, 1 / (1 - t), 1 - 1 / t, 1 - t, t / (t - 1)]


# lines and exponents -------------------------------------------------------------

@dataclass(frozen=True)
class LineSpec:
    """Line x1 = x3*alpha1 + beta1, x2 = x3*alpha2 + beta2 in R^3."""

    alpha1: float
    alpha2: float
    beta1: float
    beta2: float

    def point(self, x3: float) -> Tuple[float, float, float]:
        return (x3 * self.alpha1 + self.beta1, x3 * self.alpha2 + self.beta2, x3)

    def as_tuple(self) -> Tuple[float, float, float, float]:
        return (self.alpha1, self.alpha2, self.beta1, self.beta2)


@dataclass(frozen=True)
class ExponentTriple:
    """Exponents (a1, a2, a3) of f_a = prod (x_i)_+^{a_i - 1}."""

    a1: float
    a2: float
    a3: float

    def __post_init__(self):
        if not (self.a1 > 0 and self.a2 > 0 and self.a3 > 0):
            raise DomainError("exponents must be positive in the continuous regime")

    def as_tuple(self) -> Tuple[float, float, float]:
        return (self.a1, self.a2, self.a3)

    @property
    def total(self) -> float:
        return self.a1 + self.a2 + self.a3


def _both_halflines(g: Callable[[float], complex], spec: QuadratureSpec) -> complex:
    return integrate_halfline(g, 0.0, spec) + integrate_halfline(lambda t: g(-t), 0.0, spec)


def john_transform_numeric(f: Callable[[float, float, float], complex], line: LineSpec,
                           spec: Optional[QuadratureSpec] = None) -> complex:
    """Integral of ``f`` along the line, split into two half-lines at x3 = 0."""
    spec = default_quadrature_spec() if spec is None else spec
    return _both_halflines(lambda x3: f(*line.point(x3)), spec)


def john_transform_general(f: Callable[[float, float, float], complex],
                           alpha: Sequence[float], beta: Sequence[float],
                           spec: Optional[QuadratureSpec] = None) -> complex:
    """phi(alpha, beta) = integral over t of f(t*alpha + beta)."""
    if all(a == 0 for a in alpha):
        raise DegenerateInput("direction alpha must be nonzero")
    spec = default_quadrature_spec() if spec is None else spec
    a0, a1, a2 = (float(x) for x in alpha)
    b0, b1, b2 = (float(x) for x in beta)
    return _both_halflines(lambda t: f(t * a0 + b0, t * a1 + b1, t * a2 + b2), spec)


def ultrahyperbolic_residual(f: Callable[[float, float, float], complex], line: LineSpec,
                             h: float = 1e-2, spec: Optional[QuadratureSpec] = None) -> complex:
    """d^2 psi / d alpha1 d beta2 - d^2 psi / d alpha2 d beta1 by nested central differences."""
    spec = QuadratureSpec(1e-13, 1e-13, 4000) if spec is None else spec
    base = list(line.as_tuple())

    def psi(vals):
        return john_transform_numeric(f, LineSpec(*vals), spec)

    def mixed(i, j):
        def outer(s):
            def inner(t):
                v = list(base)
                v[i] += s
                v[j] += t
                return psi(v)
            return finite_difference(inner, 0.0, 1, h)
        return finite_difference(outer, 0.0, 1, h)

    return mixed(0, 3) - mixed(1, 2)


def f_a(a: ExponentTriple) -> Callable[[float, float, float], float]:
    """The power-law integrand prod (x_i)_+^{a_i - 1}."""
    a1, a2, a3 = a.as_tuple()

    def f(x1, x2, x3):
        if x1 <= 0 or x2 <= 0 or x3 <= 0:
            return 0.0
        return x1 ** (a1 - 1) * x2 ** (a2 - 1) * x3 ** (a3 - 1)

    return f


def _support(line: LineSpec) -> Tuple[float, float, List[int], List[int]]:
    """Interval of x3 where all three factors are positive, with the indices
    of the factors that vanish at each end."""
    lo, hi = 0.0, math.inf
    lo_idx, hi_idx = [2], []
    for k, (al, be) in enumerate(((line.alpha1, line.beta1), (line.alpha2, line.beta2))):
        if al == 0:
            if be <= 0:
                return 0.0, 0.0, [], []
            continue
        root = -be / al
        if al > 0:
            if root > lo:
                lo, lo_idx = root, [k]
            elif root == lo:
                lo_idx.append(k)
        else:
            if root < hi:
                hi, hi_idx = root, [k]
            elif root == hi:
                hi_idx.append(k)
    return lo, hi, lo_idx, hi_idx


def john_xa_numeric(a: ExponentTriple, line: LineSpec,
                    spec: Optional[QuadratureSpec] = None) -> float:
    """John transform of f_a by quadrature over the support of the integrand.

    Endpoint exponents a_k - 1 of the vanishing factors are passed to the
    quadrature.  An unbounded support needs a1 + a2 + a3 < 2.
    """
    spec = default_quadrature_spec() if spec is None else spec
    ex = a.as_tuple()
    lo, hi, lo_idx, hi_idx = _support(line)
    if not hi > lo:
        return 0.0
    slopes = (line.alpha1, line.alpha2, 1.0)

    def integrand(x3: float, s: float, vanishing: List[int]) -> float:
        # factors vanishing at the endpoint are |slope| * s exactly, which
        # avoids cancellation in alpha*x3 + beta next to a singular endpoint
        xs = line.point(x3)
        val = 1.0
        for k in range(3):
            xk = abs(slopes[k]) * s if k in vanishing else xs[k]
            if xk <= 0:
                return 0.0
            val *= xk ** (ex[k] - 1)
        return val

    left = sum(ex[k] - 1 for k in lo_idx) if lo_idx else None
    right = sum(ex[k] - 1 for k in hi_idx) if hi_idx else None
    if math.isinf(hi):
        if not a.total < 2:
            raise DomainError("unbounded support needs a1 + a2 + a3 < 2")
        return integrate_halfline(lambda s: integrand(lo + s, s, lo_idx), 0.0, spec,
                                  singular_left=left, decay_power=3 - a.total).real
    half = 0.5 * (hi - lo)
    sub = QuadratureSpec(spec.abs_tol / 2, spec.rel_tol, spec.max_subdivisions)
    return (integrate_line(lambda s: integrand(lo + s, s, lo_idx), 0.0, half, sub,
                           singular_left=left)
            + integrate_line(lambda s: integrand(hi - s, s, hi_idx), 0.0, half, sub,
                             singular_left=right)).real


def john_xa_closed_form(a: ExponentTriple, line: LineSpec, check_chart: bool = True) -> float:
    """Gamma(a2)Gamma(a3)/Gamma(a2+a3) beta1^{a1-1} beta2^{a2+a3-1} |alpha2|^{-a3}
    * 2F1(1-a1, a3; a2+a3; alpha1 beta2 / (alpha2 beta1)).

    Valid on the chart alpha2 < 0 < beta1, beta2 with |x| < 1, where the
    support of f_a along the line is 0 < x3 < beta2/|alpha2| and the
    transform reduces to Euler's integral.

    With ``check_chart=False`` the formula is evaluated wherever it is
    defined (beta1, beta2 > 0, |x| < 1), e.g. to measure how far it is off
    elsewhere.

    Raises
    ------
    DomainError
        Outside that chart.
    """
    al1, al2, be1, be2 = line.as_tuple()
    if not (be1 > 0 and be2 > 0 and al2 != 0):
        raise DomainError("closed form needs beta1, beta2 > 0 and alpha2 != 0")
    if check_chart and not al2 < 0:
        raise DomainError("closed form needs alpha2 < 0 < beta1, beta2")
    x = al1 * be2 / (al2 * be1)
    if not abs(x) < 1:
        raise DomainError("closed form needs |alpha1 beta2 / (alpha2 beta1)| < 1")
    a1, a2, a3 = a.as_tuple()
    pref = (gamma(a2) * gamma(a3) / gamma(a2 + a3)).real
    pref *= be1 ** (a1 - 1) * be2 ** (a2 + a3 - 1) * abs(al2) ** (-a3)
    return pref * gauss_2f1(1 - a1, a3, a2 + a3, x).real


def john_chart_report(a: ExponentTriple, line: LineSpec,
                      spec: Optional[QuadratureSpec] = None) -> dict:
    """Quadrature value, closed-form value (chart check off) and their ratio."""
    quad = john_xa_numeric(a, line, spec)
    closed = john_xa_closed_form(a, line, check_chart=False)
    return {"quadrature": quad, "closed_form": closed,
            "ratio": quad / closed if closed != 0 else math.inf,
            "relative_error": abs(quad - closed) / abs(quad) if quad != 0 else math.inf}


# regularized moments of x_+^{a-1} -------------------------------------------------

def regularized_moment(a: float, phi: Callable[[float], float], derivs: Sequence[float],
                       N: int, spec: Optional[QuadratureSpec] = None) -> complex:
    """Meromorphic continuation of the pairing of x_+^{a-1} with ``phi``.

    int_0^1 (phi - sum_{n<N} c_n x^n) x^{a-1} dx + sum_{n<N} c_n/(n+a)
    + int_1^inf phi x^{a-1} dx, with c_n = phi^(n)(0)/n! from ``derivs``.

    Derivatives beyond the first N are optional.  When given, the remainder
    phi - sum_{n<N} c_n x^n is integrated term by term on a short interval
    [0, d], where subtracting the Taylor polynomial from phi would lose all
    digits; d is chosen so that the last supplied term stays below a
    hundredth of the absolute tolerance.

    Raises
    ------
    PoleError
        At a = 0, -1, ..., -(N-1).
    DomainError
        If a <= -N (subtracted integrand not integrable) or too few
        derivatives are supplied.
    """
    if N < 0:
        raise DomainError("N must be non-negative")
    if len(derivs) < N:
        raise DomainError(f"need {N} derivatives of phi at 0, got {len(derivs)}")
    if not a > -N:
        raise DomainError(f"a = {a} must exceed -N = {-N}")
    if a <= 0 and float(a).is_integer():
        raise PoleError(f"the continuation has a pole at a = {a:g}")
    spec = default_quadrature_spec() if spec is None else spec
    c = [derivs[n] / math.factorial(n) for n in range(len(derivs))]

    def near(x):
        taylor = 0.0
        for n in range(N - 1, -1, -1):
            taylor = taylor * x + c[n]
        return (phi(x) - taylor) * x ** (a - 1)

    d = 0.0
    if len(c) > N:
        top = len(c) - 1
        for cand in (1.0, 0.5, 0.2, 0.1, 0.05, 0.02, 0.01, 5e-3, 2e-3, 1e-3, 5e-4, 2e-4, 1e-4):
            # the last retained term bounds the size of the neglected tail
            if abs(c[top]) * cand ** (top + a) / abs(top + a) <= 1e-2 * spec.abs_tol:
                d = cand
                break
    tail = sum(c[n] * d ** (n + a) / (n + a) for n in range(N, len(c))) if d > 0 else 0.0
    if d > 0:
        part1 = tail + integrate_line(near, d, 1.0, spec)
    else:
        s = N + a - 1
        left = None if (s >= 0 and float(s).is_integer()) else s
        part1 = integrate_line(near, 0.0, 1.0, spec, singular_left=left)
    part2 = sum(c[n] / (n + a) for n in range(N))
    part3 = integrate_halfline(lambda x: phi(x) * x ** (a - 1), 1.0, spec)
    return part1 + part2 + part3


def regularized_moment_residue(n: int, phi: Callable[[float], float], derivs: Sequence[float],
                               eps: float = 1e-4, spec: Optional[QuadratureSpec] = None) -> complex:
    """Residue at a = -n from the symmetric difference eps (V(-n+eps) - V(-n-eps)) / 2."""
    N = n + 2
    up = regularized_moment(-n + eps, phi, derivs, N, spec)
    down = regularized_moment(-n - eps, phi, derivs, N, spec)
    return eps * (up - down) / 2
