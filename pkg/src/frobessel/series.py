"""Truncated power series and the delta-operator calculus.

Coefficients may be exact (``int``/``Fraction``) or floating (``complex``);
exact inputs stay exact through every algebraic operation here, which is
what the coefficientwise identity checks rely on.
"""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Number
from typing import Iterable, List, Optional

from .errors import (DomainError, MismatchError, OutsideDisc,
                     TruncationTooShort)
from .numerics import QuadratureSpec, default_quadrature_spec, integrate_halfline, integrate_line

DEFAULT_ORDER = 64


def _is_exact(x) -> bool:
    return isinstance(x, (int, Fraction))


def _finite(x) -> bool:
    if _is_exact(x):
        return True
    x = complex(x)
    return math.isfinite(x.real) and math.isfinite(x.imag)


def _div(x, n: int):
    """Divide by a positive integer, staying exact when possible."""
    if _is_exact(x):
        return Fraction(x, n) if isinstance(x, int) else x / n
    return x / n


class TruncatedSeries:
    """Power series ``sum_{n<=N} a_n z^n`` known through order ``N``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number]):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise DomainError("a truncated series needs at least one coefficient")
        for c in coeffs:
            if not _finite(c):
                raise DomainError("series coefficients must be finite")
        self.coeffs = coeffs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_exact(self) -> bool:
        return all(_is_exact(c) for c in self.coeffs)

    def __repr__(self):
        return f"TruncatedSeries(order={self.order}, coeffs={list(self.coeffs)[:6]}...)"

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # algebra -----------------------------------------------------------
    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise TruncationTooShort(f"series known to order {self.order}, not {order}")
        return TruncatedSeries(self.coeffs[:order + 1])

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            n = min(self.order, other.order)
            return TruncatedSeries(self.coeffs[k] + other.coeffs[k] for k in range(n + 1))
        return TruncatedSeries((self.coeffs[0] + other,) + self.coeffs[1:])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            n = min(self.order, other.order)
            a, b = self.coeffs, other.coeffs
            out = []
            for k in range(n + 1):
                s = 0
                for i in range(k + 1):
                    s += a[i] * b[k - i]
                out.append(s)
            return TruncatedSeries(out)
        return TruncatedSeries(c * other for c in self.coeffs)

    __rmul__ = __mul__

    def derivative(self) -> "TruncatedSeries":
        """d/dz; the result is known one order lower."""
        if self.order == 0:
            return TruncatedSeries([0])
        return TruncatedSeries(k * self.coeffs[k] for k in range(1, self.order + 1))

    def shift(self, m: int = 1) -> "TruncatedSeries":
        """Multiply by ``z**m``; known ``m`` orders higher."""
        return TruncatedSeries((0,) * m + self.coeffs)

    def delta(self) -> "TruncatedSeries":
        """The delta operator z d/dz (order preserved)."""
        return TruncatedSeries(k * c for k, c in enumerate(self.coeffs))

    def __call__(self, z) -> complex:
        total = 0
        for c in reversed(self.coeffs):
            total = total * z + c
        return total

    def is_zero(self, atol: float = 0.0) -> bool:
        if self.is_exact and atol == 0.0:
            return all(c == 0 for c in self.coeffs)
        return all(abs(complex(c)) <= atol for c in self.coeffs)

    def max_abs(self) -> float:
        return max(abs(complex(c)) for c in self.coeffs)


def geometric_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Coefficients of 1/(1-z): all ones."""
    return TruncatedSeries([1] * (order + 1))


def exp_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Exact coefficients 1/n! of e^z."""
    return TruncatedSeries(Fraction(1, math.factorial(n)) for n in range(order + 1))


def series_arith(a: TruncatedSeries, b: TruncatedSeries, op: str) -> TruncatedSeries:
    """Coefficientwise sum (``op='add'``) or truncated Cauchy product (``'mul'``)."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise DomainError(f"unknown series operation {op!r}")


# Borel transform ----------------------------------------------------------

def borel_transform(f: TruncatedSeries) -> TruncatedSeries:
    """Coefficient ``n`` becomes ``a_n / n!``."""
    return TruncatedSeries(_div(c, math.factorial(n)) for n, c in enumerate(f.coeffs))


def radius_estimate(f: TruncatedSeries) -> float:
    """Root-test radius: 1 / max |a_n|^(1/n) over the top third of the coefficients."""
    n_max = f.order
    start = max(1, (2 * n_max) // 3)
    best = 0.0
    for n in range(start, n_max + 1):
        a = abs(complex(f.coeffs[n]))
        if a > 0:
            best = max(best, math.exp(math.log(a) / n))
    return math.inf if best == 0.0 else 1.0 / best


def borel_resum(f: TruncatedSeries, z, spec: Optional[QuadratureSpec] = None) -> complex:
    """Evaluate ``f(z)`` as the Laplace-type integral of its Borel transform.

    ``f(z) = int_0^inf e^{-t} B(f)(t z) dt``.  Each term is formed in log
    space so the integrand stays finite for large ``t``.

    Raises
    ------
    OutsideDisc
        The root-test radius does not exceed ``|z|``.
    TruncationTooShort
        The geometric tail bound of the neglected coefficients exceeds the
        quadrature tolerance.
    """
    spec = default_quadrature_spec() if spec is None else spec
    z = complex(z)
    radius = radius_estimate(f)
    if radius <= abs(z):
        raise OutsideDisc(f"|z|={abs(z):g} is not inside the estimated radius {radius:g}")
    if math.isfinite(radius) and z != 0:
        rho = abs(z) / radius
        start = max(1, (2 * f.order) // 3)
        scale = max(abs(complex(f.coeffs[n])) * radius ** n for n in range(start, f.order + 1))
        tail = scale * rho ** (f.order + 1) / (1.0 - rho)
        if tail > spec.abs_tol:
            raise TruncationTooShort(
                f"tail bound {tail:.2e} exceeds tolerance {spec.abs_tol:.1e}; use more terms")
    coeffs = [complex(c) for c in f.coeffs]
    lgam = [math.lgamma(n + 1) for n in range(len(coeffs))]
    if z == 0:
        return coeffs[0]
    zs = [coeffs[n] * z ** n for n in range(len(coeffs))]

    def integrand(t):
        if t == 0.0:
            return zs[0]
        lt = math.log(t)
        total = 0j
        for n, c in enumerate(zs):
            if c != 0:
                total += c * math.exp(n * lt - t - lgam[n])
        return total

    return integrate_halfline(integrand, 0.0, spec)


# delta-operator combinatorics ----------------------------------------------

def hilbert_coefficients_difference(n: int) -> List[int]:
    """A_{n,j} = sum_m (-1)^m C(j,m) (j-m)^n, the j-th forward difference of X^n at 0."""
    if n < 0:
        raise DomainError("n must be non-negative")
    return [sum((-1) ** m * math.comb(j, m) * (j - m) ** n for m in range(j + 1))
            for j in range(n + 1)]


def hilbert_coefficients_multinomial(n: int) -> List[int]:
    """A_{n,j} as the sum of multinomials n!/(l_1!...l_j!) over compositions of n into j parts."""
    if n < 0:
        raise DomainError("n must be non-negative")
    memo = {}

    def comp(m, j):
        # sum over ordered (l_1..l_j), l_i > 0, sum m, of m!/prod l_i!
        if j == 0:
            return 1 if m == 0 else 0
        key = (m, j)
        if key not in memo:
            memo[key] = sum(math.comb(m, l) * comp(m - l, j - 1) for l in range(1, m - j + 2))
        return memo[key]

    return [comp(n, j) for j in range(n + 1)]


def hilbert_coefficients(n: int) -> List[int]:
    """Integer coefficients of X^n in the binomial basis C(X, j), j = 0..n.

    Computed by the finite-difference and the multinomial formulas; the two
    must coincide.
    """
    a = hilbert_coefficients_difference(n)
    b = hilbert_coefficients_multinomial(n)
    if a != b:
        raise MismatchError(f"Hilbert coefficient routes disagree at n={n}: {a} vs {b}")
    return a


def proposition_coefficients(n: int) -> List[Fraction]:
    """Coefficients c_{n,j} with delta^n = sum_j c_{n,j} x^j d^j/dx^j.

    Evaluated literally as the partial-fraction sums
    ``sum_{i=1}^{j} i^(n-1) / prod_{l != i, 1<=l<=j} (i - l)``.
    """
    if n < 0:
        raise DomainError("n must be non-negative")
    if n == 0:
        return [Fraction(1)]
    out = [Fraction(0)]
    for j in range(1, n + 1):
        s = Fraction(0)
        for i in range(1, j + 1):
            den = 1
            for l in range(1, j + 1):
                if l != i:
                    den *= i - l
            s += Fraction(i ** (n - 1), den)
        out.append(s)
    return out


def _falling(k: int, j: int) -> int:
    r = 1
    for i in range(j):
        r *= k - i
    return r


def delta_power_apply(n: int, f: TruncatedSeries) -> TruncatedSeries:
    """Apply (x d/dx)^n to ``f`` by two independent routes.

    Route one multiplies coefficient ``k`` by ``k**n``.  Route two expands
    the operator as ``sum_j c_{n,j} x^j d^j/dx^j`` with the partial-fraction
    coefficients, checking ``c_{n,j} = A_{n,j}/j!`` on the way.

    Raises
    ------
    MismatchError
        The routes disagree (exactly for exact input, beyond 1e-12 relative
        for floating input).
    """
    if n < 1:
        raise DomainError("delta power n must be >= 1")
    direct = TruncatedSeries(k ** n * c for k, c in enumerate(f.coeffs))
    cs = proposition_coefficients(n)
    hil = hilbert_coefficients(n)
    for j, c in enumerate(cs):
        if c != Fraction(hil[j], math.factorial(j)):
            raise MismatchError(f"c_[{n},{j}] = {c} differs from A/j! = {hil[j]}/{j}!")
    expanded = []
    for k, a in enumerate(f.coeffs):
        s = 0
        for j in range(1, n + 1):
            fall = _falling(k, j)
            if fall:
                s += cs[j] * fall * a if _is_exact(a) else float(cs[j] * fall) * a
        expanded.append(s)
    route2 = TruncatedSeries(expanded)
    if f.is_exact:
        if route2 != direct:
            raise MismatchError("delta power routes disagree on exact input")
    else:
        for x, y in zip(direct.coeffs, route2.coeffs):
            if abs(complex(x) - complex(y)) > 1e-12 * max(1.0, abs(complex(x))):
                raise MismatchError("delta power routes disagree")
    return direct


# integer polynomials --------------------------------------------------------

class IntegerPolynomial:
    """Polynomial with exact integer coefficients, ``coeffs[j]`` multiplies x^j."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    def __repr__(self):
        return f"IntegerPolynomial({list(self.coeffs)})"

    def __eq__(self, other):
        if isinstance(other, IntegerPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntegerPolynomial(x + y for x, y in zip(a, b))

    def __neg__(self):
        return IntegerPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return IntegerPolynomial([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntegerPolynomial(out)

    def divmod(self, other: "IntegerPolynomial"):
        """Division by a polynomial with leading coefficient +-1."""
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        lead = other.coeffs[-1]
        if lead not in (1, -1):
            raise DomainError("divisor must have unit leading coefficient")
        rem = list(self.coeffs)
        dq = other.degree
        if len(rem) - 1 < dq:
            return IntegerPolynomial([]), IntegerPolynomial(rem)
        quot = [0] * (len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] * lead
            quot[i - dq] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * b
        return IntegerPolynomial(quot), IntegerPolynomial(rem[:dq])

    def exact_div(self, other: "IntegerPolynomial") -> "IntegerPolynomial":
        q, r = self.divmod(other)
        if r.coeffs:
            raise DomainError("polynomial division is not exact")
        return q

    def __call__(self, x):
        total = 0
        for c in reversed(self.coeffs):
            total = total * x + c
        return total


def exponential_polynomial(n: int) -> IntegerPolynomial:
    """Phi_n with (x D)^n e^x = Phi_n(x) e^x.

    Read off the generating function e^{x(e^z - 1)} by exact composition:
    the coefficient of x^k is n!/k! times the z^n coefficient of (e^z - 1)^k.
    The defining differential identity is confirmed on truncated series.
    """
    if n < 0:
        raise DomainError("n must be non-negative")
    e1 = exp_series(n) - 1
    power = TruncatedSeries([Fraction(1)] + [Fraction(0)] * n)
    coeffs = []
    for k in range(n + 1):
        c = power.coeffs[n] * math.factorial(n) / math.factorial(k)
        if c.denominator != 1:
            raise MismatchError("exponential polynomial coefficient is not an integer")
        coeffs.append(int(c))
        power = power * e1
    poly = IntegerPolynomial(coeffs)
    _check_exponential_polynomial(n, poly)
    return poly


def _check_exponential_polynomial(n: int, poly: IntegerPolynomial, order: int = 24):
    e = exp_series(order + n)
    lhs = e
    for _ in range(n):
        lhs = lhs.delta()
    pad = TruncatedSeries(tuple(poly.coeffs) + (0,) * (order + n + 1 - len(poly.coeffs)))
    rhs = pad * e
    if lhs.truncate(order).coeffs != rhs.truncate(order).coeffs:
        raise MismatchError(f"(xD)^{n} e^x != Phi_{n}(x) e^x")


# polylogarithm --------------------------------------------------------------

def polylog_direct(s: int, z, tol: float = 1e-15) -> complex:
    """sum_{k>=1} z^k / k^s by direct summation (``s >= 1``, ``|z| < 1``)."""
    z = complex(z)
    if abs(z) >= 1:
        raise DomainError("polylog requires |z| < 1")
    total = 0j
    zk = 1 + 0j
    k = 0
    while True:
        k += 1
        zk *= z
        term = zk / k ** s
        total += term
        # remaining tail is bounded by |term| * |z| / (1 - |z|)
        if abs(term) * abs(z) / (1 - abs(z)) < tol * max(1.0, abs(total)) or zk == 0:
            return total


def polylog_negative(n: int, z) -> complex:
    """(z D)^n z/(1-z) in closed form, from the delta-operator expansion.

    With f = z/(1-z), f^(j) = j!/(1-z)^(j+1) for j >= 1, so
    delta^n f = sum_j A_{n,j} z^j / (1-z)^(j+1).
    """
    z = complex(z)
    if n == 0:
        return z / (1 - z)
    cs = proposition_coefficients(n)
    total = 0j
    for j in range(1, n + 1):
        total += float(cs[j]) * math.factorial(j) * z ** j / (1 - z) ** (j + 1)
    return total


def polylog_iterated(s: int, z, spec: Optional[QuadratureSpec] = None) -> complex:
    """Li_s(z) by s-fold inverse delta operator applied to z/(1-z).

    Uses delta^{-1} F(x) = int_0^x F(u) du/u, written along the ray from 0
    as int_0^1 F(z r) dr / r.
    """
    if s < 1:
        raise DomainError("iterated route needs s >= 1")
    z = complex(z)
    if abs(z) >= 1:
        raise DomainError("polylog requires |z| < 1")
    spec = default_quadrature_spec() if spec is None else spec
    # inner levels run tighter so the outer tolerance is not swamped
    inner = spec.tightened(100.0)

    def level(order: int, w: complex) -> complex:
        if order == 0:
            return w / (1 - w)
        if w == 0:
            return 0j
        sp = spec if order == s else inner

        def integrand(r):
            if r == 0.0:
                return w  # limit of F(w r)/r, F(u) ~ u near 0
            return level(order - 1, w * r) / r

        return integrate_line(integrand, 0.0, 1.0, sp)

    return level(s, z)


def polylog(s: int, z, tol: float = 1e-14, cross_check: Optional[bool] = None) -> complex:
    """The polylogarithm sum_{k>=1} z^k / k^s for integer ``s`` and ``|z| < 1``.

    Non-positive ``s`` uses the closed form from the delta-operator expansion.
    Positive ``s`` sums directly; for ``s <= 3`` (or when ``cross_check`` is
    true) the value is confirmed against the iterated-integral route.

    Raises
    ------
    DomainError
        If ``|z| >= 1``.
    MismatchError
        If the direct and iterated routes differ by more than 1e-8.
    """
    z = complex(z)
    if abs(z) >= 1:
        raise DomainError("polylog requires |z| < 1")
    s = int(s)
    if s <= 0:
        return polylog_negative(-s, z)
    value = polylog_direct(s, z, tol)
    if cross_check is None:
        cross_check = s <= 3
    if cross_check:
        other = polylog_iterated(s, z)
        if abs(other - value) > 1e-8 * max(1.0, abs(value)):
            raise MismatchError(f"polylog routes disagree: {value} vs {other}")
    return value
