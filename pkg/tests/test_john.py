import math

import mpmath
import pytest
from hypothesis import assume, given, strategies as st

from frobessel.errors import DegenerateInput, DomainError, PoleError
from frobessel.john import (INF, ExponentTriple, LineSpec, ProjectivePoint, cross_ratio, f_a,
                            john_chart_report, john_transform_general, john_transform_numeric,
                            john_xa_closed_form, john_xa_numeric, mobius_apply,
                            regularized_moment, regularized_moment_residue, s3_orbit,
                            ultrahyperbolic_residual)

# mpmath quadrature, 30 digits
JOHN_ORACLE = [
    ((0.5, 0.5, 0.5), (1, -2, 3, 1), 1.2336055843599265),
    ((0.3, 0.8, 1.2), (-0.2, -0.5, 2, 1.5), 2.6218653569813859),
    ((0.5, 0.5, 0.5), (1, 2, 3, 1), 1.9110078541280878),
    ((2.5, 1.5, 0.6), (0.8, -1.2, 1.5, 0.7), 1.597129242425984),
]

finite = st.builds(complex, st.floats(-3, 3), st.floats(-3, 3))
coef = st.builds(complex, st.floats(-2, 2), st.floats(-2, 2))


def gaussian(x1, x2, x3):
    return math.exp(-(x1 * x1 + x2 * x2 + x3 * x3))


def shifted_gaussian(x1, x2, x3):
    return math.exp(-((x1 - 0.3) ** 2 + 2 * (x2 + 0.1) ** 2 + (x3 - 0.2) ** 2))


def distinct(pts, eps=1e-2):
    return all(abs(pts[i] - pts[j]) > eps for i in range(4) for j in range(i + 1, 4))


# cross-ratio ---------------------------------------------------------------------

def test_cross_ratio_harmonic():
    assert cross_ratio(2, 0, 1, "inf") == -1
    assert cross_ratio(INF, 0, 1, -1) == -1


def test_cross_ratio_degenerate():
    with pytest.raises(DegenerateInput):
        cross_ratio(1, 1, 2, 3)


def test_projective_point_validation():
    with pytest.raises(DomainError):
        ProjectivePoint(1.0, True)
    assert ProjectivePoint.of("inf").infinite


@given(st.lists(finite, min_size=4, max_size=4), st.tuples(coef, coef, coef, coef))
def test_cross_ratio_moebius_invariant(pts, m):
    assume(distinct(pts))
    assume(abs(m[0] * m[3] - m[1] * m[2]) > 0.1)
    img = [mobius_apply(m, p) for p in pts]
    cr = cross_ratio(*pts)
    assert abs(cross_ratio(*img) - cr) <= 1e-8 * max(1.0, abs(cr))


@given(st.lists(finite, min_size=4, max_size=4))
def test_cross_ratio_klein_four(p):
    assume(distinct(p))
    cr = cross_ratio(*p)
    for q in ((p[1], p[0], p[3], p[2]), (p[2], p[3], p[0], p[1]), (p[3], p[2], p[1], p[0])):
        assert abs(cross_ratio(*q) - cr) <= 1e-10 * max(1.0, abs(cr))


@given(st.lists(finite, min_size=4, max_size=4))
def test_s3_orbit_matches_permutations(p):
    assume(distinct(p))
    t = cross_ratio(*p)
    assume(abs(t) > 1e-3 and abs(t - 1) > 1e-3)
    orbit = s3_orbit(t)
    # swapping p1, p2 gives 1/t; swapping p2, p3 gives 1 - t
    assert min(abs(o - cross_ratio(p[1], p[0], p[2], p[3])) for o in orbit) <= 1e-8 * max(1, abs(1 / t))
    assert min(abs(o - cross_ratio(p[0], p[2], p[1], p[3])) for o in orbit) <= 1e-8 * max(1, abs(t))


def test_s3_orbit_group_action():
    t = 0.3 + 0.7j
    s = t
    for _ in range(3):
        s = s3_orbit(s)[2]
    assert abs(s - t) < 1e-14


# John transform ------------------------------------------------------------------

@pytest.mark.parametrize("a, line, ref", JOHN_ORACLE)
def test_john_xa_numeric_oracle(a, line, ref):
    assert abs(john_xa_numeric(ExponentTriple(*a), LineSpec(*line)) - ref) <= 1e-9 * ref


@pytest.mark.parametrize("a, line, ref", [o for o in JOHN_ORACLE if o[1][1] < 0])
def test_john_closed_form_on_chart(a, line, ref):
    assert abs(john_xa_closed_form(ExponentTriple(*a), LineSpec(*line)) - ref) <= 1e-6 * ref


@given(st.tuples(st.floats(0.2, 2.5), st.floats(0.2, 2.5), st.floats(0.2, 2.5)),
       st.floats(-2, 2), st.floats(-2, -0.2), st.floats(0.3, 3), st.floats(0.3, 3))
def test_john_closed_form_vs_quadrature(a, al1, al2, be1, be2):
    line = LineSpec(al1, al2, be1, be2)
    assume(abs(al1 * be2 / (al2 * be1)) < 0.9)
    ea = ExponentTriple(*a)
    quad = john_xa_numeric(ea, line)
    assert abs(john_xa_closed_form(ea, line) - quad) <= 1e-6 * abs(quad)


def test_john_closed_form_off_chart():
    a, line = ExponentTriple(0.5, 0.5, 0.5), LineSpec(1, 2, 3, 1)
    with pytest.raises(DomainError):
        john_xa_closed_form(a, line)
    rep = john_chart_report(a, line)
    assert abs(rep["ratio"] - 1.42436) < 1e-5
    # the all-positive chart value is B(a3, 2 - sum a) 2F1(1-a1, a3; 2-a1-a2; 1-x) times the prefactor
    x = 1 * 1 / (2 * 3)
    pref = 3 ** -0.5 * 1 ** 0 * 2 ** -0.5
    ref = pref * float(mpmath.beta(0.5, 0.5) * mpmath.hyp2f1(0.5, 0.5, 1.0, 1 - x))
    assert abs(rep["quadrature"] - ref) < 1e-9


def test_john_xa_not_integrable():
    with pytest.raises(DomainError):
        john_xa_numeric(ExponentTriple(1, 0.5, 0.5), LineSpec(1, 2, 3, 1))


def test_f_a_support():
    f = f_a(ExponentTriple(2, 2, 2))
    assert f(1, 2, 3) == 6 and f(-1, 2, 3) == 0


def test_exponent_triple_positive():
    with pytest.raises(DomainError):
        ExponentTriple(0, 1, 1)


def test_john_gaussian():
    assert abs(john_transform_numeric(gaussian, LineSpec(0, 0, 0, 0)) - math.sqrt(math.pi)) <= 1e-9
    assert abs(john_transform_numeric(gaussian, LineSpec(1, 0, 0, 0)) - math.sqrt(math.pi / 2)) <= 1e-9


@pytest.mark.parametrize("line", [(0.3, -0.2, 0.1, 0.4), (0, 0, 0, 0), (-0.5, 0.4, 0.2, -0.3)])
def test_ultrahyperbolic(line):
    assert abs(ultrahyperbolic_residual(shifted_gaussian, LineSpec(*line))) <= 1e-4


@given(st.tuples(st.floats(-1, 1), st.floats(-1, 1), st.floats(-1, 1)),
       st.tuples(st.floats(-1, 1), st.floats(-1, 1), st.floats(-1, 1)),
       st.floats(0.3, 3.0))
def test_john_general_symmetry_homogeneity(alpha, beta, c):
    assume(math.hypot(*alpha) > 0.2)
    base = john_transform_general(shifted_gaussian, alpha, beta)
    assert abs(john_transform_general(shifted_gaussian, tuple(-x for x in alpha), beta) - base) <= 1e-10
    scaled = john_transform_general(shifted_gaussian, tuple(c * x for x in alpha), beta)
    assert abs(scaled - base / c) <= 1e-8


def test_john_general_matches_affine_chart():
    line = LineSpec(0.3, -0.4, 0.1, 0.2)
    affine = john_transform_numeric(shifted_gaussian, line)
    general = john_transform_general(shifted_gaussian, (0.3, -0.4, 1.0), (0.1, 0.2, 0.0))
    assert abs(affine - general) < 1e-10


def test_john_general_degenerate():
    with pytest.raises(DegenerateInput):
        john_transform_general(gaussian, (0, 0, 0), (1, 2, 3))


# regularized moments ------------------------------------------------------------

EXP_DERIVS = [(-1) ** k for k in range(25)]


def exp_neg(x):
    return math.exp(-x)


@pytest.mark.parametrize("a", [0.5, 1.5, 2.5])
def test_regularized_moment_gamma(a):
    assert abs(regularized_moment(a, exp_neg, EXP_DERIVS, 0) - math.gamma(a)) <= 1e-9


@given(st.floats(-3.9, 3.9).filter(lambda a: abs(a - round(a)) > 0.05))
def test_regularized_moment_continues_gamma(a):
    n = max(0, math.floor(-a) + 1)
    assert abs(regularized_moment(a, exp_neg, EXP_DERIVS, n) - math.gamma(a)) <= 1e-8 * max(1, abs(math.gamma(a)))


@pytest.mark.parametrize("a", [0.5, -0.5, -1.5, -2.5])
def test_regularized_moment_independent_of_n(a):
    vals = [regularized_moment(a, exp_neg, EXP_DERIVS, n) for n in range(max(0, math.floor(-a) + 1), 5)]
    assert max(abs(v - vals[0]) for v in vals) <= 1e-10 * max(1.0, abs(vals[0]))


def test_regularized_moment_residue():
    assert abs(regularized_moment_residue(1, exp_neg, EXP_DERIVS) + 1) <= 1e-6


def test_regularized_moment_gaussian():
    # int_0^inf x^{a-1} e^{-x^2} dx = Gamma(a/2)/2
    derivs = [0.0] * 25
    for k in range(0, 25, 2):
        derivs[k] = (-1) ** (k // 2) * math.factorial(k) / math.factorial(k // 2)
    g = lambda x: math.exp(-x * x)
    assert abs(regularized_moment(1.0, g, derivs, 0) - math.sqrt(math.pi) / 2) < 1e-9
    assert abs(regularized_moment(-0.5, g, derivs, 1) - math.gamma(-0.25) / 2) < 1e-8


def test_regularized_moment_errors():
    with pytest.raises(PoleError):
        regularized_moment(-1.0, exp_neg, EXP_DERIVS, 2)
    with pytest.raises(DomainError):
        regularized_moment(-1.5, exp_neg, EXP_DERIVS, 1)
