import cmath
import math

import mpmath
import pytest
from hypothesis import given, strategies as st

from frobessel.bessel import (BesselOrder, bessel_j, bessel_j_derivative, borel_ode_check,
                              contour_orthogonality, elementary_bessel,
                              elementary_bessel_ode_residual, elementary_phi,
                              ladder_factorization_residual, ladder_first_order_residual,
                              macdonald_k, macdonald_ode_residual,
                              macdonald_recurrence_residuals, neumann_bound, neumann_expand,
                              neumann_gram_expected, neumann_neumann_integral, neumann_theta,
                              printed_first_order_residual, product_2f3, product_2f3_report,
                              rayleigh_j, recurrence_residual_j, sonine_j)
from frobessel.errors import DomainError, RecurrenceInconsistent

# mpmath, 30 digits
J_ORACLE = [
    (0, 1.0, 0.76519768655796655), (0, 4.5, -0.32054250898512142), (0, 8.0, 0.17165080713755391),
    (1, 1.0, 0.44005058574493352), (1, 4.5, -0.23106043192337063), (1, 8.0, 0.23463634685391462),
    (3, 1.0, 0.019563353982668406), (3, 4.5, 0.4247039729774556), (3, 8.0, -0.29113220706595225),
    (6, 1.0, 2.093833800238927e-5), (6, 4.5, 0.084276261135268493), (6, 8.0, 0.33757590011359308),
    (0, 1 + 1j, 0.93760847680602928 - 0.49652994760912213j),
    (2, 1 + 1j, 0.041579886943962122 + 0.24739764151330631j),
    (5, 1 + 1j, -0.0011253083422928652 - 0.00095182638817546248j),
]
JP_ORACLE = [
    (0, 1.0, -0.44005058574493352), (0, 3.5, -0.13737752736232719),
    (2, 1.0, 0.21024361588113256), (2, 3.5, -0.12469629217727709),
]
K_ORACLE = [
    (0, 0.5, 0.92441907122766586), (0, 1.0, 0.42102443824070833),
    (0, 2.5, 0.062347553200366186), (0, 5.0, 0.0036910983340425943),
    (1, 0.5, 1.6564411200033009), (1, 1.0, 0.60190723019723457),
    (1, 2.5, 0.073890816347747064), (1, 5.0, 0.0040446134454521642),
    (4, 0.5, 752.24509791040395), (4, 1.0, 44.232415847062845),
    (4, 2.5, 0.76520535762284192), (4, 5.0, 0.015259065810500579),
]

orders = st.integers(0, 6)
radius8 = st.builds(complex, st.floats(-5.6, 5.6), st.floats(-5.6, 5.6)).filter(lambda z: 0.1 < abs(z) <= 8)


@pytest.mark.parametrize("n, z, ref", J_ORACLE)
def test_bessel_j_oracle(n, z, ref):
    assert abs(bessel_j(n, z) - ref) <= 1e-14


@pytest.mark.parametrize("n, z, ref", JP_ORACLE)
def test_bessel_j_derivative_oracle(n, z, ref):
    assert abs(bessel_j_derivative(n, z) - ref) <= 1e-14


def test_bessel_j_negative_order():
    assert abs(bessel_j(-3, 2.0) + bessel_j(3, 2.0)) < 1e-16


def test_bessel_j_regime():
    with pytest.raises(DomainError):
        bessel_j(0, 31.0)


def test_bessel_order():
    assert BesselOrder(3).nu == 1.5 and not BesselOrder(3).is_integer
    assert BesselOrder(4).as_integer() == 2
    with pytest.raises(DomainError):
        BesselOrder(3).as_integer()


@given(orders, radius8)
def test_recurrences(n, z):
    a, b = recurrence_residual_j(n, z)
    assert abs(a) <= 1e-8 and abs(b) <= 1e-8


@given(orders, radius8)
def test_rayleigh_matches_series(n, z):
    assert abs(rayleigh_j(n, z) - bessel_j(n, z)) <= 1e-8


@given(st.integers(1, 6), radius8)
def test_sonine_matches_series(n, z):
    assert abs(sonine_j(n, z) - bessel_j(n, z)) <= 1e-8


@given(orders, radius8)
def test_ladder_factorization(n, z):
    a, b = ladder_factorization_residual(n, z)
    assert abs(a) <= 1e-8 and abs(b) <= 1e-8


@given(orders, radius8)
def test_ladder_first_order(n, z):
    a, b = ladder_first_order_residual(n, z)
    assert abs(a) <= 1e-8 and abs(b) <= 1e-8


def test_printed_first_order_signs_fail():
    a, b = printed_first_order_residual(2, 1.5)
    assert min(abs(a), abs(b)) > 1e-3


# Neumann polynomials --------------------------------------------------------------

def test_neumann_theta_low_orders():
    # Theta_0 = 1/t, Theta_1 = 1/t^2
    assert abs(neumann_theta(0)(2.0) - 0.5) < 1e-16
    assert abs(neumann_theta(1)(2.0) - 0.25) < 1e-16


@given(st.integers(1, 8), st.sampled_from([0.5, 1.0, 2.0]), st.floats(0, 2 * math.pi))
def test_neumann_bound(n, r, phase):
    t = r * cmath.exp(1j * phase)
    assert abs(neumann_theta(n)(t)) <= neumann_bound(n, t)


def test_neumann_bound_fails_for_order_zero():
    assert abs(neumann_theta(0)(0.5)) > neumann_bound(0, 0.5)


@pytest.mark.parametrize("t, z", [(3, 1), (2.5j, 0.5 + 0.5j), (4, -1.5)])
def test_neumann_series_converges(t, z):
    assert abs(neumann_expand(t, z, 24) - 1 / (t - z)) < 1e-9


def test_neumann_series_geometric_decay():
    e6 = abs(neumann_expand(3, 1, 6) - 0.5)
    e12 = abs(neumann_expand(3, 1, 12) - 0.5)
    assert e12 < 0.1 * e6


def test_neumann_series_domain():
    with pytest.raises(DomainError):
        neumann_expand(1, 2, 5)


@pytest.mark.parametrize("m", range(7))
@pytest.mark.parametrize("n", range(7))
def test_contour_orthogonality_by_residues(m, n):
    assert abs(contour_orthogonality(m, n) - neumann_gram_expected(m, n)) <= 1e-9


def test_neumann_neumann_integral_vanishes():
    assert abs(neumann_neumann_integral(2, 3)) < 1e-9


# product formula ----------------------------------------------------------------

def test_product_2f3_oracles():
    # mpmath: J1(.5)^2 and J2(1.5) J3(1.5)
    assert abs(product_2f3(1, 1, 0.5) - 0.05869400558416216) < 1e-14
    assert abs(product_2f3(2, 3, 1.5) - 2 * 6 * 0.01414898150506074) < 1e-13


@given(st.integers(0, 4), st.integers(0, 4), st.floats(0.1, 4.0))
def test_product_2f3_resolved(mu, nu, z):
    rep = product_2f3_report(mu, nu, z)
    assert rep["resolved_residual"] <= 1e-9


def test_product_2f3_printed_reading_differs():
    assert product_2f3_report(2, 3, 1.5)["printed_residual"] > 1e-3


# Macdonald ------------------------------------------------------------------------

@pytest.mark.parametrize("n, z, ref", K_ORACLE)
def test_macdonald_oracle(n, z, ref):
    assert abs(macdonald_k(n, z) - ref) <= 1e-9 * ref


@given(st.integers(0, 4), st.floats(0.5, 5.0))
def test_macdonald_ode(n, z):
    k = macdonald_k(n, z)
    assert abs(macdonald_ode_residual(n, z)) <= 1e-7 * max(1.0, z * z * k)


@given(st.integers(1, 4), st.floats(0.5, 5.0))
def test_macdonald_recurrences(n, z):
    assert max(abs(r) for r in macdonald_recurrence_residuals(n, z)) <= 1e-8


def test_macdonald_half_integer_closed_form():
    # K_{1/2}(z) = sqrt(pi/(2z)) e^{-z}
    z = 1.3
    assert abs(macdonald_k(0.5, z) - math.sqrt(math.pi / (2 * z)) * math.exp(-z)) < 1e-10


def test_macdonald_domain():
    with pytest.raises(DomainError):
        macdonald_k(0, -1.0)


# half-integer orders -----------------------------------------------------------------

@given(st.integers(1, 5), st.sampled_from([0.5, 1.0, 3.0, 1 + 2j, 2.5 - 0.5j]))
def test_elementary_bessel_ode(p, z):
    assert abs(elementary_bessel_ode_residual(p, z)) <= 1e-9


def test_elementary_phi_low_order():
    assert elementary_phi(1) == [1, -1]


def test_elementary_phi_rejects_non_positive():
    with pytest.raises(RecurrenceInconsistent):
        elementary_phi(0)


@pytest.mark.parametrize("p", [1, 2, 3])
def test_elementary_bessel_is_hankel(p):
    # z^{-1/2} e^{-iz}(-iz)^{-p} phi(-iz) is a constant multiple of H2_{p+1/2}
    c = None
    for z in (1.0, 2.5, 4.0):
        h2 = complex(mpmath.hankel2(p + 0.5, z))
        ratio = elementary_bessel(p, z) / h2
        c = ratio if c is None else c
        assert abs(ratio - c) < 1e-12 * abs(c)


# Borel ODE report ------------------------------------------------------------------

def test_borel_ode_check():
    rep = borel_ode_check(40)
    assert rep["third_order"]["exact_zero"]
    assert rep["transported"]["exact_zero"]
    assert not rep["printed"]["exact_zero"]
    assert rep["third_order"]["orders_checked"] == 41
