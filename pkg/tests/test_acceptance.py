"""One test per acceptance criterion; each prints a single PASS/FAIL line.

Tolerances and runtime limits are the contractual ones and are not relaxed.
"""
import cmath
import json
import math
import os
import random
import shutil
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from frobessel import bessel, frobenius, hypergeo, john, series, theta
from frobessel.series import IntegerPolynomial, TruncatedSeries

Z_DISC8 = [r * cmath.exp(1j * math.pi * k / 4) for r in (0.5, 2.0, 5.0, 8.0) for k in range(5)]
WIRTINGER_POINTS = [(0.25, 0.5, 1.25), (0.8, 0.35, 1.6), (0.5, 0.6, 1.5), (1.2, 0.4, 2.0),
                    (-0.3, 0.7, 1.9), (0.6, 0.25, 1.1), (0.3, 0.45, 2.3), (1.5, 0.8, 2.2)]
JOHN_POINTS = [
    ((0.5, 0.5, 0.5), (1.0, -2.0, 3.0, 1.0)),
    ((0.5, 0.5, 0.5), (-1.0, -2.0, 3.0, 1.0)),
    ((1.0, 0.5, 0.5), (-0.5, -1.0, 1.0, 1.0)),
    ((1.5, 0.7, 0.4), (0.5, -1.0, 1.0, 1.0)),
    ((0.3, 0.8, 1.2), (-0.2, -0.5, 2.0, 1.5)),
    ((2.5, 1.5, 0.6), (0.8, -1.2, 1.5, 0.7)),
]


@pytest.fixture
def verdict(capsys):
    """Print one PASS/FAIL line per criterion and assert every condition."""

    def emit(number, title, checks, elapsed, limit):
        checks = list(checks) + [(f"runtime {elapsed:.2f}s < {limit:g}s", elapsed < limit)]
        failed = [name for name, ok in checks if not ok]
        with capsys.disabled():
            status = "PASS" if not failed else "FAIL"
            detail = "" if not failed else " [failed: " + "; ".join(failed) + "]"
            print(f"\ncriterion {number:>2} {status}: {title}{detail}")
        assert not failed, failed

    return emit


def _rc(rng):
    return complex(rng.uniform(-1, 1), rng.uniform(-1, 1))


def test_criterion_01_frobenius_factorization(verdict):
    t0 = time.perf_counter()
    rng = random.Random(0)
    worst = 0.0
    for n in range(2, 9):
        g = frobenius.CyclicGroupData(n)
        for _ in range(200):
            x = [_rc(rng) for _ in range(n)]
            prod = frobenius.character_product(g, x)
            det = frobenius.circulant_determinant(x)
            worst = max(worst, abs(prod - det) / max(abs(prod), abs(det)))
    verdict(1, "character product vs circulant determinant, n = 2..8",
            [(f"max relative error {worst:.2e} <= 1e-10", worst <= 1e-10)],
            time.perf_counter() - t0, 1.0)


def test_criterion_02_cyclotomic_completeness(verdict):
    t0 = time.perf_counter()
    bad = []
    for n in range(1, 31):
        prod = IntegerPolynomial([1])
        for d in frobenius.divisors(n):
            prod = prod * frobenius.cyclotomic(d, verify=False)
        if prod != IntegerPolynomial([-1] + [0] * (n - 1) + [1]):
            bad.append(n)
    verdict(2, "prod_{d|n} Phi_d = X^n - 1 exactly, n <= 30",
            [(f"mismatches at {bad}", not bad)], time.perf_counter() - t0, 1.0)


def test_criterion_03_generalized_bessel_eigen(verdict):
    t0 = time.perf_counter()
    exact = {k: frobenius.generalized_bessel_eigen_residual(k, 40).is_zero() for k in (2, 3, 4)}
    spec = frobenius.EigenProblemSpec(2, 1.0, (math.cos, lambda t: math.exp(-t)))
    pde = max(abs(frobenius.eigen_pde_residual(spec, (x1, x2)))
              for x1 in (0.3, 0.6, 0.9) for x2 in (0.3, 0.6, 0.9))
    verdict(3, "delta^k E_k = z E_k exactly through order 40; product PDE residual",
            [(f"exact zero for k = {k}", ok) for k, ok in exact.items()]
            + [(f"PDE residual {pde:.2e} <= 1e-4", pde <= 1e-4)],
            time.perf_counter() - t0, 5.0)


def test_criterion_04_bessel_identity_suite(verdict):
    t0 = time.perf_counter()
    rec = ray = lad = son = 0.0
    for n in range(0, 7):
        for z in Z_DISC8:
            a, b = bessel.recurrence_residual_j(n, z)
            rec = max(rec, abs(a), abs(b))
            ray = max(ray, abs(bessel.rayleigh_j(n, z) - bessel.bessel_j(n, z)))
            a, b = bessel.ladder_factorization_residual(n, z)
            c, d = bessel.ladder_first_order_residual(n, z)
            lad = max(lad, abs(a), abs(b), abs(c), abs(d))
            if n >= 1:  # Sonine's integral needs order >= 1
                son = max(son, abs(bessel.sonine_j(n, z) - bessel.bessel_j(n, z)))
    gram = max(abs(bessel.contour_orthogonality(m, n) - (1j * math.pi if m == n else 0))
               for m in range(7) for n in range(7))
    neumann = abs(bessel.neumann_expand(3, 1, 14) - 1 / (3 - 1))
    verdict(4, "Bessel recurrences, ladders, Rayleigh, Sonine; Neumann Gram and series",
            [(f"recurrences {rec:.2e} <= 1e-8", rec <= 1e-8),
             (f"ladders {lad:.2e} <= 1e-8", lad <= 1e-8),
             (f"Rayleigh {ray:.2e} <= 1e-8", ray <= 1e-8),
             (f"Sonine {son:.2e} <= 1e-8", son <= 1e-8),
             (f"Gram vs i*pi*I max deviation {gram:.2e} <= 1e-9", gram <= 1e-9),
             (f"Neumann error at N=14 {neumann:.2e} <= 1e-8", neumann <= 1e-8)],
            time.perf_counter() - t0, 10.0)


def test_criterion_05_macdonald_suite(verdict):
    t0 = time.perf_counter()
    ode = rec = 0.0
    for n in range(0, 5):
        for i in range(10):
            z = 0.5 + 0.5 * i
            ode = max(ode, abs(bessel.macdonald_ode_residual(n, z)))
            if n >= 1:
                rec = max(rec, *(abs(r) for r in bessel.macdonald_recurrence_residuals(n, z)))
    verdict(5, "Macdonald ODE and recurrences, n <= 4, z in [0.5, 5]",
            [(f"ODE residual {ode:.2e} <= 1e-7", ode <= 1e-7),
             (f"recurrence residual {rec:.2e} <= 1e-8", rec <= 1e-8)],
            time.perf_counter() - t0, 5.0)


def test_criterion_06_hypergeometric_triple_agreement(verdict):
    t0 = time.perf_counter()
    worst = 0.0
    count = 0
    for a, b, c in WIRTINGER_POINTS:
        for tau in (1j, 1.5j):
            x = theta.lambda_modular(tau)
            s = hypergeo.gauss_2f1(a, b, c, x)
            e = hypergeo.euler_integral_2f1(a, b, c, x)
            w = theta.wirtinger_2f1(a, b, c, tau)
            worst = max(worst, abs(s - e), abs(s - w), abs(e - w))
            count += 1
    verdict(6, f"series, Euler and theta routes pairwise on {count} points",
            [(f"max pairwise difference {worst:.2e} <= 1e-6", worst <= 1e-6),
             (f"{len(WIRTINGER_POINTS)} parameter points >= 8", len(WIRTINGER_POINTS) >= 8)],
            time.perf_counter() - t0, 20.0)


def test_criterion_07_elliptic_modular(verdict):
    t0 = time.perf_counter()
    kerr = max(abs(hypergeo.elliptic_K(i / 10, check=False)
                   - 0.5 * math.pi * hypergeo.gauss_2f1(0.5, 0.5, 1, i / 10)) for i in range(10))
    lam = abs(theta.lambda_modular(1j) - 0.5)
    trip = max(abs(theta.lambda_modular(theta.tau_from_x(i / 10)) - i / 10) for i in range(2, 9))
    verdict(7, "K vs (pi/2) 2F1, lambda(i), lambda(tau(x)) round trip",
            [(f"K error {kerr:.2e} <= 1e-9", kerr <= 1e-9),
             (f"lambda(i) error {lam:.2e} <= 1e-10", lam <= 1e-10),
             (f"round trip {trip:.2e} <= 1e-8", trip <= 1e-8)],
            time.perf_counter() - t0, 5.0)


def test_criterion_08_john_transform(verdict):
    t0 = time.perf_counter()
    worst = 0.0
    for a, line in JOHN_POINTS:
        ea, ln = john.ExponentTriple(*a), john.LineSpec(*line)
        q = john.john_xa_numeric(ea, ln)
        worst = max(worst, abs(q - john.john_xa_closed_form(ea, ln)) / abs(q))

    def gaussian(x1, x2, x3):
        return math.exp(-((x1 - 0.3) ** 2 + 2 * (x2 + 0.1) ** 2 + (x3 - 0.2) ** 2))

    ultra = max(abs(john.ultrahyperbolic_residual(gaussian, john.LineSpec(*line)))
                for line in ((0.3, -0.2, 0.1, 0.4), (0, 0, 0, 0)))
    derivs = [(-1) ** k for k in range(25)]
    e = lambda x: math.exp(-x)
    gam = max(abs(john.regularized_moment(a, e, derivs, 0) - math.gamma(a)) for a in (0.5, 1.5, 2.5))
    res = abs(john.regularized_moment_residue(1, e, derivs) + 1)
    verdict(8, f"John closed form on {len(JOHN_POINTS)} points, ultrahyperbolic PDE, x_+^a moments",
            [(f"closed form vs quadrature {worst:.2e} <= 1e-6", worst <= 1e-6),
             (f"ultrahyperbolic residual {ultra:.2e} <= 1e-4", ultra <= 1e-4),
             (f"Gamma(a) error {gam:.2e} <= 1e-9", gam <= 1e-9),
             (f"residue error {res:.2e} <= 1e-6", res <= 1e-6)],
            time.perf_counter() - t0, 10.0)


def test_criterion_09_borel_machinery(verdict):
    t0 = time.perf_counter()
    geo = series.geometric_series()
    resum = max(abs(series.borel_resum(geo, z) - 1 / (1 - z)) for z in (0, 0.5, -0.5, 0.5j))
    rep = bessel.borel_ode_check(40)
    verdict(9, "Borel resummation and the delta^3-derived ODE",
            [(f"resummation error {resum:.2e} <= 1e-8", resum <= 1e-8),
             ("third-order ODE residual exactly zero through order 40",
              rep["third_order"]["exact_zero"] and rep["third_order"]["orders_checked"] == 41),
             (f"printed fourth-order ODE discrepancy reported ({rep['printed']['max_residual']:g})",
              not rep["printed"]["exact_zero"])],
            time.perf_counter() - t0, 2.0)


def test_criterion_10_delta_operator_combinatorics(verdict):
    t0 = time.perf_counter()
    routes = all(series.hilbert_coefficients_difference(n) == series.hilbert_coefficients_multinomial(n)
                 for n in range(11))
    lemma = all(sum(a * math.comb(u, j) for j, a in enumerate(series.hilbert_coefficients(n))) == u ** n
                for n in range(11) for u in range(11))
    rng = random.Random(0)
    same = True
    for _ in range(50):
        n = rng.randint(1, 6)
        f = TruncatedSeries(Fraction(rng.randint(-20, 20)) for _ in range(rng.randint(1, 13)))
        expected = f
        for _ in range(n):
            expected = expected.delta()
        same &= series.delta_power_apply(n, f) == expected
    verdict(10, "A_nj routes, binomial identity, delta-power routes",
            [("A_nj formulas identical, n <= 10", routes),
             ("sum A_nj C(u, j) = u^n, u <= 10", lemma),
             ("delta_power_apply routes identical on 50 polynomials", same)],
            time.perf_counter() - t0, 2.0)


def _cli():
    exe = shutil.which("frobessel")
    return [exe] if exe else [sys.executable, "-m", "frobessel"]


def _run(args, env=None):
    return subprocess.run(_cli() + args, capture_output=True, text=True,
                          env=dict(os.environ, **(env or {})))


def test_criterion_11_cli_determinism(verdict, tmp_path):
    t0 = time.perf_counter()
    first = _run(["verify", "all"])
    verify_time = time.perf_counter() - t0
    second = _run(["verify", "all"])
    report = json.loads(first.stdout)
    codes = {
        0: _run(["eval", "bessel_j", "0", "1.0"]).returncode,
        1: _run(["verify", "theta"], {"FB_TOL": "1e-3"}).returncode,
        2: _run(["eval", "no_such_function", "1"]).returncode,
        3: _run(["table", "bessel_j", "n=0:1", str(tmp_path / "t.csv")]).returncode,
        4: _run(["eval", "gamma", "-2"]).returncode,
        5: _run(["table", "bessel_j", "n=0:1:2,z=0:1:2", str(tmp_path / "no" / "t.csv")]).returncode,
    }
    verdict(11, "verify all: exit 0, byte-identical reruns; exit codes 0-5 reachable",
            [(f"first run exit {first.returncode} == 0", first.returncode == 0),
             (f"second run exit {second.returncode} == 0", second.returncode == 0),
             ("report passed", report["passed"]),
             ("byte-identical output", first.stdout == second.stdout),
             (f"verify all {verify_time:.1f}s < 60s", verify_time < 60)]
            + [(f"exit code {want} reached (got {got})", got == want) for want, got in codes.items()],
            time.perf_counter() - t0, 120.0)
