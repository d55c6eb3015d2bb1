"""Command-line front end: ``eval``, ``verify`` and ``table``.

Exit codes: 0 success, 1 failed verification, 2 unknown function or suite,
3 argument or grid parse failure, 4 library (domain) error, 5 unwritable
output path.
"""
from __future__ import annotations

import argparse
import itertools
import json
import math
import os
import re
import sys
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import bessel, frobenius, hypergeo, john, numerics, series, theta
from .errors import FrobesselError

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_UNKNOWN = 2
EXIT_PARSE = 3
EXIT_DOMAIN = 4
EXIT_UNWRITABLE = 5


class ParseFailure(Exception):
    """An argument or grid specification could not be parsed."""


# argument parsing -----------------------------------------------------------------

def parse_complex(text: str) -> complex:
    """Parse ``a``, ``bi`` or ``a+bi`` without spaces; ``i`` alone is the unit."""
    bad = ParseFailure(f"cannot parse {text!r} as a number")
    if not text or text != text.strip() or " " in text or "j" in text.lower():
        raise bad
    t = text
    if t.endswith("i"):
        body = t[:-1]
        if body == "" or body[-1] in "+-":
            body += "1"
        t = body + "j"
    try:
        z = complex(t)
    except ValueError:
        raise bad from None
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise bad
    return z


def parse_real(text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise ParseFailure(f"cannot parse {text!r} as a real number") from None


def parse_int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseFailure(f"cannot parse {text!r} as an integer") from None


def parse_point(text: str):
    """A complex number or ``inf`` (the point at infinity)."""
    if text.lower() in ("inf", "infinity", "oo"):
        return john.INF
    return parse_complex(text)


_PARSERS = {"int": parse_int, "real": parse_real, "complex": parse_complex, "point": parse_point}


# registry --------------------------------------------------------------------------

@dataclass(frozen=True)
class Entry:
    fn: Callable
    params: Tuple[Tuple[str, str], ...]
    variadic: Optional[str] = None


def _theta(k: int):
    def f(v, tau):
        th = theta.theta_eval(v, tau)
        return (th.v1, th.v2, th.v3, th.v4)[k - 1]
    return f


def _group_determinant(*values):
    return frobenius.group_determinant(frobenius.CyclicGroupData(len(values)), values)


def _john_closed(a1, a2, a3, al1, al2, be1, be2):
    return john.john_xa_closed_form(john.ExponentTriple(a1, a2, a3), john.LineSpec(al1, al2, be1, be2))


def _john_numeric(a1, a2, a3, al1, al2, be1, be2):
    return john.john_xa_numeric(john.ExponentTriple(a1, a2, a3), john.LineSpec(al1, al2, be1, be2))


def _wp(u, tau):
    return theta.weierstrass_consistency(u, tau)["wp"]


_C, _R, _I = "complex", "real", "int"

REGISTRY: Dict[str, Entry] = {
    "bessel_j": Entry(bessel.bessel_j, (("n", _I), ("z", _C))),
    "bessel_j_derivative": Entry(bessel.bessel_j_derivative, (("n", _I), ("z", _C))),
    "bessel_via_1f1": Entry(hypergeo.bessel_via_1f1, (("nu", _C), ("z", _C))),
    "cross_ratio": Entry(john.cross_ratio, (("p1", "point"), ("p2", "point"),
                                            ("p3", "point"), ("p4", "point"))),
    "elementary_bessel": Entry(bessel.elementary_bessel, (("p", _I), ("z", _C))),
    "elliptic_K": Entry(hypergeo.elliptic_K, (("k2", _C),)),
    "euler_integral_2f1": Entry(hypergeo.euler_integral_2f1, (("a", _C), ("b", _C), ("c", _C), ("z", _C))),
    "gamma": Entry(numerics.gamma, (("s", _C),)),
    "gauss_2f1": Entry(hypergeo.gauss_2f1, (("a", _C), ("b", _C), ("c", _C), ("z", _C))),
    "generalized_bessel": Entry(frobenius.generalized_bessel, (("k", _I), ("z", _C))),
    "group_determinant": Entry(_group_determinant, (), variadic=_C),
    "john_xa_closed_form": Entry(_john_closed, tuple((n, _R) for n in
                                                     ("a1", "a2", "a3", "alpha1", "alpha2", "beta1", "beta2"))),
    "john_xa_numeric": Entry(_john_numeric, tuple((n, _R) for n in
                                                  ("a1", "a2", "a3", "alpha1", "alpha2", "beta1", "beta2"))),
    "lambda_modular": Entry(theta.lambda_modular, (("tau", _C),)),
    "macdonald_k": Entry(bessel.macdonald_k, (("n", _I), ("z", _R))),
    "moebius": Entry(frobenius.moebius, (("n", _I),)),
    "neumann_expand": Entry(bessel.neumann_expand, (("t", _C), ("z", _C), ("N", _I))),
    "polylog": Entry(series.polylog, (("s", _I), ("z", _C))),
    "product_2f3": Entry(bessel.product_2f3, (("mu", _I), ("nu", _I), ("z", _C))),
    "rayleigh_j": Entry(bessel.rayleigh_j, (("m", _I), ("z", _C))),
    "sonine_j": Entry(bessel.sonine_j, (("m", _I), ("z", _C))),
    "tau_from_x": Entry(lambda x: theta.tau_from_x(x).tau, (("x", _C),)),
    "theta1": Entry(_theta(1), (("v", _C), ("tau", _C))),
    "theta2": Entry(_theta(2), (("v", _C), ("tau", _C))),
    "theta3": Entry(_theta(3), (("v", _C), ("tau", _C))),
    "theta4": Entry(_theta(4), (("v", _C), ("tau", _C))),
    "totient": Entry(frobenius.totient, (("n", _I),)),
    "weierstrass_p": Entry(_wp, (("u", _C), ("tau", _C))),
    "wirtinger_2f1": Entry(theta.wirtinger_2f1, (("a", _C), ("b", _C), ("c", _C), ("tau", _C))),
}


def _bind(entry: Entry, args: Sequence[str]) -> list:
    if entry.variadic:
        if not args:
            raise ParseFailure("expected at least one argument")
        return [_PARSERS[entry.variadic](a) for a in args]
    if len(args) != len(entry.params):
        names = " ".join(n for n, _ in entry.params)
        raise ParseFailure(f"expected {len(entry.params)} arguments ({names}), got {len(args)}")
    return [_PARSERS[kind](a) for (_, kind), a in zip(entry.params, args)]


# output formatting ------------------------------------------------------------------

def _real_if_tiny(value) -> complex:
    z = complex(value)
    if abs(z.imag) <= 1e-14 * max(1.0, abs(z.real)):
        return complex(z.real, 0.0)
    return z


def format_value(value) -> str:
    """15 significant digits; the imaginary part is dropped when negligible."""
    if isinstance(value, int):
        return str(value)
    z = _real_if_tiny(value)
    if z.imag == 0:
        return "%.15g" % z.real
    sign = "+" if z.imag >= 0 else "-"
    return "%.15g%s%.15gi" % (z.real, sign, abs(z.imag))


# commands -------------------------------------------------------------------------

def cmd_eval(name: str, args: Sequence[str], out=None) -> int:
    out = sys.stdout if out is None else out
    if name not in REGISTRY:
        print(f"error: unknown function {name!r}", file=sys.stderr)
        return EXIT_UNKNOWN
    entry = REGISTRY[name]
    try:
        bound = _bind(entry, args)
    except ParseFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        value = entry.fn(*bound)
    except (FrobesselError, ValueError, ZeroDivisionError, OverflowError) as exc:
        print(f"error: {name}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    print(format_value(value), file=out)
    return EXIT_OK


def cmd_verify(suite: str, seed: int = 0, out=None) -> int:
    out = sys.stdout if out is None else out
    from .verify import SUITES, run_suite

    if suite != "all" and suite not in SUITES:
        print(f"error: unknown suite {suite!r}", file=sys.stderr)
        return EXIT_UNKNOWN
    try:
        report = run_suite(suite, seed)
    except FrobesselError as exc:
        print(f"error: suite {suite}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    out.write(json.dumps(report.as_dict(), indent=2) + "\n")
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


_GRID_ITEM = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)=([^:]+):([^:]+):(\d+)$")


def parse_grid(spec: str) -> List[Tuple[str, List[float]]]:
    """Parse ``var=start:stop:count[,var2=...]`` into evenly spaced axes."""
    axes = []
    if not spec:
        raise ParseFailure("empty grid specification")
    for item in spec.split(","):
        m = _GRID_ITEM.match(item.strip())
        if not m:
            raise ParseFailure(f"grid item {item!r} is not var=start:stop:count")
        name = m.group(1)
        start, stop, count = parse_real(m.group(2)), parse_real(m.group(3)), int(m.group(4))
        if count < 1:
            raise ParseFailure(f"grid count for {name} must be at least 1")
        if count == 1:
            values = [start]
        else:
            values = [start + (stop - start) * i / (count - 1) for i in range(count)]
        if any(name == n for n, _ in axes):
            raise ParseFailure(f"grid variable {name} appears twice")
        axes.append((name, values))
    return axes


def _grid_binding(entry: Entry, axes) -> List[Tuple[str, str, Callable[[float], object]]]:
    """Map each parameter to a grid axis; ``tau`` may be given as ``tau_im``."""
    if entry.variadic:
        raise ParseFailure("variadic functions cannot be tabulated")
    names = [n for n, _ in axes]
    plan = []
    for pname, kind in entry.params:
        if pname in names:
            if kind == _I:
                def conv(x, pname=pname):
                    if not float(x).is_integer():
                        raise ParseFailure(f"grid values for {pname} must be integers")
                    return int(x)
            else:
                conv = float if kind == _R else complex
            plan.append((pname, pname, conv))
        elif pname == "tau" and "tau_im" in names:
            plan.append(("tau_im", pname, lambda x: complex(0.0, x)))
        else:
            raise ParseFailure(f"grid does not define parameter {pname}")
    used = {axis for axis, _, _ in plan}
    extra = [n for n in names if n not in used]
    if extra:
        raise ParseFailure(f"grid variables {extra} are not parameters")
    return plan


def cmd_table(name: str, grid: str, path: str) -> int:
    if name not in REGISTRY:
        print(f"error: unknown function {name!r}", file=sys.stderr)
        return EXIT_UNKNOWN
    entry = REGISTRY[name]
    try:
        axes = parse_grid(grid)
        plan = _grid_binding(entry, axes)
        values = dict(axes)
        rows = []
        for point in itertools.product(*(values[axis] for axis, _, _ in plan)):
            args = [conv(x) for (_, _, conv), x in zip(plan, point)]
            rows.append((point, args))
    except ParseFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        results = [_real_if_tiny(entry.fn(*args)) for _, args in rows]
    except (FrobesselError, ValueError, ZeroDivisionError, OverflowError) as exc:
        print(f"error: {name}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    is_complex = any(r.imag != 0 for r in results)
    header = [axis for axis, _, _ in plan] + (["value_re", "value_im"] if is_complex else ["value"])
    lines = [",".join(header)]
    for (point, _), r in zip(rows, results):
        cells = ["%.14e" % x for x in point] + ["%.14e" % r.real]
        if is_complex:
            cells.append("%.14e" % r.imag)
        lines.append(",".join(cells))
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        print(f"error: cannot write {path}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_UNWRITABLE
    return EXIT_OK


# entry point ------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    """Argument errors exit with the parse-failure code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    from . import __version__

    p = _Parser(prog="frobessel", description="Special-function identities: evaluate, verify, tabulate.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True
    e = sub.add_parser("eval", help="evaluate one function")
    e.add_argument("function")
    e.add_argument("args", nargs=argparse.REMAINDER)
    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", help="frobenius, bessel, hypergeo, theta, john, series or all")
    v.add_argument("--seed", type=int, default=0, help="seed for random test inputs (default 0)")
    t = sub.add_parser("table", help="tabulate a function on a grid into a CSV file")
    t.add_argument("function")
    t.add_argument("grid", help="var=start:stop:count[,var2=...]")
    t.add_argument("path")
    return p


def _check_env() -> Optional[str]:
    raw = os.environ.get("FB_TOL")
    if raw:
        try:
            tol = float(raw)
        except ValueError:
            return f"FB_TOL is not a decimal number: {raw!r}"
        if not (tol > 0 and math.isfinite(tol)):
            return f"FB_TOL must be a positive number, got {raw!r}"
    return None


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    problem = _check_env()
    if problem:
        print(f"error: {problem}", file=sys.stderr)
        return EXIT_PARSE
    if args.command == "eval":
        return cmd_eval(args.function, args.args)
    if args.command == "verify":
        return cmd_verify(args.suite, args.seed)
    return cmd_table(args.function, args.grid, args.path)


if __name__ == "__main__":
    sys.exit(main())
