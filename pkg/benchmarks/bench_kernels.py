"""Compare the compiled kernels with the pure-Python fallback.

Run with ``python3 benchmarks/bench_kernels.py``.  Each kernel is timed on
the same inputs in both backends and the results are checked to agree.
"""
import argparse
import math
import timeit

from frobessel import _pykernels as py

try:
    from frobessel import _ckernels as cy
except ImportError:
    cy = None

CASES = {
    "gk15": lambda k: k.gk15(lambda t: math.exp(-t) * math.cos(3 * t), 0.0, 2.0),
    "theta_series": lambda k: k.theta_series(0.3 + 0.1j, 0.2 + 0.3j, 1e-17),
    "j_series": lambda k: k.j_series(3, 7.5 + 2j, 1e-16),
    "j_series_derivative": lambda k: k.j_series_derivative(2, 4.0, 1e-16),
    "hyp_series_near_1": lambda k: k.hyp_series((0.5, 0.5), (1.0,), 0.995, 1e-16, 100000),
    "hyp_series_2f3": lambda k: k.hyp_series((2.5, 3.0), (3.0, 3.0, 5.0), -9.0, 1e-16, 100000),
}


def _same(a, b) -> bool:
    if isinstance(a, tuple):
        return all(_same(x, y) for x, y in zip(a, b))
    if isinstance(a, (int, bool)):
        return a == b
    return abs(complex(a) - complex(b)) <= 1e-14 * max(1.0, abs(complex(a)))


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args()
    if cy is None:
        print("compiled extension not built; only the Python backend is available")
    print(f"{'kernel':<22}{'python (us)':>14}{'cython (us)':>14}{'speedup':>10}  agree")
    for name, case in CASES.items():
        n = 20
        t_py = min(timeit.repeat(lambda: case(py), number=n, repeat=args.repeat)) / n * 1e6
        if cy is None:
            print(f"{name:<22}{t_py:>14.1f}{'-':>14}{'-':>10}  -")
            continue
        t_cy = min(timeit.repeat(lambda: case(cy), number=n, repeat=args.repeat)) / n * 1e6
        ok = _same(case(py), case(cy))
        print(f"{name:<22}{t_py:>14.1f}{t_cy:>14.1f}{t_py / t_cy:>9.1f}x  {'yes' if ok else 'NO'}")


if __name__ == "__main__":
    main()
