"""Compare the compiled and pure-Python closed-subset kernels.

    python benchmarks/bench_kernels.py [--repeat N] [TYPE ...]
"""

import argparse
import time

from gcstructures.kernels import _kernels_py
from gcstructures.rootsys import build_root_system, parse_type

try:
    from gcstructures import _kernels as compiled
except ImportError:  # pragma: no cover
    compiled = None


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("types", nargs="*", default=["A3", "B3", "C3", "A4", "D4"])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    print(f"{'type':<6}{'roots':>6}{'closed':>10}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for label in args.types:
        rs = build_root_system(*parse_type(label))
        t = (len(rs.roots),) + tuple(rs._pair_tables) + tuple(rs._sum_tables) + (0, 0)
        tp, ref = best_of(lambda: _kernels_py.closed_masks(*t), args.repeat)
        if compiled is None:
            print(f"{label:<6}{len(rs.roots):>6}{len(ref):>10}{tp:>12.3f}{'n/a':>12}{'n/a':>10}")
            continue
        tc, got = best_of(lambda: compiled.closed_masks(*t), args.repeat)
        assert got == ref, f"backends disagree on {label}"
        print(f"{label:<6}{len(rs.roots):>6}{len(ref):>10}{tp:>12.3f}{tc:>12.4f}{tp / tc:>9.1f}x")


if __name__ == "__main__":
    main()
