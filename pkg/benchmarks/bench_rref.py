"""Time the compiled and pure-Python row-reduction kernels on pairs-map matrices.

    python3 benchmarks/bench_rref.py [--repeat 3] [--max-n 6]
"""

from __future__ import annotations

import argparse
import time
from fractions import Fraction

from algvote import _rref_py, exactlinalg
from algvote.combinatorics import Shape
from algvote.exactlinalg import _integer_row
from algvote.pairsmaps import pairs_matrix, partial_pairs_matrix, recoverable_weight_space

try:
    from algvote._rref import rref_int as compiled_rref
except ImportError:
    compiled_rref = None


def integer_rows(m):
    return [_integer_row(r) for r in m]


def cases(max_n):
    for n in range(4, max_n + 1):
        yield f"P({n})", pairs_matrix(n)
    yield "P^2_1/2 (5)", partial_pairs_matrix(5, 2, Fraction(1, 2))
    yield "P^3_1/4 (5)", partial_pairs_matrix(5, 3, Fraction(1, 4))
    if max_n >= 6:
        yield "P^3_1/3 (6)", partial_pairs_matrix(6, 3, Fraction(1, 3))
    # wide matrices are where the kernel does most of its work: transpose to tall
    yield f"P({max_n}) transposed", [list(r) for r in zip(*pairs_matrix(max_n))]


def best_time(fn, rows, ncols, repeat):
    best = float("inf")
    for _ in range(repeat):
        fresh = [list(r) for r in rows]
        start = time.perf_counter()
        fn(fresh, ncols)
        best = min(best, time.perf_counter() - start)
    return best


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--max-n", type=int, default=6)
    args = parser.parse_args(argv)

    print(f"{'matrix':<22}{'shape':>12}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name, m in cases(args.max_n):
        rows = integer_rows(m)
        ncols = len(rows[0])
        py = best_time(_rref_py.rref_int, rows, ncols, args.repeat)
        if compiled_rref is None:
            print(f"{name:<22}{f'{len(rows)}x{ncols}':>12}{py:>12.4f}{'n/a':>12}{'':>10}")
            continue
        cy = best_time(compiled_rref, rows, ncols, args.repeat)
        assert compiled_rref([list(r) for r in rows], ncols) == _rref_py.rref_int([list(r) for r in rows], ncols)
        print(f"{name:<22}{f'{len(rows)}x{ncols}':>12}{py:>12.4f}{cy:>12.4f}{py / cy:>9.2f}x")

    print()
    print("end to end: recoverable weights of P^k_tau under each backend")
    for n, k in ((5, 2), (5, 3), (6, 3)):
        if n > args.max_n:
            continue
        m = partial_pairs_matrix(n, k, Fraction(1, 3))
        shape = Shape.top_k(n, k)
        row = f"  ({n},{k})"
        for label, kernel in (("python", _rref_py.rref_int), ("cython", compiled_rref)):
            if kernel is None:
                continue
            exactlinalg._rref_int = kernel
            start = time.perf_counter()
            dim = recoverable_weight_space(shape, m).dim
            row += f"  {label} {time.perf_counter() - start:.3f}s (dim {dim})"
        print(row)


if __name__ == "__main__":
    main()
