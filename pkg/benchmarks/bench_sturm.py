"""Time the Sturm-bisection backends on the radial hydrogen matrix.

Usage: python benchmarks/bench_sturm.py [--cells 2048 8192] [--levels 6] [--repeat 3]
"""
import argparse
import time

import numpy as np
from scipy.linalg import eigh_tridiagonal

from ksdyon import tridiag
from ksdyon.numerics import Grid1D, _assemble


def radial_matrix(n_cells, r_max=90.0):
    grid = Grid1D(0.0, r_max, n_cells, "radial-semiline")
    return _assemble(grid, lambda r: 0.5 * np.ones_like(r), lambda r: 2.0 * np.log(r),
                     lambda r: -1.0 / r, "natural", "dirichlet")


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cells", type=int, nargs="+", default=[1024, 2048, 4096, 8192])
    ap.add_argument("--levels", type=int, default=6)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = ["python"] + (["compiled"] if tridiag.BACKEND == "compiled" else [])
    print(f"{'cells':>6} {'backend':>9} {'seconds':>10} {'max |diff| vs scipy':>20}")
    for n in args.cells:
        d, e = radial_matrix(n)
        t_ref, ref = best_of(lambda: eigh_tridiagonal(d, e, eigvals_only=True,
                                                      select="i", select_range=(0, args.levels - 1)), args.repeat)
        print(f"{n:>6} {'scipy':>9} {t_ref:>10.4f} {'':>20}")
        for name in backends:
            t, vals = best_of(lambda: tridiag.lowest_eigenvalues(d, e, args.levels, backend=name), args.repeat)
            print(f"{n:>6} {name:>9} {t:>10.4f} {np.max(np.abs(vals - ref)):>20.2e}")


if __name__ == "__main__":
    main()
