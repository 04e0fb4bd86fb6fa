"""Time the numba and numpy kernels on the same inputs.

    python benchmarks/bench_kernels.py [--group Z2] [--n 5] [--repeat 3]

The numba timing excludes the first (compiling) call.  Results of both
backends are compared before anything is reported.
"""
import argparse
import time

import numpy as np

from colhopf import kernels
from colhopf.groups import parse_group
from colhopf.hopf import class_basis
from colhopf.universe import Universe


def timed(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def cases(U, G):
    B = class_basis("D", G)
    deg = B.degree(U.n)
    rows = np.nonzero(deg.labels == 0)[0]
    i = max(U.n - 1, 1)
    src = np.arange(U.N, dtype=np.int64)
    return {
        "rank_rows": lambda: kernels.rank_rows(U.windows, U.colours, G.order),
        "compose_table": lambda: kernels.compose_table(U.windows, U.colours, G.mul_table),
        "product_counts": lambda: U.product_counts(rows, deg.labels, deg.dim),
        "connected_labels": lambda: kernels.connected_labels(U.N, src, U.left_s(i)),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--group", default="Z2")
    ap.add_argument("--n", type=int, default=5)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    G = parse_group(args.group)
    U = Universe(args.n, G)
    print(f"group {G}, n={args.n}, |G_n|={U.N}, backends numba={kernels.HAVE_NUMBA}")
    print(f"{'kernel':<18}{'numpy s':>10}{'numba s':>10}{'speedup':>9}")
    for name, fn in cases(U, G).items():
        kernels.set_backend("numpy")
        t_np, ref = timed(fn, args.repeat)
        if not kernels.HAVE_NUMBA:
            print(f"{name:<18}{t_np:>10.4f}{'-':>10}{'-':>9}")
            continue
        kernels.set_backend("numba")
        fn()  # compile
        t_nb, got = timed(fn, args.repeat)
        if not np.array_equal(ref, got):
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:<18}{t_np:>10.4f}{t_nb:>10.4f}{t_np / t_nb:>8.1f}x")


if __name__ == "__main__":
    main()
