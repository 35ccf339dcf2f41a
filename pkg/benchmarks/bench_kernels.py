"""Time each hot kernel on the numba path and on the numpy/Python fallback.

    python benchmarks/bench_kernels.py            # default sizes, ~15 s
    python benchmarks/bench_kernels.py --quick    # small sizes

Both paths must return identical results; the script exits 1 if they differ.
The first numba call per kernel is run untimed so JIT compilation is excluded.
Setting BICLIQUEKIT_NO_NUMBA=1 disables the numba path entirely.
"""

import argparse
import random
import sys
import time

import numpy as np

from bicliquekit._accel import HAVE_NUMBA
from bicliquekit.kernels import clique, evaluate, modrank


def timed(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def clique_case(n, p, seed):
    rng = random.Random(seed)
    nb = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                nb[u] |= 1 << v
                nb[v] |= 1 << u
    words = clique.adjacency_words(nb, n)
    return (
        f"max clique G({n}, {p})",
        lambda: clique.max_clique(words, n, backend="numba"),
        lambda: clique.max_clique(nb, n, backend="python"),
    )


def rank_case(size, seed):
    rng = np.random.default_rng(seed)
    base = rng.integers(-5, 6, size=(size, size // 2))
    rows = (base @ rng.integers(-5, 6, size=(size // 2, size))).tolist()  # rank size/2
    res = modrank.to_residues(rows)
    return (
        f"rank mod p {size}x{size}",
        lambda: modrank.rank_mod_p(res, backend="numba"),
        lambda: modrank.rank_mod_p(res, backend="numpy"),
    )


def evaluate_case(n_polys, terms, n_points, seed):
    rng = np.random.default_rng(seed)
    xm = rng.integers(0, 2**12, n_polys * terms, dtype=np.uint64)
    ym = rng.integers(0, 2**12, n_polys * terms, dtype=np.uint64) & ~xm
    coeff = rng.integers(-9, 10, n_polys * terms)
    offsets = np.arange(0, n_polys * terms + 1, terms)
    px = rng.integers(0, 2**12, n_points, dtype=np.uint64)
    py = rng.integers(0, 2**12, n_points, dtype=np.uint64)
    args = (xm, ym, coeff, offsets, px, py)
    return (
        f"evaluate {n_polys} polys x {n_points} points",
        lambda: evaluate.evaluate_many(*args, backend="numba"),
        lambda: evaluate.evaluate_many(*args, backend="numpy"),
    )


def same(a, b):
    if isinstance(a, np.ndarray):
        return np.array_equal(a, b)
    return a == b


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--quick", action="store_true")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if not HAVE_NUMBA:
        print("numba path disabled; nothing to compare", file=sys.stderr)
        return 1
    if args.quick:
        cases = [clique_case(80, 0.7, 1), rank_case(80, 2), evaluate_case(200, 20, 500, 3)]
    else:
        cases = [clique_case(200, 0.7, 1), rank_case(300, 2), evaluate_case(2000, 30, 2000, 3)]
    print(f"{'kernel':<36} {'numba s':>9} {'fallback s':>11} {'speedup':>8}")
    ok = True
    for name, fast, slow in cases:
        fast()  # compile
        t_fast, r_fast = timed(fast, args.repeat)
        t_slow, r_slow = timed(slow, 1 if not args.quick else args.repeat)
        agree = same(r_fast, r_slow)
        ok &= agree
        print(f"{name:<36} {t_fast:>9.4f} {t_slow:>11.4f} {t_slow / t_fast:>7.1f}x" + ("" if agree else "  MISMATCH"))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
