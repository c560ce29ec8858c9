"""Time the numba kernels against their numpy fallbacks.

    python3 benchmarks/bench_kernels.py [--sizes 100 200 400] [--repeat 5]
"""
import argparse
import timeit

import numpy as np

from anglemono import _kernels as K
from anglemono.halftheta import build_half_theta6


def _best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def bench(n, repeat, backends):
    rng = np.random.default_rng(n)
    xs, ys = rng.random(n), rng.random(n)
    cone, _ = K.cone_table(xs, ys)
    edges = build_half_theta6(list(zip(xs, ys))).edges()
    rows = []
    for name, fn in (
        ("cone_table", lambda b: K.cone_table(xs, ys, backend=b)),
        ("cone_argmin", lambda b: K.cone_argmin(xs, ys, cone, backend=b)),
        ("crossings", lambda b: K.crossings(xs, ys, edges, backend=b)),
    ):
        times = {}
        for b in backends:
            fn(b)  # warm-up, includes jit compilation
            times[b] = _best(lambda: fn(b), repeat)
        rows.append((name, times))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[100, 200, 400, 800])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = ["numpy"] + (["numba"] if K.HAVE_NUMBA else [])
    print(f"{'kernel':<12} {'n':>5} " + " ".join(f"{b + ' ms':>10}" for b in backends) + f" {'speedup':>8}")
    for n in args.sizes:
        for name, t in bench(n, args.repeat, backends):
            cols = " ".join(f"{1e3 * t[b]:10.3f}" for b in backends)
            sp = f"{t['numpy'] / t['numba']:8.1f}" if "numba" in t else f"{'-':>8}"
            print(f"{name:<12} {n:>5} {cols} {sp}")


if __name__ == "__main__":
    main()
