"""Time the numba kernels against their numpy fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--grid 512]

Both variants are called directly, so the ``WALLACH_DISABLE_NUMBA`` flag
does not matter here.  The first numba call (compilation or cache load) is
excluded from the timings.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from wallach import _kernels as K
from wallach.spaces import make_flag_family, make_so_u


def best_of(fn, repeat: int) -> float:
    fn()
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--grid", type=int, default=512)
    args = ap.parse_args()
    if not K.HAVE_NUMBA:
        raise SystemExit("numba is not installed")

    rows = []
    for dec in (make_flag_family("SP", 2, 2, 1), make_flag_family("SU", 4, 4, 4), make_so_u(6)):
        C = np.ascontiguousarray(dec.structure_tensor)
        H, P1, P2, P3 = (np.ascontiguousarray(x, dtype=np.int64) for x in dec.index_sets)
        a = K.triple_partials_numba(C, P1, P2, P3).sum()
        b = K.triple_partials_numpy(C, P1, P2, P3).sum()
        rows.append((f"[123] {dec.name}", best_of(lambda: K.triple_partials_numba(C, P1, P2, P3), args.repeat),
                     best_of(lambda: K.triple_partials_numpy(C, P1, P2, P3), args.repeat), abs(a - b)))
        a = K.casimir_sums_numba(C, H, P1)
        b = K.casimir_sums_numpy(C, H, P1)
        rows.append((f"casimir {dec.name}", best_of(lambda: K.casimir_sums_numba(C, H, P1), args.repeat),
                     best_of(lambda: K.casimir_sums_numpy(C, H, P1), args.repeat), float(np.max(np.abs(a - b)))))

    xs = np.arange(args.grid + 1) * (0.5 / args.grid)
    Va = K.q_grid_numba(xs, xs, 0.3)
    Vb = K.q_grid_numpy(xs, xs, 0.3)
    rows.append((f"Q grid {args.grid}^2", best_of(lambda: K.q_grid_numba(xs, xs, 0.3), args.repeat),
                 best_of(lambda: K.q_grid_numpy(xs, xs, 0.3), args.repeat), float(np.max(np.abs(Va - Vb)))))
    Sa = K.march_segments_numba(Va, xs, xs)
    Sb = K.march_segments_numpy(Va, xs, xs)
    diff = float(np.max(np.abs(Sa - Sb))) if Sa.shape == Sb.shape else float("inf")
    rows.append((f"marching squares {args.grid}^2", best_of(lambda: K.march_segments_numba(Va, xs, xs), args.repeat),
                 best_of(lambda: K.march_segments_numpy(Va, xs, xs), args.repeat), diff))

    w = max(len(r[0]) for r in rows)
    print(f"{'kernel':<{w}}  {'numba [ms]':>11}  {'numpy [ms]':>11}  {'speedup':>8}  {'max |diff|':>10}")
    for name, tn, tp, d in rows:
        print(f"{name:<{w}}  {tn * 1e3:11.3f}  {tp * 1e3:11.3f}  {tp / tn:8.1f}  {d:10.1e}")


if __name__ == "__main__":
    main()
