"""Time the numba and numpy kernel backends on the workloads the engine runs.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Workloads: window nc filtering (all window diagonals of the two-limit-point
model against a member list) and the polygon subset sweep of the oracle.
Both backends must return identical results; the script exits nonzero
otherwise.
"""
import argparse
import sys
import time

import numpy as np

from infgon import kernels
from infgon.fixtures import double_zigzag, fan
from infgon.oracle import _tables
from infgon.window import WindowIndex, _as_arrays, _window_pairs, clamped_members


def _best(fn, repeat):
    times = []
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def nc_workload(S, W):
    ix = WindowIndex(S.model, W)
    lo, hi = _window_pairs(S.model.limit_count, W)
    m_lo, m_hi = _as_arrays(clamped_members(S, ix))
    return lo, hi, m_lo, m_hi


def subset_workload(P, count, seed=0):
    diags, cross, pairs, needs = _tables(P)
    D = len(diags)
    if count is None:
        masks = np.arange(1 << D, dtype=np.uint64)
    else:
        rng = np.random.default_rng(seed)
        bits = rng.integers(0, 2, size=(count, D), dtype=np.uint64)
        masks = (bits << np.arange(D, dtype=np.uint64)).sum(axis=1, dtype=np.uint64)
    return masks, cross, pairs, needs, D


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    names = kernels.available_backends()
    backends = {n: kernels.get_backend(n) for n in names}
    cases = [
        ("nc  S1 W=32", "nc_filter", nc_workload(fan(), 32)),
        ("nc  Z2 W=64", "nc_filter", nc_workload(double_zigzag(), 64)),
        ("nc2 Z2 W=64", "nc_filter", None),
        ("oracle P=7 exhaustive", "subset_flags", subset_workload(7, None)),
        ("oracle P=10 200k samples", "subset_flags", subset_workload(10, 200_000)),
    ]
    # second nc pass: every window diagonal of Z2 as a member list
    lo, hi = _window_pairs(2, 64)
    cases[2] = ("nc2 Z2 W=64 (all x all)", "nc_filter", (lo, hi, lo[::3].copy(), hi[::3].copy()))

    if "numba" in backends:
        for _, fn, data in cases:  # compile outside the timings
            getattr(backends["numba"], fn)(*data)

    print(f"{'workload':28s}" + "".join(f"{n:>12s}" for n in names) + "     speedup")
    bad = False
    for label, fn, data in cases:
        results, times = {}, {}
        for n, b in backends.items():
            times[n], results[n] = _best(lambda: getattr(b, fn)(*data), args.repeat)
        ref = results["numpy"]
        for n, r in results.items():
            same = all(np.array_equal(x, y) for x, y in zip(r, ref)) if isinstance(r, tuple) \
                else np.array_equal(r, ref)
            if not same:
                print(f"MISMATCH {label}: {n} differs from numpy", file=sys.stderr)
                bad = True
        row = f"{label:28s}" + "".join(f"{times[n] * 1e3:10.2f}ms" for n in names)
        if "numba" in times:
            row += f"  {times['numpy'] / times['numba']:8.1f}x"
        print(row)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
