"""Timing comparison of the pure Python and compiled autocorrelation kernels.

Run:  python3 benchmarks/bench_kernels.py

Prints one table row per (group, order) case with the per-call time of each
backend and the speedup.  Both backends are called through their module
entry points on identical inputs and the outputs are compared for equality,
so the run doubles as an agreement check.
"""

from __future__ import annotations

import random
import time
from array import array

from abelcorr import _kernels, make_group
from abelcorr._kernels import pure

CASES = [
    ([6], 4, 2000),
    ([6], 6, 300),
    ([12], 3, 500),
    ([12], 4, 40),
    ([30], 3, 30),
    ([2, 2, 3], 4, 40),
    ([2, 6], 4, 80),
]


def time_backend(fn, repeat: int):
    best = None
    out = None
    for _ in range(3):
        t0 = time.perf_counter()
        for _ in range(repeat):
            out = fn()
        elapsed = (time.perf_counter() - t0) / repeat
        best = elapsed if best is None else min(best, elapsed)
    return best, out


def main() -> None:
    if _kernels._core is None:
        print("compiled backend unavailable; showing pure timings only")
    rng = random.Random(11)
    header = f"{'group':>10} {'order':>5} {'pure':>12} {'compiled':>12} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for factors, order, repeat in CASES:
        group = make_group(factors)
        values = [rng.randint(-9, 9) for _ in range(group.order)]
        add_flat = group.add_table_flat()

        pure_time, pure_out = time_backend(
            lambda: pure.autocorr_profile(values, add_flat, order), repeat
        )
        if _kernels._core is not None:
            typed = array("q", values)
            comp_time, comp_out = time_backend(
                lambda: _kernels._core.autocorr_profile(typed, add_flat, order),
                repeat,
            )
            assert list(comp_out) == pure_out, "backend outputs diverged"
            speedup = pure_time / comp_time
            print(
                f"{str(factors):>10} {order:>5} {pure_time * 1e6:>10.1f}us "
                f"{comp_time * 1e6:>10.1f}us {speedup:>7.1f}x"
            )
        else:
            print(f"{str(factors):>10} {order:>5} {pure_time * 1e6:>10.1f}us {'-':>12} {'-':>8}")


if __name__ == "__main__":
    main()
