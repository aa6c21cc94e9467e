#!/usr/bin/env python3
"""Compare the numba kernels against the numpy fallback.

Builds each sweep table cold per backend and reports wall time; numba
timings are shown after a warm-up pass so jit compilation is excluded.

Usage: python benchmarks/bench_kernels.py [max_length]
"""
import sys
import time

import numpy as np

from peglab import kernels


def bench(kind: str, length: int, backend: str) -> float:
    kernels._CACHE.clear()
    if backend == "numba":  # compile outside the timed region
        kernels._table(kind, min(length, 6), backend)
        kernels._CACHE.clear()
    t0 = time.perf_counter()
    kernels._table(kind, length, backend)
    return time.perf_counter() - t0


def main() -> None:
    max_len = int(sys.argv[1]) if len(sys.argv) > 1 else 18
    backends = ["numpy"] + (["numba"] if kernels.HAS_NUMBA else [])
    kinds = ["solvable", "minpegs", "grundy_s", "grundy_m"]

    print(f"board length {max_len} ({1 << max_len} boards per table)")
    header = f"{'table':<10}" + "".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for kind in kinds:
        times = [bench(kind, max_len, b) for b in backends]
        row = f"{kind:<10}" + "".join(f"{t:>11.3f}s" for t in times)
        if len(times) == 2 and times[1] > 0:
            row += f"{times[0] / times[1]:>9.1f}x"
        print(row)

    # sanity: identical outputs
    for kind in kinds:
        outs = [kernels._table(kind, min(max_len, 12), b) for b in backends]
        for other in outs[1:]:
            assert np.array_equal(outs[0], other)
    print("backends agree on every entry")


if __name__ == "__main__":
    main()
