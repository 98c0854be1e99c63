"""Compare the numba kernels against their pure-numpy fallbacks.

Usage: python3 benchmarks/bench_kernels.py [--order 240] [--repeats 3]

Times the cyclic Jacobi eigensolver and the BFS all-pairs kernel on the
squared distance matrix / adjacency matrix of a balanced multipartite
graph.  The flavour is toggled at runtime, so one process covers both.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from sqdist import _kernels
from sqdist.matrices import multipartite_graph, sqdist_from_partition
from sqdist.partitions import turan


def _time(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--order", type=int, default=240)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    p = turan(args.order, 6)
    delta = sqdist_from_partition(p).data
    adj = multipartite_graph(p).adjacency()
    tol = 1e-10 * np.linalg.norm(delta)

    jobs = {
        "jacobi": lambda: _kernels.jacobi_eigensystem(delta, tol),
        "bfs": lambda: _kernels.bfs_distances(adj),
    }

    if not _kernels.USE_NUMBA:
        print("numba unavailable or disabled; only the numpy flavour runs")

    print(f"matrix order {args.order}, best of {args.repeats}")
    results: dict[tuple[str, str], float] = {}
    for flavour, use_numba in [("numba", True), ("numpy", False)]:
        if use_numba and not _kernels.USE_NUMBA:
            continue
        _kernels.USE_NUMBA = use_numba
        for name, job in jobs.items():
            job()  # warm-up (JIT compile / cache touch)
            results[(name, flavour)] = _time(job, args.repeats)

    for name in jobs:
        row = "  ".join(
            f"{flavour}: {results[(name, flavour)]*1e3:9.2f} ms"
            for flavour in ("numba", "numpy")
            if (name, flavour) in results
        )
        print(f"{name:>7}  {row}")
        if (name, "numba") in results and (name, "numpy") in results:
            speedup = results[(name, "numpy")] / results[(name, "numba")]
            print(f"{'':>7}  numba speedup: {speedup:.1f}x")


if __name__ == "__main__":
    main()
