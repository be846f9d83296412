"""Benchmark the compiled swap kernel against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--nodes 500] [--edges 1500] [--swaps 10]

Both backends are run on identical inputs; the outputs are compared to confirm
they are bit-identical before timings are reported.
"""

import argparse
import random
import time

import numpy as np

from richclub import _kernels_py
from richclub._seed import derive_seed

try:
    from richclub import _kernels

    HAVE_COMPILED = True
except ImportError:
    HAVE_COMPILED = False


def make_graph_arrays(n, m, seed):
    rng = random.Random(seed)
    edges = set()
    # ring first so the graph is connected, then random chords
    for i in range(n):
        a, b = i, (i + 1) % n
        edges.add((min(a, b), max(a, b)))
    while len(edges) < m:
        a, b = rng.sample(range(n), 2)
        edges.add((min(a, b), max(a, b)))
    e = sorted(edges)
    return (
        np.array([x for x, _ in e], dtype=np.int64),
        np.array([y for _, y in e], dtype=np.int64),
    )


def run(backend, u0, v0, n, replicates, target, max_attempts):
    outputs = []
    start = time.perf_counter()
    swaps = 0
    for r in range(replicates):
        u, v = u0.copy(), v0.copy()
        swaps += backend.randomize(u, v, n, derive_seed(0, r), target, max_attempts)
        outputs.append((u, v))
    elapsed = time.perf_counter() - start
    return elapsed, swaps, outputs


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--nodes", type=int, default=500)
    ap.add_argument("--edges", type=int, default=1500)
    ap.add_argument("--swaps", type=int, default=10, help="target successful swaps per edge")
    ap.add_argument("--replicates", type=int, default=50)
    args = ap.parse_args()

    u0, v0 = make_graph_arrays(args.nodes, args.edges, seed=1)
    m = len(u0)
    target = args.swaps * m
    max_attempts = 100 * m

    t_py, s_py, out_py = run(_kernels_py, u0, v0, args.nodes, args.replicates, target, max_attempts)
    print(f"python   backend: {t_py:8.3f}s  ({s_py / t_py:12.0f} swaps/s)")

    if not HAVE_COMPILED:
        print("compiled backend: not built (pip install -e . to build it)")
        return

    t_c, s_c, out_c = run(_kernels, u0, v0, args.nodes, args.replicates, target, max_attempts)
    print(f"compiled backend: {t_c:8.3f}s  ({s_c / t_c:12.0f} swaps/s)")
    identical = all(
        np.array_equal(a, c) and np.array_equal(b, d)
        for (a, b), (c, d) in zip(out_py, out_c)
    )
    print(f"outputs bit-identical: {identical}")
    print(f"speedup: {t_py / t_c:.1f}x")
    if not identical:
        raise SystemExit("backend outputs diverged")


if __name__ == "__main__":
    main()
