"""Compare the compiled and pure-Python kernels on random semicomplete
digraphs.

Usage: python benchmarks/bench_backends.py [--sizes 50,100,200] [--reps 3]
"""

from __future__ import annotations

import argparse
import random
import statistics
import time

import numpy as np

from dicomp import _core_available, _pure
from dicomp.digraph import Digraph
from dicomp.recognize import recognize_semicomplete


def random_semicomplete(n: int, seed: int) -> Digraph:
    rng = random.Random(seed)
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            state = rng.randrange(3)
            if state != 1:
                arcs.append((u, v))
            if state != 0:
                arcs.append((v, u))
    return Digraph(n, arcs)


def time_kernel(kernel, adj, reps: int) -> float:
    times = []
    for _ in range(reps):
        t0 = time.perf_counter()
        kernel(adj)
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--sizes", default="50,100,200")
    parser.add_argument("--reps", type=int, default=3)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    compiled = _core_available()
    print(f"{'n':>6} {'pure (s)':>12} {'compiled (s)':>14} {'speedup':>9}")
    for n in sizes:
        d = random_semicomplete(n, seed=n)
        adj = np.ascontiguousarray(d.adj)
        t_pure = time_kernel(_pure.class_labels, adj, args.reps)
        if compiled:
            from dicomp import _core
            t_core = time_kernel(_core.class_labels, adj, args.reps)
            assert (_core.class_labels(adj) == _pure.class_labels(adj)).all()
            print(f"{n:>6} {t_pure:>12.4f} {t_core:>14.4f} "
                  f"{t_pure / t_core:>8.1f}x")
        else:
            print(f"{n:>6} {t_pure:>12.4f} {'unavailable':>14} {'-':>9}")

    print("\nfull recognition (active backend):")
    for n in sizes:
        d = random_semicomplete(n, seed=n)
        t0 = time.perf_counter()
        recognize_semicomplete(d)
        print(f"  n={n}: {time.perf_counter() - t0:.4f}s")


if __name__ == "__main__":
    main()
