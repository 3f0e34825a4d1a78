"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3] [--skip-python-above 200000]
"""

import argparse
import time

import numpy as np

from schubcycle import kernels

CASES = [
    (14, (2, 4, 5, 9, 10, 12, 13)),
    (16, tuple(range(1, 9))),
    (18, (1, 3, 5, 7, 9, 11, 13, 15, 17)),
    (20, tuple(range(1, 11))),
]


def run_case(backend, n, gamma):
    g = np.asarray(gamma, dtype=np.int64)
    t0 = time.perf_counter()
    entries = backend.enumerate_minors(n, g)
    t1 = time.perf_counter()
    edges = backend.cover_edges(n, g, entries)
    t2 = time.perf_counter()
    backend.chain_lengths(len(entries), edges)
    t3 = time.perf_counter()
    return len(entries), len(edges), (t1 - t0, t2 - t1, t3 - t2)


def best_of(repeat, backend, n, gamma):
    runs = [run_case(backend, n, gamma) for _ in range(repeat)]
    size, nedges = runs[0][:2]
    times = tuple(min(r[2][k] for r in runs) for k in range(3))
    return size, nedges, times


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--skip-python-above", type=int, default=200_000)
    args = parser.parse_args()

    names = kernels.available_backends()
    print(f"backends: {', '.join(names)}")
    header = f"{'n':>3} {'m':>3} {'elements':>9} {'covers':>9} {'backend':>9} {'enum':>9} {'covers':>9} {'chains':>9} {'total':>9}"
    print(header)
    for n, gamma in CASES:
        totals = {}
        for name in names:
            backend = kernels.get_backend(name)
            if name == "python":
                size, *_ = run_case(kernels.get_backend(names[0]), n, gamma)
                if size > args.skip_python_above:
                    print(f"{n:>3} {len(gamma):>3} {size:>9} {'':>9} {name:>9} {'skipped':>9}")
                    continue
            size, nedges, times = best_of(args.repeat, backend, n, gamma)
            totals[name] = sum(times)
            cols = " ".join(f"{t * 1e3:>7.1f}ms" for t in (*times, totals[name]))
            print(f"{n:>3} {len(gamma):>3} {size:>9} {nedges:>9} {name:>9} {cols}")
        if len(totals) == 2:
            print(f"    speedup {totals['python'] / totals['compiled']:.1f}x")


if __name__ == "__main__":
    main()
