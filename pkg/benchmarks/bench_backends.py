#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Usage: python benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import time

from stirlingperms import _pure

try:
    from stirlingperms import _core
except ImportError:
    _core = None


def bench(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


CASES = [
    ("enumerate (1^8)", lambda k: lambda: k.words_of((1,) * 8)),
    ("enumerate (2,2,2,2)", lambda k: lambda: k.words_of((2, 2, 2, 2))),
    ("brute filter (1^8)", lambda k: lambda: k.brute_count((1,) * 8)),
    ("brute filter (2,2,2)", lambda k: lambda: k.brute_count((2, 2, 2))),
    (
        "profiles over Q_(2,2,2,2)",
        lambda k: lambda: [k.profile12(w) for w in k.words_of((2, 2, 2, 2))],
    ),
    (
        "hops over Q_(1^6)",
        lambda k: lambda: [
            k.phi_letter(w, x) for w in k.words_of((1,) * 6) for x in range(1, 7)
        ],
    ),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = [("pure", _pure)]
    if _core is not None:
        backends.append(("c", _core))
    else:
        print("compiled backend not built; timing the fallback only\n")

    width = max(len(name) for name, _ in CASES)
    header = f"{'case':<{width}}  " + "".join(f"{n:>12}" for n, _ in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for name, make in CASES:
        times = [bench(make(mod), args.repeat) for _, mod in backends]
        row = f"{name:<{width}}  " + "".join(f"{t * 1000:>10.1f}ms" for t in times)
        if len(times) == 2 and times[1] > 0:
            row += f"{times[0] / times[1]:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
