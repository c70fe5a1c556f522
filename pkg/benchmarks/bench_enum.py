#!/usr/bin/env python3
"""Benchmark the enumeration kernels: numba DFS versus pure-numpy sweep.

Runs the hottest real workloads (line and root enumeration on the largest
desk-scale surfaces) against both backends and prints a timing table.
Results are asserted identical between backends before timing.

    python benchmarks/bench_enum.py [--repeat 5]
"""

from __future__ import annotations

import argparse
import statistics
import time

from adesurf._enumkernel import HAVE_NUMBA
from adesurf.lattice import hirzebruch_blowup, p2_blowup
from adesurf.linesroots import enumerate_classes, enumerate_lines, enumerate_roots

WORKLOADS = [
    ("lines dP7 (56)", lambda be: enumerate_lines(p2_blowup(7), backend=be)),
    ("lines dP8 (240)", lambda be: enumerate_lines(p2_blowup(8), backend=be)),
    ("lines dP8, widened box", lambda be: enumerate_lines(p2_blowup(8), bound_margin=2, backend=be)),
    ("roots E8 (240)", lambda be: enumerate_roots(p2_blowup(8), ("K",), backend=be).roots),
    ("roots D8 (112)", lambda be: enumerate_roots(hirzebruch_blowup(8), ("K", "f"), backend=be).roots),
    (
        "conics dP8 (x*x=0, x*K=-2)",
        lambda be: enumerate_classes(
            p2_blowup(8), 0, [(p2_blowup(8).K, -2)], backend=be
        ),
    ),
]


def time_backend(fn, backend: str, repeat: int) -> float:
    fn(backend)  # warm (JIT compile / cache load)
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(backend)
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    backends = ["numpy"] + (["numba"] if HAVE_NUMBA else [])
    if not HAVE_NUMBA:
        print("numba not importable; timing the numpy backend only\n")

    header = f"{'workload':<28}" + "".join(f"{be:>12}" for be in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for name, fn in WORKLOADS:
        results = {be: fn(be) for be in backends}
        first = next(iter(results.values()))
        for be, res in results.items():
            assert [tuple(c.coeffs) for c in res] == [
                tuple(c.coeffs) for c in first
            ], f"backend mismatch on {name} ({be})"
        row = f"{name:<28}"
        medians = {}
        for be in backends:
            medians[be] = time_backend(fn, be, args.repeat)
            row += f"{medians[be] * 1000:>10.2f}ms"
        if len(backends) == 2:
            row += f"{medians['numpy'] / medians['numba']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
