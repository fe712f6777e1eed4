#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the two hot paths (group enumeration and bulk point application)
at a few field sizes and prints a comparison table.

    python3 benchmarks/bench_backends.py           # q up to 8
    python3 benchmarks/bench_backends.py --full    # adds q = 9 and 11
"""

import argparse
import time

import numpy as np

from laguerre_dd.backends import available_backends
from laguerre_dd.finite_field import make_field
from laguerre_dd.projectivities import group_order

SIZES = [(5, 1), (7, 1), (2, 3)]
FULL_SIZES = SIZES + [(3, 2), (11, 1)]


def time_once(fn):
    started = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - started


def bench_field(p, n, backends):
    field = make_field(p, n)
    q = field.q
    tabs = field.kernel_tables()
    pids = np.arange(min(q * q + q, 8), dtype=np.int32)  # a block-sized id list
    rows = {}
    enum_times = {}
    image_times = {}
    for name, mod in backends.items():
        rows[name], enum_times[name] = time_once(
            lambda m=mod: m.enumerate_group_rows(q, *tabs)
        )
        _, image_times[name] = time_once(
            lambda m=mod, r=rows[name]: m.point_images(q, *tabs, r, pids)
        )
    names = list(backends)
    if len(names) == 2:
        assert np.array_equal(rows[names[0]], rows[names[1]]), "backends disagree"
    return q, group_order(q), enum_times, image_times


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--full", action="store_true", help="include q = 9 and q = 11")
    args = parser.parse_args()

    backends = available_backends()
    print(f"available backends: {', '.join(backends)}")
    sizes = FULL_SIZES if args.full else SIZES

    header = f"{'q':>4}{'|Gamma|':>10}"
    for name in backends:
        header += f"{name + ' enum':>14}{name + ' apply':>14}"
    if len(backends) == 2:
        header += f"{'speedup enum':>14}{'speedup apply':>15}"
    print(header)
    for p, n in sizes:
        q, order, enum_times, image_times = bench_field(p, n, backends)
        line = f"{q:>4}{order:>10}"
        for name in backends:
            line += f"{enum_times[name]:>13.3f}s{image_times[name]:>13.3f}s"
        if len(backends) == 2:
            line += f"{enum_times['python'] / enum_times['c']:>13.1f}x"
            line += f"{image_times['python'] / image_times['c']:>14.1f}x"
        print(line)


if __name__ == "__main__":
    main()
