#!/usr/bin/env python3
"""Benchmark the compiled search kernels against their pure-Python twins.

Workloads are the package's own hot loops: the BFS linkage closure and the
oracle's literal chain enumeration, over grids of integral weights.

    python benchmarks/bench_kernels.py [--quick]
"""

from __future__ import annotations

import argparse
import itertools
import time

from linkage_kit import _purekernel, build_root_system
from linkage_kit.rootsys import root_tables
from linkage_kit.weights_chars import EmbeddingContext, WeightL, integer_encoding

try:
    from linkage_kit import _speedups
except ImportError:
    _speedups = None


def grid_args(name, embeddings, lo, hi):
    rs = build_root_system(name)
    ctx = EmbeddingContext(rs, embeddings)
    coroots, fund, heights = root_tables(rs)
    out = []
    for flat in itertools.product(range(lo, hi + 1), repeat=rs.rank * embeddings):
        rows = tuple(flat[s * rs.rank : (s + 1) * rs.rank] for s in range(embeddings))
        dens, start = integer_encoding(WeightL(ctx, rows))
        out.append((embeddings, rs.rank, coroots, fund, heights, dens, start))
    return out


def bench_bfs(kernel, jobs):
    t0 = time.perf_counter()
    visited = 0
    for args in jobs:
        states, _, _ = kernel.linkage_bfs(*args, False, 10**6)
        visited += len(states)
    return time.perf_counter() - t0, visited


def bench_chains(kernel, jobs, depth):
    t0 = time.perf_counter()
    visited = 0
    for args in jobs:
        visited += len(kernel.chain_endpoints(*args, False, depth))
    return time.perf_counter() - t0, visited


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller grids")
    opts = parser.parse_args()

    hi = 2 if opts.quick else 3
    workloads = [
        ("bfs  A_2 x2", "bfs", grid_args("A_2", 2, -hi, hi), None),
        ("bfs  B_2 x2", "bfs", grid_args("B_2", 2, -hi, hi), None),
        ("bfs  A_3 x1", "bfs", grid_args("A_3", 1, -2, 2), None),
        ("dfs  A_2 x2", "dfs", grid_args("A_2", 2, -hi, hi), 8),
        ("dfs  B_2 x1", "dfs", grid_args("B_2", 1, -hi, hi), 10),
    ]

    print(f"{'workload':<14} {'jobs':>6} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}")
    for label, kind, jobs, depth in workloads:
        if kind == "bfs":
            pure_t, pure_n = bench_bfs(_purekernel, jobs)
        else:
            pure_t, pure_n = bench_chains(_purekernel, jobs, depth)
        if _speedups is None:
            print(f"{label:<14} {len(jobs):>6} {pure_t:>10.3f} {'n/a':>13} {'n/a':>8}")
            continue
        if kind == "bfs":
            fast_t, fast_n = bench_bfs(_speedups, jobs)
        else:
            fast_t, fast_n = bench_chains(_speedups, jobs, depth)
        assert pure_n == fast_n, f"kernel disagreement on {label}: {pure_n} vs {fast_n}"
        print(
            f"{label:<14} {len(jobs):>6} {pure_t:>10.3f} {fast_t:>13.3f} {pure_t / fast_t:>7.1f}x"
        )
    if _speedups is None:
        print("\ncompiled extension not built; showing pure-Python times only")


if __name__ == "__main__":
    main()
