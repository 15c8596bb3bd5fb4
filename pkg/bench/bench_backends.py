#!/usr/bin/env python3
"""Benchmark the compiled solver kernels against the pure-Python fallback.

Run from the repo root after an editable install:

    python bench/bench_backends.py

Builds level tables and runs bounded searches on a fixed instance ladder with
both backends, verifies they agree, and prints a timing table.
"""

import time

import numpy as np

from rendezvous.engine import _fallback
from rendezvous.forge import gen_clique_spider, gen_path_spider, random_connected_graph

try:
    from rendezvous.engine import _speedups
except ImportError:
    _speedups = None


def time_table(mod, g, k):
    t0 = time.perf_counter()
    f_pairs, d_tuples, level, ell = mod.solve_table(g.n, k, g._closed)
    return time.perf_counter() - t0, (np.asarray(level), ell)


def time_bounded(mod, g, k, tau):
    from itertools import combinations_with_replacement

    t0 = time.perf_counter()
    game = mod.BoundedGame(g, k)
    outcomes = []
    others = [v for v in g.vertices() if v > 1]
    for d in combinations_with_replacement(others, k):
        outcomes.append(game.wins((0, 1), d, tau))
    return time.perf_counter() - t0, outcomes


def main():
    cases = []
    for p in (2, 3, 4):
        g, s, t, _ = gen_clique_spider(p)
        cases.append((f"clique-spider p={p} k=2 table", "table", g, 2, None))
    g, s, t, _ = gen_path_spider(3)
    cases.append(("path-spider p=3 k=2 table", "table", g, 2, None))
    g = random_connected_graph(16, 0.25, seed=7)
    cases.append(("random n=16 k=2 tau=3 bounded", "bounded", g, 2, 3))

    print(f"{'case':40s} {'pure':>10s} {'compiled':>10s} {'speedup':>8s}")
    for name, kind, g, k, tau in cases:
        if kind == "table":
            t_pure, res_pure = time_table(_fallback, g, k)
            if _speedups is not None:
                t_fast, res_fast = time_table(_speedups, g, k)
                assert (res_pure[0] == res_fast[0]).all() and res_pure[1] == res_fast[1]
        else:
            t_pure, res_pure = time_bounded(_fallback, g, k, tau)
            if _speedups is not None:
                t_fast, res_fast = time_bounded(_speedups, g, k, tau)
                assert res_pure == res_fast
        if _speedups is None:
            print(f"{name:40s} {t_pure:9.3f}s {'n/a':>10s}")
        else:
            print(f"{name:40s} {t_pure:9.3f}s {t_fast:9.3f}s {t_pure / t_fast:7.1f}x")
    if _speedups is None:
        print("compiled backend unavailable; showing pure timings only")


if __name__ == "__main__":
    main()
