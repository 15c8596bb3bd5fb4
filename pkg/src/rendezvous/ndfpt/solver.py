"""Decision procedure for bounded games on graphs of small neighborhood
diversity: does the divider with k agents survive tau facilitator moves?

Trivial starts are answered directly; nonadjacent starts inside one
independent module reduce to counting the common neighborhood.  Otherwise the
answer is yes iff some reduced-strategy candidate admits a feasible agent
assignment, checked by exact integer feasibility.
"""

from __future__ import annotations

from concurrent.futures import FIRST_COMPLETED, ThreadPoolExecutor, wait

from ..graphs import Graph
from .candidates import enumerate_candidates
from .decomposition import neighborhood_decomposition
from .ilp import build_ilp, ilp_feasible
from .movetree import build_move_tree


def divider_wins_in_time_nd(g: Graph, s: int, t: int, k: int, tau: int,
                            tree_budget: int = 2_000_000,
                            enum_budget: int | None = 10_000_000,
                            ilp_budget: int | None = 1_000_000,
                            threads: int = 1,
                            diagnostics: dict | None = None) -> bool:
    if tau < 1:
        raise ValueError("tau must be >= 1")
    if k < 1:
        raise ValueError("k must be >= 1")
    if s == t or g.has_edge(s, t):
        return False
    nd = neighborhood_decomposition(g)
    if nd.vertex_module[s] == nd.vertex_module[t]:
        # same module and nonadjacent, hence an independent module: the game
        # is decided by whether every common neighbor can be guarded
        need = len(g.neighbors(s) & g.neighbors(t))
        if diagnostics is not None:
            diagnostics["method"] = "same-module-count"
            diagnostics["common_neighbors"] = need
        return k >= need
    tree = build_move_tree(nd, s, t, tau, tree_budget)

    if diagnostics is not None:
        diagnostics["method"] = "candidate-ilp"
        diagnostics["candidates_checked"] = 0

    def run_shard(idx: int, count: int):
        checked = 0
        for cand in enumerate_candidates(tree, nd, k, enum_budget, idx, count):
            checked += 1
            if ilp_feasible(build_ilp(cand, nd, k), ilp_budget):
                return checked, cand
        return checked, None

    if threads <= 1:
        checked, hit = run_shard(0, 1)
        if diagnostics is not None:
            diagnostics["candidates_checked"] = checked
            if hit is not None:
                diagnostics["feasible_candidate"] = hit.to_obj()
        return hit is not None

    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = {pool.submit(run_shard, i, threads) for i in range(threads)}
        hit = None
        checked = 0
        while futures:
            done, futures = wait(futures, return_when=FIRST_COMPLETED)
            for fut in done:
                got_checked, got = fut.result()
                checked += got_checked
                if got is not None and hit is None:
                    hit = got
                    for other in futures:
                        other.cancel()
            if hit is not None:
                break
        if diagnostics is not None:
            diagnostics["candidates_checked"] = checked
            if hit is not None:
                diagnostics["feasible_candidate"] = hit.to_obj()
        return hit is not None
