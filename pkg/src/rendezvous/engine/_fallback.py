"""Pure-Python solver kernels: fixpoint level table and depth-limited search.

Same contracts as the compiled kernels in ``_speedups.pyx``; this module is
the import-time fallback and the reference the compiled path is benchmarked
and tested against.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

import numpy as np

BACKEND_NAME = "pure"


def _enumerate_placements(n: int, k: int):
    f_pairs = [(a, b) for a in range(n) for b in range(a, n)]
    d_tuples = list(combinations_with_replacement(range(n), k))
    return f_pairs, d_tuples


def solve_table(n: int, k: int, closed, budget_positions=None):
    """Backward-induction level table over all compatible positions.

    Returns (f_pairs, d_tuples, level, ell_star) where level[fi, di] is -2 for
    incompatible pairs, -1 for positions the facilitator never wins, else the
    least number of facilitator moves needed.  ell_star is the first sweep
    index that added nothing (the fixpoint).
    """
    f_pairs, d_tuples = _enumerate_placements(n, k)
    f_masks = [(1 << a) | (1 << b) for a, b in f_pairs]
    d_masks = [0] * len(d_tuples)
    for i, d in enumerate(d_tuples):
        m = 0
        for v in d:
            m |= 1 << v
        d_masks[i] = m
    f_index = {p: i for i, p in enumerate(f_pairs)}
    d_index = {t: i for i, t in enumerate(d_tuples)}

    nf, nd = len(f_pairs), len(d_tuples)
    level = np.full((nf, nd), -1, dtype=np.int16)
    for fi, (a, b) in enumerate(f_pairs):
        fm = f_masks[fi]
        for di in range(nd):
            if fm & d_masks[di]:
                level[fi, di] = -2
            elif a == b:
                level[fi, di] = 0

    closed_sets = [set(c) for c in closed]

    def div_responses(d, f_set):
        options = [[w for w in closed[v] if w not in f_set] for v in d]
        # odometer product; dedup is unnecessary for a universal check
        idx = [0] * k
        while True:
            yield tuple(sorted(options[i][idx[i]] for i in range(k)))
            j = k - 1
            while j >= 0:
                idx[j] += 1
                if idx[j] < len(options[j]):
                    break
                idx[j] = 0
                j -= 1
            if j < 0:
                return

    ell = 0
    while True:
        ell += 1
        changed = 0
        for fi, (a, b) in enumerate(f_pairs):
            if a == b:
                continue
            row = level[fi]
            pending = np.nonzero(row == -1)[0]
            if len(pending) == 0:
                continue
            for di in pending:
                d = d_tuples[di]
                dset = set(d)
                opts_a = [w for w in closed[a] if w not in dset]
                opts_b = [w for w in closed[b] if w not in dset]
                won = False
                for x in opts_a:
                    if won:
                        break
                    for y in opts_b:
                        if x == y:
                            won = True  # meeting move
                            break
                        fj = f_index[(x, y) if x <= y else (y, x)]
                        ok = True
                        for d2 in div_responses(d, (x, y)):
                            lv = level[fj, d_index[d2]]
                            if lv < 0 or lv >= ell:
                                ok = False
                                break
                        if ok:
                            won = True
                            break
                if won:
                    level[fi, di] = ell
                    changed += 1
        if changed == 0:
            return f_pairs, d_tuples, level, ell


class BoundedGame:
    """Depth-limited minimax with memoization on (position, remaining moves).

    Decides whether the facilitator, to move, can force a meet within r moves.
    Does not materialize the position space, so it scales to the large shallow
    instances the reductions produce.
    """

    def __init__(self, g, k: int, node_budget=None):
        self.g = g
        self.k = k
        self.closed = g._closed
        self.memo = {}
        self.nodes = 0
        self.node_budget = node_budget

    def wins(self, f, d, r: int) -> bool:
        a, b = f
        if a == b:
            return True
        if r <= 0:
            return False
        key = (a, b, d, r)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        self.nodes += 1
        if self.node_budget is not None and self.nodes > self.node_budget:
            from .solver import BudgetExceeded

            raise BudgetExceeded("bounded-search", self.nodes, self.node_budget)
        closed = self.closed
        dset = set(d)
        opts_a = [w for w in closed[a] if w not in dset]
        opts_b = [w for w in closed[b] if w not in dset]
        result = False
        moved = set()
        for x in opts_a:
            if result:
                break
            for y in opts_b:
                if x == y:
                    result = True  # meet within this move
                    break
                fp = (x, y) if x <= y else (y, x)
                if fp in moved:
                    continue
                moved.add(fp)
                fset = set(fp)
                options = [[w for w in closed[v] if w not in fset] for v in d]
                all_lose = True
                idx = [0] * self.k
                while True:
                    d2 = tuple(sorted(options[i][idx[i]] for i in range(self.k)))
                    if not self.wins(fp, d2, r - 1):
                        all_lose = False
                        break
                    j = self.k - 1
                    while j >= 0:
                        idx[j] += 1
                        if idx[j] < len(options[j]):
                            break
                        idx[j] = 0
                        j -= 1
                    if j < 0:
                        break
                if all_lose:
                    result = True
                    break
        self.memo[key] = result
        return result
