"""Exact game solving: level tables, win queries, divider number, move hints.

The level table assigns every facilitator-to-move position the least number
of facilitator moves needed to force a meet (its level); positions with no
such bound are NotWinning, encoded as ``None`` in query results.  Tables are
built by repeated sweeps until fixpoint; arcs of the game graph are generated
on the fly and never stored.
"""

from __future__ import annotations

from itertools import combinations_with_replacement
from math import comb

from ..graphs import INF, Graph
from . import backend
from .moves import canon_pair, compatible, div_moves, fac_moves

DEFAULT_BUDGET = 5_000_000


class BudgetExceeded(RuntimeError):
    """A configured work budget would be exceeded; carries the estimate."""

    def __init__(self, stage: str, estimate, budget):
        super().__init__(f"{stage}: estimated {estimate} exceeds budget {budget}")
        self.stage = stage
        self.estimate = estimate
        self.budget = budget


class DividerNumberBracket(RuntimeError):
    """Search for the divider number stopped early; the answer lies in [lo, hi]."""

    def __init__(self, lo, hi, cause=None):
        super().__init__(f"divider number bracketed in [{lo}, {hi}]")
        self.lo = lo
        self.hi = hi
        self.cause = cause


def position_count(n: int, k: int) -> int:
    """Number of compatible (facilitator pair, divider multiset) positions."""
    return n * comb(n + k - 2, k) + comb(n, 2) * comb(n + k - 3, k)


class WinTable:
    """Frozen level table for one graph and agent count.

    ``level_of`` returns the least number of facilitator moves from a
    facilitator-to-move position, or None when the facilitator never wins.
    """

    def __init__(self, g: Graph, k: int, f_pairs, d_tuples, level, ell_star: int):
        self.g = g
        self.k = k
        self.f_pairs = f_pairs
        self.d_tuples = d_tuples
        self.level = level
        self.ell_star = ell_star
        self._f_index = {p: i for i, p in enumerate(f_pairs)}
        self._d_index = {t: i for i, t in enumerate(d_tuples)}

    def level_of(self, f, d):
        f = canon_pair(*f)
        d = tuple(sorted(d))
        lv = self.level[self._f_index[f], self._d_index[d]]
        if lv == -2:
            raise KeyError(f"incompatible position {f} / {d}")
        return None if lv == -1 else int(lv)

    def iter_positions(self):
        for fi, f in enumerate(self.f_pairs):
            row = self.level[fi]
            for di, d in enumerate(self.d_tuples):
                lv = row[di]
                if lv != -2:
                    yield f, d, (None if lv == -1 else int(lv))

    def to_csv(self) -> str:
        """Diagnostic dump, one line per compatible position: f1,f2,d...,level."""
        lines = []
        for f, d, lv in self.iter_positions():
            cells = [str(f[0]), str(f[1]), *map(str, d)]
            cells.append("notwinning" if lv is None else str(lv))
            lines.append(",".join(cells))
        return "\n".join(lines) + "\n"


def winning_sets(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> WinTable:
    """Build the full level table by backward induction."""
    estimate = position_count(g.n, k)
    if estimate > budget:
        raise BudgetExceeded("winning-sets", estimate, budget)
    f_pairs, d_tuples, level, ell_star = backend.solve_table(g.n, k, g._closed, budget)
    return WinTable(g, k, f_pairs, d_tuples, level, ell_star)


def _initial_placements(g: Graph, s: int, t: int, k: int):
    others = [v for v in g.vertices() if v != s and v != t]
    return combinations_with_replacement(others, k)


def facilitator_wins(g: Graph, s: int, t: int, k: int, budget: int = DEFAULT_BUDGET,
                     table: WinTable | None = None) -> bool:
    """True iff the facilitator forces a meet against every initial placement."""
    if s == t or g.has_edge(s, t):
        return True
    if table is None:
        table = winning_sets(g, k, budget)
    f = canon_pair(s, t)
    return all(table.level_of(f, d) is not None for d in _initial_placements(g, s, t, k))


def facilitator_wins_in(g: Graph, s: int, t: int, k: int, tau: int,
                        budget: int = DEFAULT_BUDGET, method: str = "minimax",
                        table: WinTable | None = None) -> bool:
    """True iff the facilitator forces a meet within tau moves.

    ``minimax`` (default) runs a depth-limited search from the start position
    and never materializes the position space; ``table`` reuses or builds the
    full level table.
    """
    if tau < 1:
        raise ValueError("tau must be >= 1")
    if s == t or g.has_edge(s, t):
        return True
    if method == "table" or table is not None:
        if table is None:
            table = winning_sets(g, k, budget)
        f = canon_pair(s, t)
        return all(
            (lv := table.level_of(f, d)) is not None and lv <= tau
            for d in _initial_placements(g, s, t, k)
        )
    game = backend.make_bounded_game(g, k, budget)
    f = canon_pair(s, t)
    return all(game.wins(f, d, tau) for d in _initial_placements(g, s, t, k))


def one_step_win(g: Graph, s: int, t: int, k: int) -> bool:
    """Meet in a single move: equal, adjacent, or more common neighbors than agents."""
    if s == t or g.has_edge(s, t):
        return True
    return len(g.neighbors(s) & g.neighbors(t)) > k


def divider_number(g: Graph, s: int, t: int, max_k: int | None = None,
                   budget: int = DEFAULT_BUDGET):
    """Least agent count with which the divider wins, INF if none exists.

    Ascends k from 1; the separator number is always a valid upper bound, so
    the search terminates.  A budget failure raises DividerNumberBracket with
    the interval still open.
    """
    from ..separators import separator_number

    if s == t or g.has_edge(s, t):
        return INF
    lam = separator_number(g, s, t).value
    assert lam != INF
    hi = int(lam) if max_k is None else min(max_k, int(lam))
    for k in range(1, hi + 1):
        try:
            if not facilitator_wins(g, s, t, k, budget):
                return k
        except BudgetExceeded as exc:
            raise DividerNumberBracket(k, int(lam), exc) from exc
    if hi < lam:
        raise DividerNumberBracket(hi + 1, int(lam))
    raise AssertionError("divider must win with a full separator occupied")


def best_moves(g: Graph, table: WinTable, f, d, turn: str):
    """Annotated optimal moves from a position, deterministic canonical order.

    Facilitator entries are (pair, worst-case level after the divider's best
    reply); sorted best first, NotWinning (None) last.  Divider entries are
    (placement, resulting level); sorted best first, NotWinning first.
    """
    f = canon_pair(*f)
    d = tuple(sorted(d))
    if f[0] == f[1]:
        return []
    if turn == "facilitator":
        out = []
        for fp in fac_moves(g, f, d):
            if fp[0] == fp[1]:
                worst = 0
            else:
                worst = 0
                for dp in div_moves(g, d, fp):
                    lv = table.level_of(fp, dp)
                    if lv is None:
                        worst = None
                        break
                    worst = max(worst, lv)
            out.append((fp, worst))
        out.sort(key=lambda mv: ((1, 0) if mv[1] is None else (0, mv[1]), mv[0]))
        return out
    if turn == "divider":
        out = [(dp, table.level_of(f, dp)) for dp in div_moves(g, d, f)]
        out.sort(key=lambda mv: ((0, 0) if mv[1] is None else (1, -mv[1]), mv[0]))
        return out
    raise ValueError(f"unknown turn {turn!r}")
