"""Polynomial fast paths for the divider number, with a dispatching front door.

Each fast path reports a stable reason tag so callers (CLI, tests) can see
which rule fired.  Priority is fixed; under ``__debug__`` every applicable
path is evaluated and they must agree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .engine.solver import DEFAULT_BUDGET, divider_number
from .graphs import INF, Graph
from .ndfpt.decomposition import neighborhood_decomposition
from .recognize import is_chordal, is_p5_free
from .separators import separator_number

REASONS = (
    "adjacent-or-equal",
    "lambda-1",
    "chordal",
    "p5-free",
    "same-independent-module",
    "generic",
)


@dataclass(frozen=True)
class FastPathResult:
    value: float
    reason: str


def _applicable_paths(g: Graph, s: int, t: int):
    """Yield (reason, value) for every fast path that fires, in priority order."""
    if s == t or g.has_edge(s, t):
        yield FastPathResult(INF, "adjacent-or-equal")
        return
    lam = separator_number(g, s, t).value
    if lam == 1:
        yield FastPathResult(1, "lambda-1")
    if is_chordal(g)[0]:
        yield FastPathResult(lam, "chordal")
    if is_p5_free(g):
        yield FastPathResult(lam, "p5-free")
    nd = neighborhood_decomposition(g)
    i = nd.vertex_module[s]
    if i == nd.vertex_module[t] and nd.kinds[i] == "independent":
        yield FastPathResult(len(g.neighbors(s) & g.neighbors(t)), "same-independent-module")


def fast_divider_number(g: Graph, s: int, t: int) -> FastPathResult | None:
    """Highest-priority fast path result, or None when none applies."""
    hits = list(_applicable_paths(g, s, t))
    if not hits:
        return None
    if __debug__:
        values = {r.value for r in hits}
        assert len(values) == 1, f"fast paths disagree on ({s},{t}): {hits}"
    return hits[0]


def divider_number_auto(g: Graph, s: int, t: int, max_k: int | None = None,
                        budget: int = DEFAULT_BUDGET) -> FastPathResult:
    """Fast path when available, otherwise the generic game solver."""
    fast = fast_divider_number(g, s, t)
    if fast is not None:
        return fast
    return FastPathResult(divider_number(g, s, t, max_k, budget), "generic")
