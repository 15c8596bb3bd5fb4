"""Move generation for both players and multiset adjacency.

Placements are canonical sorted tuples: a pair (a, b) with a <= b for the
facilitator, a sorted k-tuple for the divider.  Two multisets are adjacent
when some bijection maps every element to itself or a neighbor; per-agent
move products generate exactly the adjacent multisets, so explicit matching
is only needed when checking a claimed move (certificate verification).
"""

from __future__ import annotations

from itertools import product

from ..graphs import Graph


def canon_pair(a: int, b: int) -> tuple:
    return (a, b) if a <= b else (b, a)


def is_meet(f) -> bool:
    return f[0] == f[1]


def multiset_adjacent(g: Graph, xs, ys) -> bool:
    """Bijection test: every element of xs maps to an equal or adjacent element of ys.

    Decided by bipartite maximum matching (Kuhn's augmenting paths).
    """
    xs = sorted(xs)
    ys = sorted(ys)
    if len(xs) != len(ys):
        return False
    m = len(xs)
    allowed = [
        [j for j in range(m) if xs[i] == ys[j] or g.has_edge(xs[i], ys[j])]
        for i in range(m)
    ]
    match_of = [-1] * m  # ys slot -> xs slot

    def try_augment(i, visited):
        for j in allowed[i]:
            if j in visited:
                continue
            visited.add(j)
            if match_of[j] < 0 or try_augment(match_of[j], visited):
                match_of[j] = i
                return True
        return False

    matched = 0
    for i in range(m):
        if try_augment(i, set()):
            matched += 1
    return matched == m


def fac_moves(g: Graph, f, d) -> list:
    """All facilitator placements reachable from f while the divider sits on d.

    Staying put is always allowed; no agent may enter a divider vertex.
    Deduplicated, canonical (sorted) order.
    """
    blocked = set(d)
    a, b = f
    opts_a = [w for w in g.closed(a) if w not in blocked]
    opts_b = [w for w in g.closed(b) if w not in blocked]
    out = {canon_pair(x, y) for x in opts_a for y in opts_b}
    return sorted(out)


def div_moves(g: Graph, d, f) -> list:
    """All divider placements reachable from d while the facilitator sits on f."""
    blocked = set(f)
    options = []
    for v in d:
        opts = [w for w in g.closed(v) if w not in blocked]
        options.append(opts)
    out = {tuple(sorted(combo)) for combo in product(*options)}
    return sorted(out)


def compatible(f, d) -> bool:
    return not (set(f) & set(d))
