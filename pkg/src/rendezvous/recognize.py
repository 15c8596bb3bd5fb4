"""Graph-class recognizers used by the polynomial fast paths.

Chordality goes through lexicographic BFS and the standard perfect-elimination
check.  P5-freeness is decided by enumerating 5-vertex subsets, which is all
the sizes handled here call for.
"""

from __future__ import annotations

from itertools import combinations

from .graphs import Graph


def lex_bfs(g: Graph) -> list:
    """Lexicographic BFS order via partition refinement."""
    order = []
    # sequence of cells; each cell a list of unvisited vertices
    cells = [list(g.vertices())]
    while cells:
        cell = cells[0]
        v = cell.pop(0)
        if not cell:
            cells.pop(0)
        order.append(v)
        nbrs = g.neighbors(v)
        new_cells = []
        for c in cells:
            hit = [x for x in c if x in nbrs]
            miss = [x for x in c if x not in nbrs]
            if hit:
                new_cells.append(hit)
            if miss:
                new_cells.append(miss)
        cells = new_cells
    return order


def is_chordal(g: Graph):
    """Decide chordality; on success also return a perfect elimination ordering.

    A LexBFS order reversed is a perfect elimination ordering iff the graph is
    chordal: for each vertex, its earlier neighbors must all be adjacent to the
    latest of them (the classic parent check).
    """
    order = lex_bfs(g)
    peo = list(reversed(order))  # eliminate in this order
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [u for u in g.neighbors(v) if pos[u] > pos[v]]
        if not later:
            continue
        parent = min(later, key=lambda u: pos[u])
        rest = [u for u in later if u != parent]
        for u in rest:
            if not g.has_edge(parent, u):
                return False, None
    return True, peo


def _is_induced_path5(g: Graph, vs) -> bool:
    # exactly 4 edges arranged in a path: degree sequence 1,1,2,2,2 within vs
    sub = {v: [u for u in vs if u != v and g.has_edge(u, v)] for v in vs}
    degs = sorted(len(a) for a in sub.values())
    if degs != [1, 1, 2, 2, 2]:
        return False
    # walk from an endpoint; a path visits all five vertices
    start = next(v for v in vs if len(sub[v]) == 1)
    seen = {start}
    cur = start
    while True:
        nxt = [u for u in sub[cur] if u not in seen]
        if not nxt:
            break
        cur = nxt[0]
        seen.add(cur)
    return len(seen) == 5


def is_p5_free(g: Graph) -> bool:
    """True iff the graph has no induced path on five vertices."""
    if g.n < 5:
        return True
    for vs in combinations(g.vertices(), 5):
        if _is_induced_path5(g, vs):
            return False
    return True
