"""Divider strategy trees: extraction from solved games and certificate checking.

A strategy tree certifies a divider win for a bounded game: the root holds the
initial placement, every non-leaf branches over all legal facilitator moves
with one divider response each, and the facilitator pair stays split at every
node.  Checking those properties needs no game solving, so a tree is a cheap
certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..graphs import Graph
from . import backend
from .moves import canon_pair, compatible, div_moves, fac_moves, multiset_adjacent
from .solver import DEFAULT_BUDGET


@dataclass
class StrategyNode:
    f: tuple
    d: tuple
    children: list = field(default_factory=list)

    def to_obj(self):
        return {
            "f": list(self.f),
            "d": list(self.d),
            "children": [c.to_obj() for c in self.children],
        }

    @classmethod
    def from_obj(cls, obj):
        try:
            f = tuple(obj["f"])
            d = tuple(obj["d"])
            children = [cls.from_obj(c) for c in obj["children"]]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed strategy node: {exc}") from None
        if len(f) != 2:
            raise ValueError("strategy node f must have exactly two vertices")
        return cls(f, d, children)


def extract_divider_strategy(g: Graph, s: int, t: int, k: int, tau: int,
                             budget: int = DEFAULT_BUDGET) -> StrategyNode:
    """Build a winning strategy tree for the divider, height <= tau.

    Requires that the facilitator cannot win within tau moves; raises
    ValueError otherwise.  Choices are canonical-order deterministic: the
    first surviving initial placement, and at every node the first divider
    response keeping the facilitator short of a win.
    """
    if tau < 1:
        raise ValueError("tau must be >= 1")
    if s == t or g.has_edge(s, t):
        raise ValueError("facilitator wins outright; no divider strategy exists")
    game = backend.make_bounded_game(g, k, budget)
    start = canon_pair(s, t)
    others = [v for v in g.vertices() if v != s and v != t]
    from itertools import combinations_with_replacement

    root_d = None
    for d in combinations_with_replacement(others, k):
        if not game.wins(start, d, tau):
            root_d = d
            break
    if root_d is None:
        raise ValueError("facilitator wins within tau; no divider strategy exists")

    def grow(f, d, remaining):
        node = StrategyNode(f, d)
        if remaining == 0:
            return node
        for fp in fac_moves(g, f, d):
            assert fp[0] != fp[1], "a losing position cannot offer a meeting move"
            reply = None
            for dp in div_moves(g, d, fp):
                if not game.wins(fp, dp, remaining - 1):
                    reply = dp
                    break
            assert reply is not None, "losing position must have a surviving reply"
            node.children.append(grow(fp, reply, remaining - 1))
        return node

    return grow(start, root_d, tau)


def verify_strategy_tree(g: Graph, s: int, t: int, k: int, tau: int,
                         tree: StrategyNode):
    """Check every certificate invariant; returns (ok, reason).

    Checks: root position, multiset sizes and vertex ranges, split facilitator
    pair everywhere, adjacency of consecutive placements (via the bijection
    test), compatibility, completeness of the facilitator branching at every
    non-leaf, and height <= tau.
    """

    def fail(reason):
        return False, reason

    if tuple(sorted(tree.f)) != canon_pair(s, t):
        return fail(f"root facilitator pair {tree.f} is not ({s},{t})")

    def check(node, depth):
        f, d = tuple(node.f), tuple(node.d)
        if len(f) != 2:
            return fail(f"node at depth {depth}: facilitator pair has size {len(f)}")
        if len(d) != k:
            return fail(f"node at depth {depth}: divider placement has size {len(d)}, want {k}")
        for v in (*f, *d):
            if not (isinstance(v, int) and 0 <= v < g.n):
                return fail(f"node at depth {depth}: vertex {v!r} out of range")
        if f[0] == f[1]:
            return fail(f"node at depth {depth}: facilitator agents meet at {f[0]}")
        if not compatible(f, d):
            return fail(f"node at depth {depth}: placements overlap at {set(f) & set(d)}")
        if depth > tau:
            return fail(f"node at depth {depth} exceeds height {tau}")
        if depth == tau:
            if node.children:
                return fail(f"node at depth {depth} must be a leaf")
            return True, None
        legal = fac_moves(g, canon_pair(*f), tuple(sorted(d)))
        seen = {}
        for child in node.children:
            cf = canon_pair(*child.f)
            if cf in seen:
                return fail(f"node at depth {depth}: duplicate branch for move {cf}")
            seen[cf] = child
            if not multiset_adjacent(g, f, child.f):
                return fail(f"node at depth {depth}: facilitator move {f}->{tuple(child.f)} not adjacent")
            if not compatible(child.f, d):
                return fail(f"node at depth {depth}: move {cf} enters the divider placement")
            if not multiset_adjacent(g, d, child.d):
                return fail(f"node at depth {depth}: divider reply {d}->{tuple(child.d)} not adjacent")
        missing = [mv for mv in legal if mv not in seen]
        if missing:
            return fail(f"node at depth {depth}: unanswered facilitator moves {missing}")
        extra = [cf for cf in seen if cf not in set(legal)]
        if extra:
            return fail(f"node at depth {depth}: branches for illegal moves {extra}")
        for child in node.children:
            ok, reason = check(child, depth + 1)
            if not ok:
                return False, reason
        return True, None

    return check(tree, 0)
