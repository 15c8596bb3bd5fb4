"""Module-level move tree: all facilitator trajectories between modules.

Nodes carry an unordered pair of module indices; children of {p, q} are all
pairs reachable under closed-neighborhood moves in the quotient graph.  The
node count is bounded by C(width+1, 2) ** (tau+1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from ..engine.solver import BudgetExceeded
from .decomposition import NdDecomposition


class TreeBudgetExceeded(BudgetExceeded):
    def __init__(self, estimate, budget):
        super().__init__("move-tree", estimate, budget)


@dataclass
class MoveTreeNode:
    label: tuple                    # (p, q) with p <= q
    depth: int
    children: list = field(default_factory=list)


def child_labels(nd: NdDecomposition, label) -> list:
    """All labels adjacent to this one under closed-neighborhood quotient moves."""
    p, q = label
    out = set()
    for pp in nd.quotient_closed(p):
        for qq in nd.quotient_closed(q):
            out.add((pp, qq) if pp <= qq else (qq, pp))
    return sorted(out)


def build_move_tree(nd: NdDecomposition, s: int, t: int, tau: int,
                    node_budget: int = 2_000_000) -> MoveTreeNode:
    ms, mt = nd.vertex_module[s], nd.vertex_module[t]
    if ms == mt:
        raise ValueError("start vertices share a module; handled by the caller")
    if tau < 1:
        raise ValueError("tau must be >= 1")
    bound = comb(nd.width + 1, 2) ** (tau + 1)
    if bound > node_budget:
        raise TreeBudgetExceeded(bound, node_budget)
    root = MoveTreeNode((ms, mt) if ms <= mt else (mt, ms), 0)
    count = 1
    frontier = [root]
    for depth in range(1, tau + 1):
        nxt = []
        for node in frontier:
            for lab in child_labels(nd, node.label):
                child = MoveTreeNode(lab, depth)
                node.children.append(child)
                nxt.append(child)
                count += 1
                if count > node_budget:
                    raise TreeBudgetExceeded(count, node_budget)
        frontier = nxt
    assert count <= bound
    return root


def count_nodes(root: MoveTreeNode) -> int:
    total = 1
    stack = [root]
    while stack:
        node = stack.pop()
        for c in node.children:
            total += 1
            stack.append(c)
    return total
