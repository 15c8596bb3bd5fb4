"""Reduced-strategy candidates: move-tree subtrees decorated with blocked modules.

A candidate keeps, per non-leaf node, a set of fully-blocked modules I_v.
Given I_v, projection consistency forces the kept children exactly: the labels
{i, j} with i, j ranging over the closed quotient neighborhoods of the node's
pair minus I_v.  Candidates in which the facilitator can collapse both agents
into one module (a same-module child label) are discarded, as are blocked
sets that cannot be realized with k agents.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ..engine.solver import BudgetExceeded
from .decomposition import NdDecomposition
from .movetree import MoveTreeNode


class EnumerationBudgetExceeded(BudgetExceeded):
    def __init__(self, count, budget):
        super().__init__("candidate-enumeration", count, budget)


@dataclass
class CandidateNode:
    label: tuple
    blocked: frozenset
    children: list = field(default_factory=list)

    def to_obj(self):
        return {
            "label": list(self.label),
            "blocked": sorted(self.blocked),
            "children": [c.to_obj() for c in self.children],
        }


def iter_nodes(root: CandidateNode):
    stack = [root]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(node.children))


def blocked_set_choices(nd: NdDecomposition, label, k: int) -> list:
    """Blocked-set options at a node, canonical order (by size, then lex).

    A module the facilitator occupies can never be fully blocked, and the
    blocked modules cannot hold more than k agents in total; both prunes drop
    only provably infeasible assignments.
    """
    candidates = [i for i in range(nd.width) if i not in label and nd.sizes[i] <= k]
    out = []
    for r in range(len(candidates) + 1):
        for combo in combinations(candidates, r):
            if sum(nd.sizes[i] for i in combo) <= k:
                out.append(frozenset(combo))
    return out


def consistent_child_labels(nd: NdDecomposition, label, blocked) -> list | None:
    """Exact child-label set under a blocked assignment, or None if it would
    contain a same-module pair (the divider cannot allow those)."""
    p, q = label
    opts_p = [i for i in nd.quotient_closed(p) if i not in blocked]
    opts_q = [j for j in nd.quotient_closed(q) if j not in blocked]
    labels = set()
    for i in opts_p:
        for j in opts_q:
            if i == j:
                return None
            labels.add((i, j) if i <= j else (j, i))
    return sorted(labels)


class _Budget:
    __slots__ = ("count", "limit")

    def __init__(self, limit):
        self.count = 0
        self.limit = limit

    def tick(self):
        self.count += 1
        if self.limit is not None and self.count > self.limit:
            raise EnumerationBudgetExceeded(self.count, self.limit)


def enumerate_candidates(tree: MoveTreeNode, nd: NdDecomposition, k: int,
                         budget: int | None = 10_000_000,
                         shard_index: int = 0, shard_count: int = 1):
    """Yield every candidate rooted at ``tree``, deterministically ordered.

    Sharding partitions the stream by the root's blocked-set choice, so shards
    are disjoint, cover everything, and can run in parallel.
    """
    counter = _Budget(budget)
    choice_memo = {}

    def choices(label):
        out = choice_memo.get(label)
        if out is None:
            out = choice_memo[label] = blocked_set_choices(nd, label, k)
        return out

    def expand(node: MoveTreeNode, at_root: bool):
        if not node.children:  # depth == tau
            counter.tick()
            yield CandidateNode(node.label, frozenset())
            return
        by_label = {c.label: c for c in node.children}
        for idx, blocked in enumerate(choices(node.label)):
            if at_root and idx % shard_count != shard_index:
                continue
            labels = consistent_child_labels(nd, node.label, blocked)
            if labels is None:
                continue
            kept = [by_label[lab] for lab in labels]

            def combos(i):
                if i == len(kept):
                    yield []
                    return
                for head in expand(kept[i], False):
                    for rest in combos(i + 1):
                        yield [head, *rest]

            for children in combos(0):
                counter.tick()
                yield CandidateNode(node.label, blocked, children)

    return expand(tree, True)
