from .candidates import (
    CandidateNode,
    EnumerationBudgetExceeded,
    blocked_set_choices,
    consistent_child_labels,
    enumerate_candidates,
)
from .decomposition import NdDecomposition, neighborhood_decomposition
from .ilp import IlpBudgetExceeded, IlpSystem, build_ilp, ilp_feasible
from .movetree import MoveTreeNode, TreeBudgetExceeded, build_move_tree, count_nodes
from .solver import divider_wins_in_time_nd

__all__ = [
    "CandidateNode",
    "EnumerationBudgetExceeded",
    "IlpBudgetExceeded",
    "IlpSystem",
    "MoveTreeNode",
    "NdDecomposition",
    "TreeBudgetExceeded",
    "blocked_set_choices",
    "build_ilp",
    "build_move_tree",
    "consistent_child_labels",
    "count_nodes",
    "divider_wins_in_time_nd",
    "enumerate_candidates",
    "ilp_feasible",
    "neighborhood_decomposition",
]
