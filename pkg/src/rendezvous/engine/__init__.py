from .backend import BACKEND_NAME
from .moves import canon_pair, compatible, div_moves, fac_moves, multiset_adjacent
from .solver import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    DividerNumberBracket,
    WinTable,
    best_moves,
    divider_number,
    facilitator_wins,
    facilitator_wins_in,
    one_step_win,
    position_count,
    winning_sets,
)
from .strategy import StrategyNode, extract_divider_strategy, verify_strategy_tree

__all__ = [
    "BACKEND_NAME",
    "DEFAULT_BUDGET",
    "BudgetExceeded",
    "DividerNumberBracket",
    "StrategyNode",
    "WinTable",
    "best_moves",
    "canon_pair",
    "compatible",
    "div_moves",
    "divider_number",
    "extract_divider_strategy",
    "fac_moves",
    "facilitator_wins",
    "facilitator_wins_in",
    "multiset_adjacent",
    "one_step_win",
    "position_count",
    "verify_strategy_tree",
    "winning_sets",
]
