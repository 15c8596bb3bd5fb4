"""Kernel backend selection: compiled extension when available, else pure Python.

Set RENDEZVOUS_PURE=1 to force the pure kernels (used by the benchmark and by
tests that pin down backend equivalence).  The compiled kernels only handle
graphs small enough for 64-bit occupancy masks; calls outside that envelope
fall back per call.
"""

from __future__ import annotations

import os

from . import _fallback

if os.environ.get("RENDEZVOUS_PURE"):
    _compiled = None
else:
    try:
        from . import _speedups as _compiled
    except ImportError:
        _compiled = None

BACKEND_NAME = _compiled.BACKEND_NAME if _compiled is not None else _fallback.BACKEND_NAME


def solve_table(n, k, closed, budget_positions=None):
    if _compiled is not None:
        try:
            return _compiled.solve_table(n, k, closed, budget_positions)
        except ValueError:
            pass
    return _fallback.solve_table(n, k, closed, budget_positions)


def make_bounded_game(g, k, node_budget=None):
    if _compiled is not None:
        try:
            return _compiled.BoundedGame(g, k, node_budget)
        except ValueError:
            pass
    return _fallback.BoundedGame(g, k, node_budget)
