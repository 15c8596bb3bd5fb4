"""Rendezvous games with adversaries on graphs: exact solvers, structural fast
paths, a neighborhood-diversity FPT decision procedure, instance generators,
and a session service for interactive play."""

from .graphs import INF, Graph, GraphError, Instance, parse_instance, serialize_instance
from .separators import SeparatorResult, separator_number

__all__ = [
    "INF",
    "Graph",
    "GraphError",
    "Instance",
    "SeparatorResult",
    "parse_instance",
    "separator_number",
    "serialize_instance",
]
