"""Immutable undirected graphs, the instance JSON format, and basic traversals.

Vertices are dense integers 0..n-1.  Edges are stored canonically as (min, max)
pairs in lexicographic order, which makes serialization reproducible and the
round trip serialize -> parse -> serialize an identity.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass

INF = math.inf


class GraphError(ValueError):
    """Invalid graph or instance input.  ``code`` is a stable machine tag."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


class Graph:
    """Finite undirected simple graph; no loops, no multi-edges, immutable."""

    __slots__ = ("n", "edges", "_adj", "_closed", "_masks")

    def __init__(self, n: int, edges):
        if not isinstance(n, int) or n < 1:
            raise GraphError("bad-n", f"vertex count must be a positive integer, got {n!r}")
        seen = set()
        canon = []
        adj = [set() for _ in range(n)]
        for e in edges:
            try:
                u, v = e
            except (TypeError, ValueError):
                raise GraphError("bad-edge", f"edge {e!r} is not a pair") from None
            if not (isinstance(u, int) and isinstance(v, int)):
                raise GraphError("bad-edge", f"edge {e!r} has non-integer endpoints")
            if u < 0 or u >= n or v < 0 or v >= n:
                raise GraphError("vertex-out-of-range", f"edge {e!r} leaves 0..{n - 1}")
            if u == v:
                raise GraphError("self-loop", f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise GraphError("duplicate-edge", f"duplicate edge ({u},{v})")
            seen.add((u, v))
            canon.append((u, v))
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.edges = tuple(sorted(canon))
        self._adj = tuple(frozenset(s) for s in adj)
        # closed neighborhoods in sorted order: the per-agent move options
        self._closed = tuple(tuple(sorted(adj[v] | {v})) for v in range(n))
        self._masks = tuple(
            sum(1 << u for u in adj[v]) | (1 << v) for v in range(n)
        )

    def neighbors(self, v: int) -> frozenset:
        return self._adj[v]

    def closed(self, v: int) -> tuple:
        """Sorted tuple of N[v], i.e. v plus its neighbors."""
        return self._closed[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"


def bfs_distance(g: Graph, u: int, v: int, removed=()) -> float:
    """Length of a shortest u-v path in g minus ``removed``; INF if none exists."""
    removed = set(removed)
    if u in removed or v in removed:
        raise ValueError("endpoint in removed set")
    if u == v:
        return 0
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if y in removed or y in dist:
                continue
            dist[y] = dist[x] + 1
            if y == v:
                return dist[y]
            queue.append(y)
    return INF


def is_connected(g: Graph) -> bool:
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == g.n


@dataclass(frozen=True)
class Instance:
    """One game instance: graph, the two start vertices, agent count, step bound."""

    graph: Graph
    s: int
    t: int
    k: int
    tau: int | None = None


def _require_int(obj, key, *, optional=False):
    if key not in obj:
        if optional:
            return None
        raise GraphError("missing-field", f"missing field {key!r}")
    val = obj[key]
    if not isinstance(val, int) or isinstance(val, bool):
        raise GraphError("bad-field", f"field {key!r} must be an integer, got {val!r}")
    return val


def parse_graph_obj(obj) -> Graph:
    if not isinstance(obj, dict):
        raise GraphError("malformed-json", "top-level value must be an object")
    n = _require_int(obj, "n")
    edges = obj.get("edges")
    if not isinstance(edges, list):
        raise GraphError("missing-field", "missing or non-list field 'edges'")
    return Graph(n, edges)


def parse_graph(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError("malformed-json", f"invalid JSON: {exc}") from None
    return parse_graph_obj(obj)


def parse_instance(text: str) -> Instance:
    """Parse and validate the instance JSON format.

    Rejects self-loops, duplicate edges, out-of-range ids, and (with its own
    error code) disconnected graphs, since the solvers assume connectivity.
    The optional "layout" key emitted by generators is tolerated and ignored.
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError("malformed-json", f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise GraphError("malformed-json", "top-level value must be an object")
    g = parse_graph_obj(obj)
    s = _require_int(obj, "s")
    t = _require_int(obj, "t")
    k = _require_int(obj, "k")
    tau = _require_int(obj, "tau", optional=True)
    for name, v in (("s", s), ("t", t)):
        if v < 0 or v >= g.n:
            raise GraphError("vertex-out-of-range", f"{name}={v} leaves 0..{g.n - 1}")
    if k < 1:
        raise GraphError("bad-k", f"agent count k must be >= 1, got {k}")
    if tau is not None and tau < 1:
        raise GraphError("bad-tau", f"step bound tau must be >= 1, got {tau}")
    if not is_connected(g):
        raise GraphError("disconnected", "graph is not connected")
    return Instance(g, s, t, k, tau)


def instance_to_obj(inst: Instance, layout=None) -> dict:
    obj = {
        "n": inst.graph.n,
        "edges": [list(e) for e in inst.graph.edges],
        "s": inst.s,
        "t": inst.t,
        "k": inst.k,
    }
    if inst.tau is not None:
        obj["tau"] = inst.tau
    if layout is not None:
        obj["layout"] = layout
    return obj


def serialize_instance(inst: Instance, layout=None) -> str:
    """Canonical JSON text: sorted keys, no whitespace, sorted edge list."""
    return json.dumps(instance_to_obj(inst, layout), sort_keys=True, separators=(",", ":"))
