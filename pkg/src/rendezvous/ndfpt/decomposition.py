"""Neighborhood decomposition: partition into clique/independent modules.

Two vertices share a module iff their neighborhoods agree outside the pair
(N(u) minus v equals N(v) minus u).  The classes of that relation form the
unique minimum decomposition; any valid decomposition refines it.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..graphs import Graph


@dataclass(frozen=True)
class NdDecomposition:
    modules: tuple          # tuple of sorted vertex tuples
    kinds: tuple            # "clique" | "independent" per module
    sizes: tuple
    quotient_adj: tuple     # tuple of frozensets over module indices
    vertex_module: tuple    # vertex -> module index

    @property
    def width(self) -> int:
        return len(self.modules)

    def quotient_closed(self, i: int) -> tuple:
        return tuple(sorted(self.quotient_adj[i] | {i}))


def _same_module(g: Graph, u: int, v: int) -> bool:
    return (g.neighbors(u) - {v}) == (g.neighbors(v) - {u})


def neighborhood_decomposition(g: Graph) -> NdDecomposition:
    reps = []       # one representative per module found so far
    members = []
    for v in g.vertices():
        for i, r in enumerate(reps):
            if _same_module(g, v, r):
                members[i].append(v)
                break
        else:
            reps.append(v)
            members.append([v])
    order = sorted(range(len(reps)), key=lambda i: members[i][0])
    modules = tuple(tuple(sorted(members[i])) for i in order)
    kinds = []
    for mod in modules:
        if len(mod) == 1:
            kinds.append("clique")  # a single vertex is trivially a clique
        else:
            kinds.append("clique" if g.has_edge(mod[0], mod[1]) else "independent")
    vertex_module = [0] * g.n
    for i, mod in enumerate(modules):
        for v in mod:
            vertex_module[v] = i
    quotient = [set() for _ in modules]
    for i in range(len(modules)):
        for j in range(i + 1, len(modules)):
            if g.has_edge(modules[i][0], modules[j][0]):
                quotient[i].add(j)
                quotient[j].add(i)
    return NdDecomposition(
        modules=modules,
        kinds=tuple(kinds),
        sizes=tuple(len(m) for m in modules),
        quotient_adj=tuple(frozenset(s) for s in quotient),
        vertex_module=tuple(vertex_module),
    )
