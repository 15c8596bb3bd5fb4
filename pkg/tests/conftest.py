"""Shared corpora: named small graphs and the connected-graph atlas."""

import pytest

from rendezvous.graphs import Graph, is_connected


def G(n, *edges):
    return Graph(n, list(edges))


@pytest.fixture(scope="session")
def named():
    return {
        "P2": G(2, (0, 1)),
        "P3": G(3, (0, 1), (1, 2)),
        "P4": G(4, (0, 1), (1, 2), (2, 3)),
        "P5": G(5, (0, 1), (1, 2), (2, 3), (3, 4)),
        "C4": G(4, (0, 1), (1, 2), (2, 3), (0, 3)),
        "C6": G(6, (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)),
        "C7": G(7, (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (0, 6)),
        "K3": G(3, (0, 1), (0, 2), (1, 2)),
        "K4": G(4, (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)),
        "K4-e": G(4, (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)),  # s=0, t=1 nonadjacent
        "K13": G(4, (0, 1), (0, 2), (0, 3)),
        "K23": G(5, (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)),
    }


def _atlas(max_n):
    import networkx as nx

    out = []
    for ng in nx.graph_atlas_g():
        n = ng.number_of_nodes()
        if n < 2 or n > max_n:
            continue
        g = Graph(n, [tuple(sorted(e)) for e in ng.edges()])
        if is_connected(g):
            out.append(g)
    return out


@pytest.fixture(scope="session")
def atlas6():
    """All 142 connected graphs on 2..6 vertices, one per isomorphism class."""
    return _atlas(6)


@pytest.fixture(scope="session")
def atlas7():
    return _atlas(7)


def nonadjacent_pairs(g):
    return [(s, t) for s in range(g.n) for t in range(s + 1, g.n)
            if not g.has_edge(s, t)]
