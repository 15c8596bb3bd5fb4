"""Separator number against a brute-force subset oracle, plus witness checks."""

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rendezvous.forge import gen_clique_spider, gen_path_spider, random_connected_graph
from rendezvous.graphs import INF, Graph, bfs_distance, is_connected
from rendezvous.separators import separator_number
from tests.conftest import nonadjacent_pairs


def brute_separator(g, s, t):
    """Smallest vertex subset (avoiding s,t) whose removal disconnects s from t."""
    others = [v for v in range(g.n) if v not in (s, t)]
    for r in range(len(others) + 1):
        for sub in combinations(others, r):
            if bfs_distance(g, s, t, removed=sub) == INF:
                return r, set(sub)
    raise AssertionError("adjacent terminals have no separator")


def test_p3_single_cut_vertex(named):
    res = separator_number(named["P3"], 0, 2)
    assert res.value == 1 and res.witness == {1}


def test_adjacent_and_equal_are_infinite(named):
    assert separator_number(named["P2"], 0, 1).value == INF
    assert separator_number(named["P3"], 1, 1).value == INF


def test_clique_spider_lambda_is_p():
    for p in (2, 3, 4):
        g, s, t, _ = gen_clique_spider(p)
        assert separator_number(g, s, t).value == p


def test_path_spider_lambda_is_p():
    for p in (2, 3):
        g, s, t, _ = gen_path_spider(p)
        assert separator_number(g, s, t).value == p


@pytest.mark.parametrize("seed", range(25))
def test_matches_brute_force_on_random_graphs(seed):
    g = random_connected_graph(7, 0.35, seed)
    for s, t in nonadjacent_pairs(g):
        res = separator_number(g, s, t)
        want, _ = brute_separator(g, s, t)
        assert res.value == want
        # witness disconnects ...
        assert bfs_distance(g, s, t, removed=res.witness) == INF
        # ... and is minimal at desk scale
        if res.value <= 3:
            for sub in combinations(res.witness, len(res.witness) - 1):
                assert bfs_distance(g, s, t, removed=sub) != INF


def test_symmetry_and_degree_bound(atlas6):
    for g in atlas6:
        for s, t in nonadjacent_pairs(g):
            a = separator_number(g, s, t)
            b = separator_number(g, t, s)
            assert a.value == b.value
            assert a.value <= min(g.degree(s), g.degree(t))
