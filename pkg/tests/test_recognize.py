"""Recognizers against brute-force induced-subgraph oracles."""

from itertools import combinations, permutations

import pytest

from rendezvous.forge import gen_clique_spider, gen_path_spider, random_connected_graph
from rendezvous.graphs import Graph
from rendezvous.recognize import is_chordal, is_p5_free


def brute_has_long_induced_cycle(g):
    """Any induced cycle on >= 4 vertices, by exhaustive subset + cycle check."""
    for r in range(4, g.n + 1):
        for vs in combinations(range(g.n), r):
            degs = [sum(1 for u in vs if u != v and g.has_edge(u, v)) for v in vs]
            if any(d != 2 for d in degs):
                continue
            # all degree two within the subset: connected <=> a single cycle
            seen = {vs[0]}
            frontier = [vs[0]]
            while frontier:
                x = frontier.pop()
                for u in vs:
                    if u not in seen and g.has_edge(u, x):
                        seen.add(u)
                        frontier.append(u)
            if len(seen) == r:
                return True
    return False


def brute_has_induced_p5(g):
    for vs in combinations(range(g.n), 5):
        for perm in permutations(vs):
            path_edges = {(min(a, b), max(a, b)) for a, b in zip(perm, perm[1:])}
            want = all(g.has_edge(a, b) for a, b in path_edges)
            others_ok = all(
                g.has_edge(a, b) == ((min(a, b), max(a, b)) in path_edges)
                for a, b in combinations(vs, 2)
            )
            if want and others_ok:
                return True
    return False


def all_labeled_graphs(n):
    pool = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for bits in range(1 << len(pool)):
        yield Graph(n, [pool[i] for i in range(len(pool)) if bits >> i & 1])


def _assert_peo(g, peo):
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [u for u in g.neighbors(v) if pos[u] > pos[v]]
        for a, b in combinations(later, 2):
            assert g.has_edge(a, b), "claimed elimination ordering is not perfect"


def test_known_cases(named):
    assert is_chordal(named["K4"])[0]
    assert not is_chordal(named["C4"])[0]
    assert not is_p5_free(named["P5"])
    assert is_p5_free(named["K4"])


def test_spiders_match_brute_force():
    for gen, ps in ((gen_clique_spider, (2, 3)), (gen_path_spider, (2, 3))):
        for p in ps:
            g, _, _, _ = gen(p)
            assert is_chordal(g)[0] == (not brute_has_long_induced_cycle(g))
            assert is_p5_free(g) == (not brute_has_induced_p5(g))


def test_exhaustive_small_labeled_graphs():
    for n in (4, 5):
        for g in all_labeled_graphs(n):
            chordal, peo = is_chordal(g)
            assert chordal == (not brute_has_long_induced_cycle(g))
            if chordal:
                _assert_peo(g, peo)
            assert is_p5_free(g) == (not brute_has_induced_p5(g))


@pytest.mark.parametrize("n,seed", [(6, 0), (6, 1), (6, 2), (7, 3), (7, 4),
                                    (8, 5), (8, 6), (8, 7)])
def test_random_graphs_match_brute_force(n, seed):
    g = random_connected_graph(n, 0.4, seed)
    chordal, peo = is_chordal(g)
    assert chordal == (not brute_has_long_induced_cycle(g))
    if chordal:
        _assert_peo(g, peo)
    assert is_p5_free(g) == (not brute_has_induced_p5(g))


def test_atlas_agreement(atlas6):
    for g in atlas6:
        assert is_chordal(g)[0] == (not brute_has_long_induced_cycle(g))
        assert is_p5_free(g) == (not brute_has_induced_p5(g))
