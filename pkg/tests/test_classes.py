"""Fast-path dispatch: reason tags, priority, agreement with the generic solver."""

import pytest

from rendezvous.classes import divider_number_auto, fast_divider_number
from rendezvous.engine import divider_number
from rendezvous.forge import (
    gen_clique_spider,
    gen_path_spider,
    random_chordal_graph,
    random_connected_graph,
)
from rendezvous.graphs import INF
from rendezvous.recognize import is_chordal, is_p5_free
from rendezvous.separators import separator_number
from tests.conftest import nonadjacent_pairs


def test_adjacent_or_equal(named):
    assert fast_divider_number(named["P2"], 0, 1).reason == "adjacent-or-equal"
    assert fast_divider_number(named["P2"], 0, 1).value == INF
    assert fast_divider_number(named["K3"], 2, 2).value == INF


def test_lambda_one_path(named):
    res = divider_number_auto(named["P3"], 0, 2)
    assert (res.value, res.reason) == (1, "lambda-1")


def test_chordal_path(named):
    res = divider_number_auto(named["K4-e"], 0, 1)
    assert (res.value, res.reason) == (2, "chordal")


def test_spiders_need_generic_solver():
    for gen, p in ((gen_clique_spider, 3), (gen_path_spider, 3)):
        g, s, t, _ = gen(p)
        assert not is_chordal(g)[0] and not is_p5_free(g)
        res = divider_number_auto(g, s, t)
        assert (res.value, res.reason) == (2, "generic")


def test_c7_has_no_fast_path(named):
    assert fast_divider_number(named["C7"], 0, 3) is None
    res = divider_number_auto(named["C7"], 0, 3)
    assert res.reason == "generic"
    assert res.value == divider_number(named["C7"], 0, 3)


def test_k23_same_independent_module_value(named):
    # K2,3 is P5-free, so that tag wins by priority; the count rule must agree
    res = divider_number_auto(named["K23"], 0, 1)
    assert res.value == 3
    assert res.reason == "p5-free"
    assert len(named["K23"].neighbors(0) & named["K23"].neighbors(1)) == 3


def test_star_same_module(named):
    res = divider_number_auto(named["K13"], 1, 2)
    assert res.value == 1


def test_deterministic_reason_tags(named):
    a = divider_number_auto(named["K4-e"], 0, 1)
    b = divider_number_auto(named["K4-e"], 0, 1)
    assert a == b


@pytest.mark.parametrize("seed", range(10))
def test_fast_paths_agree_with_generic_on_chordal(seed):
    g = random_chordal_graph(8, seed)
    for s, t in nonadjacent_pairs(g)[:4]:
        fast = fast_divider_number(g, s, t)
        assert fast is not None and fast.reason in ("lambda-1", "chordal")
        assert fast.value == divider_number(g, s, t)


@pytest.mark.parametrize("seed", range(10))
def test_auto_equals_generic_on_random(seed):
    g = random_connected_graph(7, 0.4, seed)
    for s, t in nonadjacent_pairs(g)[:3]:
        assert divider_number_auto(g, s, t).value == divider_number(g, s, t)


def test_spider_gap_matches_construction():
    for p in (2, 3, 4):
        g, s, t, _ = gen_clique_spider(p)
        lam = separator_number(g, s, t).value
        assert lam - divider_number_auto(g, s, t).value == p - 2
    for p in (2, 3):
        g, s, t, _ = gen_path_spider(p)
        lam = separator_number(g, s, t).value
        assert lam - divider_number_auto(g, s, t).value == p - 2


def test_fast_paths_agree_with_generic_exhaustively(atlas6):
    # wherever any fast path fires on the small corpus, its value must equal
    # the game-theoretic answer
    for g in atlas6:
        for s, t in nonadjacent_pairs(g):
            fast = fast_divider_number(g, s, t)
            if fast is not None:
                assert fast.value == divider_number(g, s, t), \
                    f"{g.edges} ({s},{t}) via {fast.reason}"
