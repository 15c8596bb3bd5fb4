"""Neighborhood-diversity machinery: decomposition minimality, move trees,
candidate enumeration vs brute force, exact integer feasibility, and the
decision procedure against the game engine."""

from itertools import combinations, product
from math import comb

import pytest

from rendezvous.engine import facilitator_wins_in
from rendezvous.forge import random_connected_graph
from rendezvous.graphs import Graph
from rendezvous.ndfpt import (
    CandidateNode,
    IlpSystem,
    build_ilp,
    build_move_tree,
    blocked_set_choices,
    consistent_child_labels,
    count_nodes,
    divider_wins_in_time_nd,
    enumerate_candidates,
    ilp_feasible,
    neighborhood_decomposition,
)
from rendezvous.ndfpt.movetree import child_labels
from tests.conftest import nonadjacent_pairs


# --------------------------------------------------------------------------
# decomposition


def test_decomposition_examples(named):
    assert neighborhood_decomposition(named["K4"]).width == 1
    assert neighborhood_decomposition(named["C4"]).width == 2
    assert neighborhood_decomposition(named["P4"]).width == 4
    nd = neighborhood_decomposition(named["C4"])
    assert nd.kinds == ("independent", "independent")
    assert nd.sizes == (2, 2)


def _valid_decomposition(g, parts):
    for i, part in enumerate(parts):
        kinds = {g.has_edge(u, v) for u, v in combinations(part, 2)}
        if len(kinds) > 1:
            return False
        for j, other in enumerate(parts):
            if i == j:
                continue
            links = {g.has_edge(u, v) for u in part for v in other}
            if len(links) > 1:
                return False
    return True


def _partitions(items):
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for sub in _partitions(rest):
        for i in range(len(sub)):
            yield sub[:i] + [[head] + sub[i]] + sub[i + 1:]
        yield [[head]] + sub


def brute_minimum_width(g):
    best = g.n
    for parts in _partitions(list(range(g.n))):
        if len(parts) < best and _valid_decomposition(g, parts):
            best = len(parts)
    return best


@pytest.mark.parametrize("seed", range(8))
def test_decomposition_is_minimum(seed):
    g = random_connected_graph(6, 0.5, seed)
    assert neighborhood_decomposition(g).width == brute_minimum_width(g)


@pytest.mark.parametrize("seed", range(3))
def test_decomposition_is_minimum_n7(seed):
    g = random_connected_graph(7, 0.45, seed)
    assert neighborhood_decomposition(g).width == brute_minimum_width(g)
    h = _mk_join("ici", (3, 1, 3), [(0, 1), (1, 2)])
    assert neighborhood_decomposition(h).width == brute_minimum_width(h)


def test_decomposition_minimum_on_atlas_sample(atlas6):
    for g in atlas6[::9]:
        if g.n <= 7:
            assert neighborhood_decomposition(g).width == brute_minimum_width(g)


# --------------------------------------------------------------------------
# move tree


def _mk_join(kinds, sizes, qedges):
    offs, vs = [], 0
    for sz in sizes:
        offs.append(list(range(vs, vs + sz)))
        vs += sz
    edges = []
    for m, kind in enumerate(kinds):
        if kind == "c":
            edges += [(a, b) for a in offs[m] for b in offs[m] if a < b]
    for i, j in qedges:
        edges += [(a, b) for a in offs[i] for b in offs[j]]
    return Graph(vs, edges)


def test_move_tree_root_and_children():
    g = _mk_join("ii", (2, 2), [(0, 1)])       # C4-like join
    nd = neighborhood_decomposition(g)
    tree = build_move_tree(nd, 0, 2, 1)
    assert tree.label == (0, 1)
    assert [c.label for c in tree.children] == [(0, 0), (0, 1), (1, 1)]


def test_move_tree_node_bound():
    # asymmetric kinds keep the three modules from collapsing into one class
    g = _mk_join("icc", (2, 2, 2), [(0, 1), (1, 2)])
    nd = neighborhood_decomposition(g)
    assert nd.width == 3
    for tau in (1, 2):
        tree = build_move_tree(nd, 0, g.n - 1, tau)
        assert count_nodes(tree) <= comb(nd.width + 1, 2) ** (tau + 1)


def test_move_tree_same_module_rejected(named):
    nd = neighborhood_decomposition(named["C4"])
    with pytest.raises(ValueError):
        build_move_tree(nd, 0, 2, 1)


# --------------------------------------------------------------------------
# candidates


def brute_candidates(tree, nd, k):
    """Reference enumeration: all (subtree, blocked-map) pairs, then filter on
    the projection-consistency and split-pair rules."""

    def all_shapes(node):
        if not node.children:
            yield (node.label, None, ())
            return
        child_options = []
        for ch in node.children:
            child_options.append([None] + list(all_shapes(ch)))
        for blocked in blocked_set_choices(nd, node.label, k):
            for picks in product(*child_options):
                kept = tuple(p for p in picks if p is not None)
                yield (node.label, blocked, kept)

    def consistent(shape):
        label, blocked, kept = shape
        if blocked is None:
            return True
        want = consistent_child_labels(nd, label, blocked)
        if want is None:
            return False
        if [c[0] for c in kept] != want:
            return False
        return all(consistent(c) for c in kept)

    return [s for s in all_shapes(tree) if consistent(s)]


def _shape_of(cand):
    if not cand.children:
        return (cand.label, None, ())
    return (cand.label, cand.blocked,
            tuple(_shape_of(c) for c in cand.children))


def test_enumeration_matches_brute_force():
    # depth one keeps the reference enumeration (every subtree shape times
    # every blocked map) tractable; deeper trees are covered by the engine
    # equivalence tests
    g = _mk_join("icc", (2, 2, 2), [(0, 1), (1, 2)])
    nd = neighborhood_decomposition(g)
    for k in (1, 2, 3):
        tree = build_move_tree(nd, 0, g.n - 1, 1)
        mine = {_shape_of(c) for c in enumerate_candidates(tree, nd, k)}
        brute = set(brute_candidates(tree, nd, k))
        assert mine == brute

    g2 = _mk_join("ic", (2, 2), [(0, 1)])
    nd2 = neighborhood_decomposition(g2)
    for k in (1, 2):
        tree2 = build_move_tree(nd2, 0, g2.n - 1, 1)
        mine = {_shape_of(c) for c in enumerate_candidates(tree2, nd2, k)}
        assert mine == set(brute_candidates(tree2, nd2, k))


def test_enumeration_never_yields_same_module_pairs():
    g = _mk_join("icc", (2, 2, 2), [(0, 1), (1, 2)])
    nd = neighborhood_decomposition(g)
    tree = build_move_tree(nd, 0, g.n - 1, 2)
    for cand in enumerate_candidates(tree, nd, 2):
        stack = [cand]
        while stack:
            node = stack.pop()
            assert node.label[0] != node.label[1]
            stack.extend(node.children)


def test_blocking_the_middle_is_the_only_survivor():
    # independent - clique - clique path quotient; the ends meet through the
    # middle module, so the divider must hold all of it
    g = _mk_join("icc", (2, 2, 2), [(0, 1), (1, 2)])
    nd = neighborhood_decomposition(g)
    tree = build_move_tree(nd, 0, g.n - 1, 1)
    assert [_shape_of(c) for c in enumerate_candidates(tree, nd, 1)] == []
    shapes = [_shape_of(c) for c in enumerate_candidates(tree, nd, 2)]
    assert shapes == [((0, 2), frozenset({1}), (((0, 2), None, ()),))]


def test_sharding_partitions_stream():
    g = _mk_join("icc", (2, 2, 2), [(0, 1), (1, 2)])
    nd = neighborhood_decomposition(g)
    tree = build_move_tree(nd, 0, g.n - 1, 2)
    whole = [_shape_of(c) for c in enumerate_candidates(tree, nd, 3)]
    pieces = []
    for idx in range(3):
        pieces += [_shape_of(c)
                   for c in enumerate_candidates(tree, nd, 3, shard_index=idx,
                                                 shard_count=3)]
    assert sorted(map(repr, whole)) == sorted(map(repr, pieces))


# --------------------------------------------------------------------------
# integer feasibility


def brute_box_feasible(sys):
    ranges = [range(sys.lo[v], sys.hi[v] + 1) for v in range(sys.num_vars)]
    for point in product(*ranges):
        ok = True
        for coeffs, sense, rhs in sys.constraints:
            act = sum(cf * point[v] for v, cf in coeffs.items())
            if sense == "==" and act != rhs:
                ok = False
                break
            if sense == "<=" and act > rhs:
                ok = False
                break
        if ok:
            return True
    return False


def test_trivial_systems():
    empty = IlpSystem([], [], [])
    assert ilp_feasible(empty)
    bad = IlpSystem([], [], [])
    v = bad.add_var("x", 0, 5)
    bad.add({v: 1}, "<=", -1)
    assert not ilp_feasible(bad)


@pytest.mark.parametrize("seed", range(30))
def test_solver_matches_exhaustive_enumeration(seed):
    import random

    rng = random.Random(seed)
    sys = IlpSystem([], [], [])
    nvars = rng.randint(1, 5)
    for v in range(nvars):
        lo = rng.randint(0, 2)
        sys.add_var(f"v{v}", lo, lo + rng.randint(0, 3))
    for _ in range(rng.randint(1, 5)):
        coeffs = {v: rng.choice((-2, -1, 1, 2))
                  for v in range(nvars) if rng.random() < 0.7}
        if not coeffs:
            continue
        sys.add(coeffs, rng.choice(("<=", "==")), rng.randint(-4, 8))
    assert ilp_feasible(sys) == brute_box_feasible(sys)


def _tiny_candidate():
    g = _mk_join("icc", (2, 2, 2), [(0, 1), (1, 2)])
    nd = neighborhood_decomposition(g)
    tree = build_move_tree(nd, 0, g.n - 1, 1)
    cands = list(enumerate_candidates(tree, nd, 2))
    assert cands
    return g, nd, cands


def test_ilp_variable_count_formula():
    g, nd, cands = _tiny_candidate()
    for cand in cands:
        nodes = 1 + len(cand.children)
        edges = len(cand.children)
        sys = build_ilp(cand, nd, 2)
        ordered_pairs = sum(len(a) for a in nd.quotient_adj)
        want = 2 * nd.width * nodes + edges * (4 * ordered_pairs + nd.width)
        assert sys.num_vars == want


def test_ilp_balance_conserves_agents():
    g, nd, cands = _tiny_candidate()
    for cand in cands:
        sys = build_ilp(cand, nd, 2)
        # summing the two balance families over all modules must cancel every
        # move variable, leaving (child x+y) - (parent x+y) = 0
        move_kinds = ("a", "b", "c", "d", "z")
        balances = [c for c in sys.constraints
                    if c[1] == "==" and len(c[0]) > 1
                    and any(sys.names[v][0] in move_kinds for v in c[0])]
        acc = {}
        for coeffs, _, rhs in balances:
            assert rhs == 0
            for v, cf in coeffs.items():
                acc[v] = acc.get(v, 0) + cf
        for v, cf in acc.items():
            kind = sys.names[v][0]
            if kind in ("a", "b", "c", "d", "z"):
                assert cf == 0, f"{sys.names[v]} does not cancel"
            else:
                assert kind in ("x", "y") and cf in (-1, 1)


def test_blocked_modules_forced_full():
    g, nd, cands = _tiny_candidate()
    cand = next(c for c in cands if c.blocked)
    k_small = sum(nd.sizes[i] for i in cand.blocked) - 1
    if k_small >= 1:
        assert not ilp_feasible(build_ilp(cand, nd, k_small))


# --------------------------------------------------------------------------
# decision procedure


def test_specials(named):
    assert divider_wins_in_time_nd(named["P2"], 0, 1, 5, 3) is False
    assert divider_wins_in_time_nd(named["P3"], 1, 1, 5, 3) is False
    # same independent module: count of common neighbors decides
    assert divider_wins_in_time_nd(named["C4"], 0, 2, 2, 1) is True
    assert divider_wins_in_time_nd(named["C4"], 0, 2, 1, 1) is False
    assert divider_wins_in_time_nd(named["K13"], 1, 2, 1, 2) is True


@pytest.mark.parametrize("kinds,sizes,qedges", [
    ("ii", (2, 2), [(0, 1)]),
    ("ic", (2, 2), [(0, 1)]),
    ("cc", (3, 2), [(0, 1)]),
    ("ici", (2, 1, 2), [(0, 1), (1, 2)]),
    ("icc", (2, 2, 2), [(0, 1), (1, 2)]),
    ("iii", (2, 2, 2), [(0, 1), (1, 2), (0, 2)]),
    ("cic", (1, 3, 2), [(0, 1), (1, 2)]),
])
def test_matches_engine_on_join_graphs(kinds, sizes, qedges):
    g = _mk_join(kinds, sizes, qedges)
    for s, t in nonadjacent_pairs(g)[:4]:
        for k in (1, 2, 3):
            for tau in (1, 2):
                assert divider_wins_in_time_nd(g, s, t, k, tau) == \
                    (not facilitator_wins_in(g, s, t, k, tau))


def test_threads_and_diagnostics_agree():
    g = _mk_join("icc", (2, 2, 2), [(0, 1), (1, 2)])
    diag = {}
    a = divider_wins_in_time_nd(g, 0, g.n - 1, 2, 2, diagnostics=diag)
    b = divider_wins_in_time_nd(g, 0, g.n - 1, 2, 2, threads=3)
    assert a == b
    assert diag["method"] == "candidate-ilp"
    assert diag["candidates_checked"] >= 1
    if a:
        assert "feasible_candidate" in diag


@pytest.mark.parametrize("kinds,sizes,qedges", [
    ("ic", (2, 2), [(0, 1)]),
    ("cc", (2, 2), [(0, 1)]),
    ("icc", (1, 2, 2), [(0, 1), (1, 2)]),
])
def test_matches_engine_at_depth_three(kinds, sizes, qedges):
    # deeper trees exercise chained balance constraints across two edges
    g = _mk_join(kinds, sizes, qedges)
    for s, t in nonadjacent_pairs(g)[:2]:
        for k in (1, 2):
            assert divider_wins_in_time_nd(g, s, t, k, 3) == \
                (not facilitator_wins_in(g, s, t, k, 3))


def test_module_permutation_invariance_of_decision():
    g = _mk_join("ic", (3, 2), [(0, 1)])
    perm = list(range(g.n))
    perm[0], perm[2] = perm[2], perm[0]      # swap inside the independent module
    h = Graph(g.n, [tuple(sorted((perm[u], perm[v]))) for u, v in g.edges])
    for s, t in nonadjacent_pairs(g):
        for k in (1, 2):
            assert divider_wins_in_time_nd(g, s, t, k, 2) == \
                divider_wins_in_time_nd(h, perm[s], perm[t], k, 2)
