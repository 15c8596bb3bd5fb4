"""Instance generators: spider families, hardness reductions, random corpora.

Every generator fixes a deterministic vertex-id layout and returns it as
metadata (block names, and for the reductions the full vertex chains of every
constructed path) so tests can assert structure and the arena can label
vertices.  Byte-identical output for identical arguments.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph, GraphError, Instance, is_connected

# ---------------------------------------------------------------------------
# spider families


def gen_clique_spider(p: int):
    """Hub clique u_1..u_p; each hub tied to s and t through its own degree-2
    gateway (s x_i u_i and t y_i u_i).  Separator number p, divider number 2.

    Ids: s=0, t=1, u block, x block, y block.  Returns (graph, s, t, layout).
    """
    if p < 2:
        raise ValueError("p must be >= 2")
    s, t = 0, 1
    u = [2 + i for i in range(p)]
    x = [2 + p + i for i in range(p)]
    y = [2 + 2 * p + i for i in range(p)]
    edges = [(u[i], u[j]) for i in range(p) for j in range(i + 1, p)]
    for i in range(p):
        edges += [(s, x[i]), (x[i], u[i]), (t, y[i]), (y[i], u[i])]
    g = Graph(3 * p + 2, edges)
    names = ["s", "t"] + [f"u{i+1}" for i in range(p)] + \
        [f"x{i+1}" for i in range(p)] + [f"y{i+1}" for i in range(p)]
    layout = {"family": "clique-spider", "p": p, "names": names,
              "blocks": {"s": s, "t": t, "u": u, "x": x, "y": y}}
    return g, s, t, layout


def gen_path_spider(p: int):
    """Hub path u_1..u_p; s and t each tied to every hub by a private path of
    length floor(p/2)+1.  Sparse family with separator number p, divider
    number 2.
    """
    if p < 2:
        raise ValueError("p must be >= 2")
    h = p // 2 + 1
    s, t = 0, 1
    u = [2 + i for i in range(p)]
    nxt = 2 + p
    edges = [(u[i], u[i + 1]) for i in range(p - 1)]
    names = ["s", "t"] + [f"u{i+1}" for i in range(p)]
    spaths, tpaths = [], []
    for end, store, tag in ((s, spaths, "a"), (t, tpaths, "b")):
        for i in range(p):
            chain = [end]
            for j in range(h - 1):
                chain.append(nxt)
                names.append(f"{tag}{i+1}.{j+1}")
                nxt += 1
            chain.append(u[i])
            edges += list(zip(chain, chain[1:]))
            store.append(chain)
    g = Graph(nxt, edges)
    layout = {"family": "path-spider", "p": p, "h": h, "names": names,
              "blocks": {"s": s, "t": t, "u": u},
              "paths": {"from_s": spaths, "from_t": tpaths}}
    return g, s, t, layout


# ---------------------------------------------------------------------------
# set cover


@dataclass(frozen=True)
class SetCoverInstance:
    n: int                      # universe {0..n-1}
    sets: tuple                 # tuple of frozensets
    k: int

    def __post_init__(self):
        if self.n < 1 or self.k < 1:
            raise ValueError("universe size and budget must be positive")
        for ss in self.sets:
            if not ss or not all(0 <= e < self.n for e in ss):
                raise ValueError(f"set {sorted(ss)} empty or outside the universe")

    @classmethod
    def from_obj(cls, obj):
        try:
            return cls(obj["n"], tuple(frozenset(s) for s in obj["sets"]), obj["k"])
        except (KeyError, TypeError) as exc:
            raise GraphError("malformed-json", f"bad set cover instance: {exc}") from None

    def to_obj(self):
        return {"n": self.n, "sets": [sorted(s) for s in self.sets], "k": self.k}


def solve_set_cover_brute(sc: SetCoverInstance) -> bool:
    """Exhaustive oracle: can at most k of the sets cover the universe?"""
    if len(sc.sets) > 20:
        raise ValueError("brute-force oracle capped at 20 sets")
    universe = frozenset(range(sc.n))
    for r in range(0, min(sc.k, len(sc.sets)) + 1):
        for combo in combinations(sc.sets, r):
            if frozenset().union(*combo) == universe:
                return True
    return False


def reduce_set_cover(sc: SetCoverInstance):
    """Game instance on which the divider with k+1 agents wins iff the cover
    exists; otherwise the facilitator wins within two moves.

    Layout: s=0, t=1, z=2 (a common neighbor of s and t), universe block,
    u-gateways x/x' to s and t, one block per copy of the set family, a hub
    w_i per copy with its own gateways y/y'.  Returns (instance, layout).
    """
    nU, m, k = sc.n, len(sc.sets), sc.k
    s, t, z = 0, 1, 2
    nxt = 3
    u = list(range(nxt, nxt + nU)); nxt += nU
    x = list(range(nxt, nxt + nU)); nxt += nU
    xp = list(range(nxt, nxt + nU)); nxt += nU
    copies = []
    for _ in range(k):
        copies.append(list(range(nxt, nxt + m))); nxt += m
    w = list(range(nxt, nxt + k)); nxt += k
    y = list(range(nxt, nxt + k)); nxt += k
    yp = list(range(nxt, nxt + k)); nxt += k

    edges = [(z, s), (z, t)]
    for h in range(nU):
        edges += [(s, x[h]), (x[h], u[h]), (u[h], xp[h]), (xp[h], t)]
    for i in range(k):
        edges += [(s, y[i]), (y[i], w[i]), (w[i], yp[i]), (yp[i], t)]
        for j in range(m):
            edges.append((w[i], copies[i][j]))
            for h in sorted(sc.sets[j]):
                edges.append((copies[i][j], u[h]))
    g = Graph(nxt, edges)
    names = _set_cover_names(nU, m, k)
    layout = {
        "family": "set-cover-reduction", "universe": nU, "m": m, "cover_budget": k,
        "names": names, "decisive_tau": 2,
        "blocks": {"s": s, "t": t, "z": z, "u": u, "x": x, "xp": xp,
                   "copies": copies, "w": w, "y": y, "yp": yp},
    }
    return Instance(g, s, t, k + 1, None), layout


def _set_cover_names(nU, m, k):
    names = ["s", "t", "z"]
    names += [f"u{h}" for h in range(nU)]
    names += [f"x{h}" for h in range(nU)]
    names += [f"x'{h}" for h in range(nU)]
    for i in range(k):
        names += [f"s{j}^({i})" for j in range(m)]
    names += [f"w{i}" for i in range(k)]
    names += [f"y{i}" for i in range(k)]
    names += [f"y'{i}" for i in range(k)]
    return names


# ---------------------------------------------------------------------------
# quantified boolean formulas


@dataclass(frozen=True)
class QbfFormula:
    """Fully quantified CNF over variables 1..2n, alternating forall/exists
    starting with forall on the odd indices."""

    n: int
    clauses: tuple              # tuple of tuples of (var, negated)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        for cl in self.clauses:
            if not cl:
                raise ValueError("empty clause")
            for var, neg in cl:
                if not 1 <= var <= 2 * self.n:
                    raise ValueError(f"literal variable {var} outside 1..{2 * self.n}")

    @classmethod
    def from_obj(cls, obj):
        try:
            clauses = tuple(
                tuple((lit["var"], bool(lit["neg"])) for lit in cl) for cl in obj["clauses"]
            )
            return cls(obj["n"], clauses)
        except (KeyError, TypeError) as exc:
            raise GraphError("malformed-json", f"bad formula: {exc}") from None

    def to_obj(self):
        return {"n": self.n, "clauses": [
            [{"var": v, "neg": neg} for v, neg in cl] for cl in self.clauses]}


def evaluate_qbf_brute(phi: QbfFormula) -> bool:
    """Minimax oracle over assignments: forall on odd variables, exists on even."""
    if 2 * phi.n > 16:
        raise ValueError("brute-force oracle capped at 16 variables")

    def matrix(assign):
        return all(
            any(assign[var] != neg for var, neg in cl) for cl in phi.clauses
        )

    def play(i, assign):
        if i > 2 * phi.n:
            return matrix(assign)
        if i % 2 == 1:  # universal
            return all(play(i + 1, {**assign, i: val}) for val in (False, True))
        return any(play(i + 1, {**assign, i: val}) for val in (False, True))

    return play(1, {})


class _Builder:
    """Incremental graph builder with named ids and recorded path chains."""

    def __init__(self):
        self.names = []
        self.edges = []
        self.paths = {}

    def vertex(self, name) -> int:
        self.names.append(name)
        return len(self.names) - 1

    def edge(self, a, b):
        self.edges.append((a, b))

    def path(self, tag, a, b, length, prefix):
        """A path of `length` edges from a to b through fresh internals."""
        assert length >= 1
        chain = [a]
        for i in range(length - 1):
            chain.append(self.vertex(f"{prefix}.{i+1}"))
        chain.append(b)
        for e in zip(chain, chain[1:]):
            self.edge(*e)
        self.paths[tag] = chain
        return chain

    def graph(self) -> Graph:
        return Graph(len(self.names), self.edges)


def _qbf_core(phi: QbfFormula):
    """Shared construction for both formula reductions.

    One spine for each facilitator agent: s u_0 .. u_n with a primed choice
    pair between consecutive hubs (the agent picks the odd variables), and
    t v_0 .. v_{2n}; the spines meet through per-clause bridges u_n w_j c_j
    w'_j v_{2n}.  Every variable j gets a gadget x_j/xbar_j hanging off a
    guard y_j, pendant tails to x''_j/xbar''_j that reach the clauses the
    literal satisfies, and a timing track R_j from y_j to a common neighbor
    y'_j of s and t.  Odd gadgets are also tied to the opposite spine by the
    long escape paths Q_j.
    """
    n, m = phi.n, len(phi.clauses)
    bld = _Builder()
    s = bld.vertex("s")
    t = bld.vertex("t")
    z = bld.vertex("z")
    zp = bld.vertex("z'")
    u = [bld.vertex(f"u{i}") for i in range(n + 1)]
    xp = {}
    xbp = {}
    for i in range(1, n + 1):
        j = 2 * i - 1
        xp[j] = bld.vertex(f"x'{j}")
        xbp[j] = bld.vertex(f"xbar'{j}")
    v = [bld.vertex(f"v{i}") for i in range(2 * n + 1)]
    w = [bld.vertex(f"w{j+1}") for j in range(m)]
    wp = [bld.vertex(f"w'{j+1}") for j in range(m)]
    c = [bld.vertex(f"c{j+1}") for j in range(m)]
    x = {}
    xb = {}
    xpp = {}
    xbpp = {}
    y = {}
    yp = {}
    for j in range(1, 2 * n + 1):
        x[j] = bld.vertex(f"x{j}")
        xb[j] = bld.vertex(f"xbar{j}")
        xpp[j] = bld.vertex(f"x''{j}")
        xbpp[j] = bld.vertex(f"xbar''{j}")
        y[j] = bld.vertex(f"y{j}")
        yp[j] = bld.vertex(f"y'{j}")

    bld.edge(s, u[0])
    for i in range(1, n + 1):
        j = 2 * i - 1
        bld.edge(u[i - 1], xp[j]); bld.edge(xp[j], u[i])
        bld.edge(u[i - 1], xbp[j]); bld.edge(xbp[j], u[i])
        # spine choice vertex reaches its literal gadget
        bld.edge(xp[j], x[j])
        bld.edge(xbp[j], xb[j])
    for j in range(m):
        bld.edge(u[n], w[j]); bld.edge(w[j], c[j])
        bld.edge(v[2 * n], wp[j]); bld.edge(wp[j], c[j])
    bld.edge(t, v[0])
    for i in range(1, 2 * n + 1):
        bld.edge(v[i - 1], v[i])
    for a, b in ((z, s), (z, t), (zp, s), (zp, t)):
        bld.edge(a, b)
    for j in range(1, 2 * n + 1):
        bld.edge(y[j], x[j])
        bld.edge(y[j], xb[j])
        bld.edge(yp[j], s)
        bld.edge(yp[j], t)
        i = (j + 1) // 2
        plen = 2 * (n - i) + 1
        bld.path(f"P{j}", x[j], xpp[j], plen, f"P{j}")
        bld.path(f"Pbar{j}", xb[j], xbpp[j], plen, f"Pbar{j}")
        bld.path(f"R{j}", y[j], yp[j], 2 * i - 1, f"R{j}")
        if j % 2 == 1:
            qlen = 4 * (n - i) + 5
            bld.path(f"Q{j}", x[j], v[j], qlen, f"Q{j}")
            bld.path(f"Qbar{j}", xb[j], v[j], qlen, f"Qbar{j}")
    for h, clause in enumerate(phi.clauses):
        for var, neg in dict.fromkeys(clause):  # clause is a set of literals
            bld.edge(xbpp[var] if neg else xpp[var], c[h])

    ids = {"s": s, "t": t, "z": z, "zp": zp, "u": u, "v": v, "w": w, "wp": wp,
           "c": c, "xp": xp, "xbp": xbp, "x": x, "xb": xb, "xpp": xpp,
           "xbpp": xbpp, "y": y, "yp": yp}
    return bld, ids


def reduce_qbf(phi: QbfFormula):
    """Bounded-game reduction: k = 2n+2 agents, tau = 2n+3 moves."""
    n, m = phi.n, len(phi.clauses)
    bld, ids = _qbf_core(phi)
    g = bld.graph()
    layout = {"family": "qbf-reduction", "n": n, "m": m,
              "names": bld.names, "blocks": _jsonable(ids), "paths": bld.paths}
    return Instance(g, ids["s"], ids["t"], 2 * n + 2, 2 * n + 3), layout


def reduce_qbf_unbounded(phi: QbfFormula):
    """Unbounded-game reduction: the bounded graph plus escape guards.

    Every spine hub, choice vertex, gadget vertex, and clause vertex gains a
    chaperone adjacent to s and t that chases it down a timing path, which
    forces the facilitator to behave as in the bounded game.  Agent count
    9n + m + 4.
    """
    n, m = phi.n, len(phi.clauses)
    bld, ids = _qbf_core(phi)
    guards = {"up": [], "a": {}, "ab": {}, "ap": {}, "abp": {}, "vp": [], "cp": []}
    s, t = ids["s"], ids["t"]

    def chaperone(name, target, tag, length):
        vtx = bld.vertex(name)
        bld.edge(vtx, s)
        bld.edge(vtx, t)
        bld.path(tag, vtx, target, length, tag)
        return vtx

    for i in range(n + 1):
        guards["up"].append(chaperone(f"u'{i}", ids["u"][i], f"L{i}", 2 * i + 1))
    for i in range(1, n + 1):
        j = 2 * i - 1
        guards["a"][i] = chaperone(f"a{i}", ids["x"][j], f"S{i}", 2 * i + 1)
        guards["ab"][i] = chaperone(f"abar{i}", ids["xb"][j], f"Sbar{i}", 2 * i + 1)
        guards["ap"][i] = chaperone(f"a'{i}", ids["xp"][j], f"S'{i}", 2 * i)
        guards["abp"][i] = chaperone(f"abar'{i}", ids["xbp"][j], f"Sbar'{i}", 2 * i)
    for i in range(2 * n + 1):
        guards["vp"].append(chaperone(f"v'{i}", ids["v"][i], f"L'{i}", i + 1))
    for j in range(m):
        guards["cp"].append(chaperone(f"c'{j+1}", ids["c"][j], f"F{j+1}", 2 * n + 3))

    g = bld.graph()
    num_guards = (n + 1) + 4 * n + (2 * n + 1) + m
    k = (2 * n + 2) + num_guards
    assert k == 9 * n + m + 4
    ids = dict(ids)
    ids["guards"] = guards
    layout = {"family": "qbf-reduction-unbounded", "n": n, "m": m,
              "names": bld.names, "blocks": _jsonable(ids), "paths": bld.paths}
    return Instance(g, s, t, k, None), layout


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


# ---------------------------------------------------------------------------
# random corpora


def random_connected_graph(n: int, edge_prob: float, seed: int,
                           max_tries: int = 1000) -> Graph:
    """G(n, p) conditioned on connectivity by rejection; seed-deterministic."""
    if n < 2 or not 0 < edge_prob <= 1:
        raise ValueError("need n >= 2 and 0 < edge_prob <= 1")
    rng = random.Random(seed)
    for _ in range(max_tries):
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < edge_prob]
        g = Graph(n, edges)
        if is_connected(g):
            return g
    raise RuntimeError(f"no connected sample in {max_tries} tries; raise edge_prob")


def random_chordal_graph(n: int, seed: int) -> Graph:
    """Random chordal graph by incremental clique attachment.

    Each new vertex is attached to a randomly grown clique of the current
    graph, so the reversed insertion order is a perfect elimination ordering.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = random.Random(seed)
    edges = []
    adj = [set() for _ in range(n)]
    for v in range(1, n):
        anchor = rng.randrange(v)
        clique = [anchor]
        pool = sorted(adj[anchor] & set(range(v)))
        rng.shuffle(pool)
        want = rng.randint(0, min(len(pool), 3))
        for cand in pool:
            if len(clique) - 1 >= want:
                break
            if all(cand in adj[x] for x in clique):
                clique.append(cand)
        for x in clique:
            edges.append((x, v))
            adj[x].add(v)
            adj[v].add(x)
    return Graph(n, edges)
