"""Integer linear feasibility systems for candidate strategies, and an exact
bounded branch-and-bound solver.

Variables per candidate node: x[i] counts divider agents guarding distinct
vertices of module i (blockers), y[i] counts parked agents (dwellers).  Per
tree edge and ordered pair of adjacent modules (i, j): a, b, c, d count the
four blocker/dweller transitions from i to j; z[i] counts dwellers promoted
to blockers inside clique module i.  All variables live in the box [0, k],
so feasibility is decidable by finite search; the solver propagates bounds
to exactness and branches on the smallest open domain.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..engine.solver import BudgetExceeded
from .candidates import CandidateNode
from .decomposition import NdDecomposition


class IlpBudgetExceeded(BudgetExceeded):
    def __init__(self, nodes, budget):
        super().__init__("ilp-search", nodes, budget)


@dataclass
class IlpSystem:
    names: list                 # diagnostic variable names
    lo: list
    hi: list
    constraints: list = field(default_factory=list)  # (coeffs: dict, sense, rhs)

    def add_var(self, name, lo: int, hi: int) -> int:
        self.names.append(name)
        self.lo.append(lo)
        self.hi.append(hi)
        return len(self.names) - 1

    def add(self, coeffs: dict, sense: str, rhs: int):
        assert sense in ("<=", "==")
        self.constraints.append((coeffs, sense, rhs))

    @property
    def num_vars(self) -> int:
        return len(self.names)


def build_ilp(cand: CandidateNode, nd: NdDecomposition, k: int) -> IlpSystem:
    """Constraint system deciding whether k agents can realize the candidate.

    Emits, per node: the agent-count equation, per-module blocker caps (one
    lower when the facilitator occupies the module), the no-dweller rule for
    occupied singleton modules, and full occupation of the blocked modules.
    Per edge: flow caps out of each module and the blocker/dweller balance
    equations tying parent counts to child counts.
    """
    sys = IlpSystem([], [], [])
    width = nd.width
    ordered_pairs = [
        (i, j) for i in range(width) for j in nd.quotient_adj[i]
    ]

    nodes = []          # preorder
    edges = []          # (parent_id, child_id)

    def walk(node, parent_id):
        nid = len(nodes)
        nodes.append(node)
        if parent_id is not None:
            edges.append((parent_id, nid))
        for ch in node.children:
            walk(ch, nid)

    walk(cand, None)

    x = {}
    y = {}
    for nid, node in enumerate(nodes):
        for i in range(width):
            x[i, nid] = sys.add_var(("x", i, nid), 0, k)
            y[i, nid] = sys.add_var(("y", i, nid), 0, k)

    a = {}
    b = {}
    c = {}
    d = {}
    z = {}
    for eid, _ in enumerate(edges):
        for (i, j) in ordered_pairs:
            a[i, j, eid] = sys.add_var(("a", i, j, eid), 0, k)
            b[i, j, eid] = sys.add_var(("b", i, j, eid), 0, k)
            c[i, j, eid] = sys.add_var(("c", i, j, eid), 0, k)
            d[i, j, eid] = sys.add_var(("d", i, j, eid), 0, k)
        for i in range(width):
            z[i, eid] = sys.add_var(("z", i, eid), 0, k)

    for nid, node in enumerate(nodes):
        label = set(node.label)
        sys.add({x[i, nid]: 1 for i in range(width)} | {y[i, nid]: 1 for i in range(width)},
                "==", k)
        for i in range(width):
            cap = nd.sizes[i] - 1 if i in label else nd.sizes[i]
            sys.add({x[i, nid]: 1}, "<=", cap)
            if nd.sizes[i] == 1 and i in label:
                sys.add({y[i, nid]: 1}, "==", 0)
        for i in sorted(node.blocked):
            assert i not in label
            sys.add({x[i, nid]: 1}, "==", nd.sizes[i])

    for eid, (pv, cu) in enumerate(edges):
        for i in range(width):
            if nd.kinds[i] == "independent":
                sys.add({z[i, eid]: 1}, "==", 0)
            out_block = {a[i, j, eid]: 1 for j in nd.quotient_adj[i]}
            out_block |= {b[i, j, eid]: 1 for j in nd.quotient_adj[i]}
            out_block[x[i, pv]] = -1
            sys.add(out_block, "<=", 0)
            out_dwell = {c[i, j, eid]: 1 for j in nd.quotient_adj[i]}
            out_dwell |= {d[i, j, eid]: 1 for j in nd.quotient_adj[i]}
            out_dwell[z[i, eid]] = out_dwell.get(z[i, eid], 0) + 1
            sys.add(out_dwell | {y[i, pv]: -1}, "<=", 0)
            # balance: child counts equal parent counts plus net flow
            bal_x = {x[i, cu]: 1, x[i, pv]: -1}
            for j in nd.quotient_adj[i]:
                bal_x[a[i, j, eid]] = bal_x.get(a[i, j, eid], 0) + 1
                bal_x[b[i, j, eid]] = bal_x.get(b[i, j, eid], 0) + 1
                bal_x[a[j, i, eid]] = bal_x.get(a[j, i, eid], 0) - 1
                bal_x[c[j, i, eid]] = bal_x.get(c[j, i, eid], 0) - 1
            bal_x[z[i, eid]] = bal_x.get(z[i, eid], 0) - 1
            sys.add(bal_x, "==", 0)
            bal_y = {y[i, cu]: 1, y[i, pv]: -1}
            for j in nd.quotient_adj[i]:
                bal_y[c[i, j, eid]] = bal_y.get(c[i, j, eid], 0) + 1
                bal_y[d[i, j, eid]] = bal_y.get(d[i, j, eid], 0) + 1
                bal_y[b[j, i, eid]] = bal_y.get(b[j, i, eid], 0) - 1
                bal_y[d[j, i, eid]] = bal_y.get(d[j, i, eid], 0) - 1
            bal_y[z[i, eid]] = bal_y.get(z[i, eid], 0) + 1
            sys.add(bal_y, "==", 0)

    return sys


def _ceil_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    return q + (1 if r else 0)


def _propagate(lo, hi, constraints):
    """Tighten the box until fixpoint; False when a constraint is unsatisfiable."""
    changed = True
    while changed:
        changed = False
        for coeffs, sense, rhs in constraints:
            min_act = 0
            max_act = 0
            for v, cf in coeffs.items():
                if cf > 0:
                    min_act += cf * lo[v]
                    max_act += cf * hi[v]
                else:
                    min_act += cf * hi[v]
                    max_act += cf * lo[v]
            if min_act > rhs:
                return False
            if sense == "==" and max_act < rhs:
                return False
            for v, cf in coeffs.items():
                if cf > 0:
                    # cf*x <= rhs - (rest of minimum activity)
                    slack = rhs - (min_act - cf * lo[v])
                    if slack // cf < hi[v]:
                        hi[v] = slack // cf
                        changed = True
                    if sense == "==":
                        # cf*x >= rhs - (rest of maximum activity)
                        need = rhs - (max_act - cf * hi[v])
                        bound = _ceil_div(need, cf)
                        if bound > lo[v]:
                            lo[v] = bound
                            changed = True
                else:
                    # cf*x <= slack with cf < 0 lower-bounds x
                    slack = rhs - (min_act - cf * hi[v])
                    bound = _ceil_div(slack, cf)
                    if bound > lo[v]:
                        lo[v] = bound
                        changed = True
                    if sense == "==":
                        need = rhs - (max_act - cf * lo[v])
                        if need // cf < hi[v]:
                            hi[v] = need // cf
                            changed = True
                if lo[v] > hi[v]:
                    return False
    return True


def _check_exact(lo, constraints):
    for coeffs, sense, rhs in constraints:
        act = sum(cf * lo[v] for v, cf in coeffs.items())
        if sense == "==" and act != rhs:
            return False
        if sense == "<=" and act > rhs:
            return False
    return True


def ilp_feasible(sys: IlpSystem, node_budget: int | None = 1_000_000) -> bool:
    """Exact feasibility over the bounded integer box."""
    state = {"nodes": 0}

    def search(lo, hi):
        state["nodes"] += 1
        if node_budget is not None and state["nodes"] > node_budget:
            raise IlpBudgetExceeded(state["nodes"], node_budget)
        if not _propagate(lo, hi, sys.constraints):
            return False
        open_vars = [v for v in range(sys.num_vars) if lo[v] < hi[v]]
        if not open_vars:
            return _check_exact(lo, sys.constraints)
        v = min(open_vars, key=lambda u: hi[u] - lo[u])
        for val in range(lo[v], hi[v] + 1):
            lo2 = lo.copy()
            hi2 = hi.copy()
            lo2[v] = hi2[v] = val
            if search(lo2, hi2):
                return True
        return False

    return search(list(sys.lo), list(sys.hi))
