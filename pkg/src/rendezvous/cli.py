"""Command-line front door: solve, dnumber, lambda, classify, gen, reduce,
verify, serve.

Machine-readable JSON goes to stdout, diagnostics to stderr.  Exit codes:
0 decided, 1 malformed input, 2 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .classes import divider_number_auto, fast_divider_number
from .engine import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    DividerNumberBracket,
    StrategyNode,
    facilitator_wins,
    facilitator_wins_in,
    position_count,
    verify_strategy_tree,
    winning_sets,
)
from .forge import (
    QbfFormula,
    SetCoverInstance,
    gen_clique_spider,
    gen_path_spider,
    random_connected_graph,
    reduce_qbf,
    reduce_qbf_unbounded,
    reduce_set_cover,
)
from .graphs import (
    INF,
    GraphError,
    Instance,
    parse_graph,
    parse_instance,
    serialize_instance,
)
from .ndfpt import divider_wins_in_time_nd
from .recognize import is_chordal, is_p5_free
from .separators import separator_number

EXIT_OK, EXIT_BAD_INPUT, EXIT_BUDGET = 0, 1, 2


def _emit(obj):
    json.dump(obj, sys.stdout, sort_keys=True)
    sys.stdout.write("\n")


def _fail(message, code=EXIT_BAD_INPUT):
    print(f"error: {message}", file=sys.stderr)
    return code


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _jnum(value):
    return "inf" if value == INF else value


def cmd_solve(args) -> int:
    try:
        inst = parse_instance(_read(args.instance))
    except (OSError, GraphError) as exc:
        return _fail(exc)
    tau = args.tau if args.tau is not None else inst.tau
    g, s, t, k = inst.graph, inst.s, inst.t, inst.k
    started = time.monotonic()
    ell_star = None
    try:
        if s == t or g.has_edge(s, t):
            wins, method = True, "adjacent-or-equal"
        elif args.mode == "nd-fpt":
            if tau is None:
                return _fail("nd-fpt mode needs a tau bound")
            diag = {} if args.nd_diagnostics else None
            wins = not divider_wins_in_time_nd(
                g, s, t, k, tau, threads=args.threads, diagnostics=diag,
                tree_budget=args.budget, enum_budget=args.budget,
                ilp_budget=args.budget)
            if diag is not None:
                print(json.dumps(diag, sort_keys=True), file=sys.stderr)
            method = "nd-fpt"
        elif tau is None:
            table = winning_sets(g, k, args.budget)
            wins = facilitator_wins(g, s, t, k, table=table)
            ell_star, method = table.ell_star, "generic"
        else:
            use_nd = args.mode == "auto" and position_count(g.n, k) > args.budget
            if use_nd:
                wins = not divider_wins_in_time_nd(
                    g, s, t, k, tau, threads=args.threads,
                    tree_budget=args.budget, enum_budget=args.budget,
                    ilp_budget=args.budget)
                method = "nd-fpt"
            else:
                wins = facilitator_wins_in(g, s, t, k, tau, args.budget)
                method = "generic"
    except BudgetExceeded as exc:
        print(f"budget exceeded at {exc.stage}: estimate {exc.estimate}", file=sys.stderr)
        return EXIT_BUDGET
    _emit({
        "facilitator_wins": wins,
        "method": method,
        "ell_star": ell_star,
        "elapsed_ms": int((time.monotonic() - started) * 1000),
    })
    return EXIT_OK


def cmd_dnumber(args) -> int:
    try:
        g = parse_graph(_read(args.graph))
    except (OSError, GraphError) as exc:
        return _fail(exc)
    if not (0 <= args.s < g.n and 0 <= args.t < g.n):
        return _fail("s/t out of range")
    lam = separator_number(g, args.s, args.t).value
    try:
        res = divider_number_auto(g, args.s, args.t, args.max_k, args.budget)
    except (BudgetExceeded, DividerNumberBracket) as exc:
        if isinstance(exc, DividerNumberBracket):
            _emit({"d": None, "d_interval": [exc.lo, exc.hi], "lambda": _jnum(lam)})
        else:
            print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    _emit({"d": _jnum(res.value), "lambda": _jnum(lam), "reason": res.reason})
    return EXIT_OK


def cmd_lambda(args) -> int:
    try:
        g = parse_graph(_read(args.graph))
    except (OSError, GraphError) as exc:
        return _fail(exc)
    res = separator_number(g, args.s, args.t)
    _emit({"lambda": _jnum(res.value), "witness": sorted(res.witness)})
    return EXIT_OK


def cmd_classify(args) -> int:
    try:
        g = parse_graph(_read(args.graph))
    except (OSError, GraphError) as exc:
        return _fail(exc)
    from .ndfpt import neighborhood_decomposition

    chordal, _ = is_chordal(g)
    nd = neighborhood_decomposition(g)
    _emit({
        "n": g.n,
        "m": len(g.edges),
        "chordal": chordal,
        "p5_free": is_p5_free(g),
        "neighborhood_diversity": nd.width,
        "modules": [{"vertices": list(m), "kind": k}
                    for m, k in zip(nd.modules, nd.kinds)],
    })
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.family == "clique-spider":
        g, s, t, layout = gen_clique_spider(args.p)
    elif args.family == "path-spider":
        g, s, t, layout = gen_path_spider(args.p)
    else:
        try:
            g = random_connected_graph(args.n, args.prob, args.seed)
        except (ValueError, RuntimeError) as exc:
            return _fail(exc)
        s, t, layout = 0, g.n - 1, {"family": "random", "seed": args.seed}
    inst = Instance(g, s, t, args.k, args.tau)
    sys.stdout.write(serialize_instance(inst, layout) + "\n")
    return EXIT_OK


def cmd_reduce(args) -> int:
    try:
        obj = json.loads(_read(args.file))
    except (OSError, json.JSONDecodeError) as exc:
        return _fail(f"invalid JSON: {exc}")
    try:
        if args.kind == "set-cover":
            inst, layout = reduce_set_cover(SetCoverInstance.from_obj(obj))
        else:
            phi = QbfFormula.from_obj(obj)
            if args.unbounded:
                inst, layout = reduce_qbf_unbounded(phi)
            else:
                inst, layout = reduce_qbf(phi)
    except (GraphError, ValueError) as exc:
        return _fail(exc)
    sys.stdout.write(serialize_instance(inst, layout) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        inst = parse_instance(_read(args.instance))
        tree = StrategyNode.from_obj(json.loads(_read(args.strategy)))
    except (OSError, GraphError, ValueError, json.JSONDecodeError) as exc:
        return _fail(exc)
    tau = args.tau if args.tau is not None else inst.tau
    if tau is None:
        return _fail("a tau bound is required (flag or instance field)")
    ok, reason = verify_strategy_tree(inst.graph, inst.s, inst.t, inst.k, tau, tree)
    print("valid" if ok else f"invalid: {reason}")
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(budget=args.budget, log_dir=args.log_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="rendezvous", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="position / candidate budget")
        p.add_argument("--threads", type=int, default=max(1, os.cpu_count() or 1),
                       help="candidate-evaluation parallelism (nd-fpt)")

    p = sub.add_parser("solve", help="decide whether the facilitator wins")
    p.add_argument("--instance", required=True)
    p.add_argument("--tau", type=int, help="override the instance step bound")
    p.add_argument("--mode", choices=("auto", "generic", "nd-fpt"), default="auto")
    p.add_argument("--nd-diagnostics", action="store_true",
                   help="nd-fpt mode: dump candidate counts and the first "
                        "feasible candidate as JSON on stderr")
    common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("dnumber", help="divider number with fast paths")
    p.add_argument("--graph", required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--max-k", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_dnumber)

    p = sub.add_parser("lambda", help="separator number and witness")
    p.add_argument("--graph", required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("classify", help="graph-class report")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("gen", help="emit a generated instance")
    gsub = p.add_subparsers(dest="family", required=True)
    for fam in ("clique-spider", "path-spider"):
        fp = gsub.add_parser(fam)
        fp.add_argument("--p", type=int, required=True)
        fp.add_argument("--k", type=int, default=1)
        fp.add_argument("--tau", type=int, default=None)
        fp.set_defaults(func=cmd_gen)
    fp = gsub.add_parser("random")
    fp.add_argument("--n", type=int, required=True)
    fp.add_argument("--prob", type=float, required=True)
    fp.add_argument("--seed", type=int, required=True)
    fp.add_argument("--k", type=int, default=1)
    fp.add_argument("--tau", type=int, default=None)
    fp.set_defaults(func=cmd_gen)

    p = sub.add_parser("reduce", help="build a hardness-reduction instance")
    p.add_argument("kind", choices=("set-cover", "qbf"))
    p.add_argument("--file", required=True)
    p.add_argument("--unbounded", action="store_true",
                   help="qbf only: the unbounded-game construction")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", help="check a divider strategy certificate")
    p.add_argument("--instance", required=True)
    p.add_argument("--strategy", required=True)
    p.add_argument("--tau", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("serve", help="run the arena session service")
    p.add_argument("--port", type=int, default=8023)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--log-dir", default=None,
                   help="append per-session JSONL event logs here")
    p.set_defaults(func=cmd_serve)
    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
