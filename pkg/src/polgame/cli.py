"""The ``polgame`` command line.

Exit codes: 0 when the answer is true (or the command simply succeeded),
1 when a decision command answers false, 2 on any error.  Every command
accepts ``--json``, which prints a single record with the keys
``command``, ``seed``, ``engine``, ``verdict`` or ``value``, and ``stats``.
Formula, sequent and term arguments may be given inline, as a file path, or
as ``-`` to read standard input.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time

from . import bench
from .analytics import graph_profile, graph_size, tree_profile
from .connectives import DEFAULT_NODE_BUDGET, expand
from .dp import build_graph, dp_cost_bound, eval_dp
from .errors import PolgameError, UnsupportedConnective
from .games import measure, print_game, profile, random_game
from .generators import random_formula
from .linear import linear_eval, provable
from .morphisms import (STRATEGIES, TermGenerator, hom_formula, normalize, sequent_of_games,
                        strategy_to_proof, typecheck)
from .naive import count_strategies, eval_cost, extract_strategy
from .syntax import (OPP, PLY, Sequent, ast_size, parse_formula, parse_sequent, print_formula,
                     print_sequent, sequent_kind_for)
from .terms import parse_judgement, print_term


class _Ctx:
    """Budget, deadline and output settings shared by the commands."""

    def __init__(self, args):
        self.args = args
        self.max_nodes = args.max_nodes
        self.deadline = time.perf_counter() + args.timeout_ms / 1000

    def expand(self, f):
        return expand(f, self.max_nodes, self.deadline)


def _read(text: str) -> str:
    if text == "-":
        return sys.stdin.read()
    if os.path.isfile(text):
        with open(text) as fh:
            return fh.read()
    return text


def _compact(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _emit(ctx, command, result_key, result, stats, lines=(), engine=None):
    """Print either the JSON record or the human-readable lines."""
    args = ctx.args
    if args.json:
        record = {"command": command, "seed": args.seed, "engine": engine,
                  result_key: result, "stats": stats}
        print(json.dumps(record, sort_keys=False))
    else:
        for line in lines:
            print(line)


def _verdict_text(v: bool) -> str:
    return "true" if v else "false"


# --------------------------------------------------------------------------
# decision commands

def _witness_for_sequent(ctx, s: Sequent):
    hom = ctx.expand(hom_formula(s))
    strategy = extract_strategy(hom)
    if strategy is None:
        return None
    return strategy_to_proof(strategy, s, ctx.max_nodes)


def cmd_prove(ctx) -> int:
    args = ctx.args
    s = parse_sequent(_read(args.sequent))
    stats = {}
    if args.engine == "linear":
        verdict = provable(s)
        stats["visits"] = linear_eval(s.lhs).visits + linear_eval(s.rhs).visits
    elif args.engine == "dp":
        res = eval_dp(hom_formula(s), node_budget=ctx.max_nodes, deadline=ctx.deadline)
        verdict = res.verdict
        stats.update(binary_ops=res.counter.binary_ops, memo_hits=res.counter.memo_hits,
                     states=res.states)
    else:
        cost = eval_cost(ctx.expand(hom_formula(s)), short_circuit=True)
        verdict = cost.verdict
        stats["visits"] = cost.visits
    lines = [_verdict_text(verdict)]
    if args.witness and verdict:
        proof = _witness_for_sequent(ctx, s)
        stats["witness"] = print_term(proof)
        lines.append(print_term(proof, args.unicode))
    _emit(ctx, "prove", "verdict", verdict, stats, lines, args.engine)
    return 0 if verdict else 1


def cmd_eval(ctx) -> int:
    args = ctx.args
    f = parse_formula(_read(args.formula))
    stats = {}
    witness = None
    if args.engine == "naive":
        g = ctx.expand(f)
        cost = eval_cost(g, short_circuit=args.short_circuit)
        verdict = cost.verdict
        stats["visits"] = cost.visits
        stats.update(measure(g).to_json())
        if args.count:
            stats["strategies"] = count_strategies(g)
        if args.witness:
            witness = extract_strategy(g)
    elif args.engine == "dp":
        res = eval_dp(f, memo=not args.no_memo, global_dedup=not args.no_global_dedup,
                      expand_exponentials=args.expand_exponentials,
                      node_budget=ctx.max_nodes, deadline=ctx.deadline)
        verdict = res.verdict
        try:
            bound = dp_cost_bound(f)
        except UnsupportedConnective:
            bound = None
        stats.update(verdict=verdict, binary_ops=res.counter.binary_ops,
                     memo_hits=res.counter.memo_hits, bound=bound, states=res.states)
    else:
        res = linear_eval(f)
        verdict = res.value
        stats.update(visits=res.visits, ast_size=ast_size(f))
    if args.engine != "naive" and (args.count or args.witness):
        g = ctx.expand(f)
        if args.count:
            stats["strategies"] = count_strategies(g)
        if args.witness:
            witness = extract_strategy(g)
    lines = [_verdict_text(verdict)]
    if args.stats or args.count:
        lines.append("stats: " + json.dumps(stats))
    if witness is not None:
        stats["witness"] = print_term(witness)
        lines.append(print_term(witness, args.unicode))
    _emit(ctx, "eval", "verdict", verdict, stats, lines, args.engine)
    return 0 if verdict else 1


def cmd_extract(ctx) -> int:
    args = ctx.args
    s = parse_sequent(_read(args.sequent))
    if not provable(s):
        _emit(ctx, "extract", "verdict", False, {}, ["not provable"], "linear")
        return 1
    proof = _witness_for_sequent(ctx, s)
    text = print_term(proof)
    _emit(ctx, "extract", "verdict", True, {"witness": text},
          [print_term(proof, args.unicode)], "linear")
    return 0


# --------------------------------------------------------------------------
# reporting commands

def cmd_expand(ctx) -> int:
    f = parse_formula(_read(ctx.args.formula))
    g = ctx.expand(f)
    text = print_game(g)
    _emit(ctx, "expand", "value", text, measure(g).to_json(), [text])
    return 0


def cmd_size(ctx) -> int:
    args = ctx.args
    f = parse_formula(_read(args.formula))
    if args.graph:
        graph = build_graph(f, global_dedup=False, node_budget=ctx.max_nodes)
        no, np_, eo, ep = graph.quad()
        value = {"nodes_o": no, "nodes_p": np_, "edges_o": eo, "edges_p": ep}
        try:
            stats = {"formula": graph_size(f).to_json()}
        except UnsupportedConnective:
            stats = {"formula": None}
    else:
        value = measure(ctx.expand(f)).to_json()
        stats = {}
    _emit(ctx, "size", "value", value, stats, [json.dumps(value)])
    return 0


def cmd_profile(ctx) -> int:
    args = ctx.args
    f = parse_formula(_read(args.formula))
    if args.graph:
        if args.measured:
            value = build_graph(f, global_dedup=False, node_budget=ctx.max_nodes).profile()
        else:
            value = graph_profile(f)
    else:
        value = profile(ctx.expand(f)) if args.measured else tree_profile(f)
    source = "measured" if args.measured else "formula"
    _emit(ctx, "profile", "value", value, {"source": source, "graph": args.graph},
          [_compact(value)])
    return 0


def cmd_count(ctx) -> int:
    f = parse_formula(_read(ctx.args.formula))
    n = count_strategies(ctx.expand(f))
    _emit(ctx, "count", "value", n, {}, [str(n)], "naive")
    return 0


def cmd_normalize(ctx) -> int:
    args = ctx.args
    term, s = parse_judgement(_read(args.judgement))
    typed = typecheck(term, s, ctx.max_nodes)
    steps = []
    nf = normalize(typed.term, strategy=args.strategy, max_steps=args.max_steps,
                   seed=args.seed, trace=steps)
    text = print_term(nf)
    _emit(ctx, "normalize", "value", text, {"steps": len(steps), "strategy": args.strategy},
          [print_term(nf, args.unicode)])
    return 0


def cmd_random(ctx) -> int:
    args = ctx.args
    pol = OPP if args.polarity == "o" else PLY
    rng = random.Random(args.seed)
    if args.kind == "formula":
        text = print_formula(random_formula(rng, pol, depth=args.depth))
    elif args.kind == "game":
        text = print_game(random_game(args.depth, args.branch, pol, rng))
    elif args.kind == "sequent":
        lhs = random_formula(rng, OPP, depth=args.depth)
        rhs = random_formula(rng, pol, depth=args.depth)
        text = print_sequent(Sequent(sequent_kind_for(OPP, pol), lhs, rhs))
    else:
        gen = TermGenerator(rng)
        kind = "o" if pol is OPP else "m"
        x, y = gen.provable_games(kind, depth=args.depth, branch=args.branch)
        t = gen.term(x, y, kind)
        text = f"{print_term(t)} :: {print_sequent(sequent_of_games(x, y, kind))}"
    _emit(ctx, "random", "value", text, {"kind": args.kind}, [text])
    return 0


def cmd_bench(ctx) -> int:
    args = ctx.args
    sizes = [int(x) for x in args.sizes.split(",")] if args.sizes else None
    rows, csv_path, png_path = bench.run_suite(args.suite, args.out, sizes, args.seed,
                                               args.seeds, ctx.max_nodes, args.timeout_ms)
    stats = {"rows": len(rows), "csv": str(csv_path), "figure": str(png_path)}
    if args.suite == "engines":
        by_key = {}
        for r in rows:
            if r["engine"] in ("dp", "linear") and r["status"] == "ok":
                by_key.setdefault((r["family"], r["size"], r["seed"]), set()).add(r["verdict"])
        stats["dp_linear_agree"] = all(len(v) == 1 for v in by_key.values())
        stats["naive_failures"] = sum(1 for r in rows if r["status"] != "ok")
    lines = [f"{args.suite}: {len(rows)} rows", f"csv: {csv_path}", f"figure: {png_path}"]
    lines += [_compact({k: v for k, v in r.items() if k != "suite"}) for r in rows]
    _emit(ctx, "bench", "value", rows, stats, lines)
    return 0


# --------------------------------------------------------------------------
# argument parsing

COMMANDS = {
    "prove": cmd_prove, "eval": cmd_eval, "expand": cmd_expand, "size": cmd_size,
    "profile": cmd_profile, "count": cmd_count, "extract": cmd_extract,
    "normalize": cmd_normalize, "random": cmd_random, "bench": cmd_bench,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print one JSON record")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-nodes", type=int, default=DEFAULT_NODE_BUDGET,
                        help="node budget for expansion (default 10^6)")
    common.add_argument("--timeout-ms", type=int, default=10_000,
                        help="wall-clock limit for expansion and dp (default 10000)")
    common.add_argument("--unicode", action="store_true", help="print terms with unicode arrows")

    parser = argparse.ArgumentParser(prog="polgame", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("prove", parents=[common], help="decide a sequent")
    p.add_argument("sequent")
    p.add_argument("--engine", choices=["linear", "dp", "naive"], default="linear")
    p.add_argument("--witness", action="store_true", help="also print a normal proof")

    p = sub.add_parser("eval", parents=[common], help="does a formula have a strategy")
    p.add_argument("formula")
    p.add_argument("--engine", choices=["naive", "dp", "linear"], default="linear")
    p.add_argument("--short-circuit", action="store_true")
    p.add_argument("--count", action="store_true", help="count strategies (expands)")
    p.add_argument("--witness", action="store_true", help="print a strategy term (expands)")
    p.add_argument("--stats", action="store_true")
    p.add_argument("--no-memo", action="store_true")
    p.add_argument("--no-global-dedup", action="store_true")
    p.add_argument("--expand-exponentials", action="store_true")

    p = sub.add_parser("expand", parents=[common], help="print the game tree of a formula")
    p.add_argument("formula")

    p = sub.add_parser("size", parents=[common], help="node and edge counts")
    p.add_argument("formula")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--tree", action="store_true", help="expanded tree (default)")
    mode.add_argument("--graph", action="store_true", help="graph game without global sharing")

    p = sub.add_parser("profile", parents=[common], help="nodes per depth")
    p.add_argument("formula")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--formula", dest="measured", action="store_false",
                     help="closed-form profile (default)")
    src.add_argument("--measured", dest="measured", action="store_true")
    p.add_argument("--graph", action="store_true")

    p = sub.add_parser("count", parents=[common], help="number of strategies")
    p.add_argument("formula")

    p = sub.add_parser("extract", parents=[common], help="a normal proof of a sequent")
    p.add_argument("sequent")

    p = sub.add_parser("normalize", parents=[common], help="cut elimination")
    p.add_argument("judgement", help='"<term> :: <sequent>"')
    p.add_argument("--strategy", choices=list(STRATEGIES), default="innermost")
    p.add_argument("--max-steps", type=int, default=100_000)

    p = sub.add_parser("random", parents=[common], help="random instances")
    p.add_argument("--kind", choices=["formula", "game", "sequent", "term"], default="formula")
    p.add_argument("--polarity", choices=["o", "p"], default="o")
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--branch", type=int, default=2)

    p = sub.add_parser("bench", parents=[common], help="benchmark suites")
    p.add_argument("suite", choices=list(bench.SUITES))
    p.add_argument("--sizes", help="comma separated size parameters")
    p.add_argument("--seeds", type=int, default=None, help="instances per size")
    p.add_argument("--out", default="bench_out", help="directory for CSV and PNG output")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](_Ctx(args))
    except PolgameError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RecursionError:
        print("error: input nested too deeply", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
