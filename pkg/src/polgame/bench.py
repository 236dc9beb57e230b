"""Benchmark suites.  Each writes ``<suite>.csv`` and ``<suite>.png`` into an
output directory and returns its rows.

* ``engines``: naive, dp and linear evaluation on random formulas and on
  nested exponentials, where naive expansion runs out of budget;
* ``growth``: uniform size of ``par(A_2n, A_2m)`` (polynomial) and
  ``par(L_2n, L_2m)`` (exponential);
* ``shortcircuit``: mean nodes visited by full and short-circuit naive
  evaluation of random trees, per depth.
"""

from __future__ import annotations

import csv
import time
from math import comb
from pathlib import Path

from .connectives import expand
from .dp import eval_dp
from .errors import BudgetExceeded, TimeoutExceeded
from .games import measure, random_game
from .generators import family_par, nested_bang, random_formula
from .linear import linear_eval
from .naive import eval_cost
from .plotting import plot_engines, plot_growth, plot_shortcircuit
from .syntax import OPP

SUITES = ("engines", "growth", "shortcircuit")
DEFAULT_SIZES = {"engines": [1, 2, 3, 4], "growth": [0, 1, 2, 3, 4], "shortcircuit": [2, 4, 6, 8]}


def _timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def _run_engine(engine, f, max_nodes, timeout_ms):
    deadline = time.perf_counter() + timeout_ms / 1000
    try:
        if engine == "naive":
            res, secs = _timed(lambda: eval_cost(expand(f, max_nodes, deadline), short_circuit=False))
            return res.verdict, res.visits, secs, "ok"
        if engine == "dp":
            res, secs = _timed(lambda: eval_dp(f, node_budget=max_nodes, deadline=deadline))
            return res.verdict, res.counter.binary_ops, secs, "ok"
        res, secs = _timed(lambda: linear_eval(f))
        return res.value, res.visits, secs, "ok"
    except BudgetExceeded:
        return None, None, None, "budget"
    except TimeoutExceeded:
        return None, None, None, "timeout"


def bench_engines(sizes, seed=0, seeds=3, max_nodes=10**6, timeout_ms=10_000):
    rows = []
    for size in sizes:
        instances = [("random", s, random_formula(seed + s, OPP, depth=2 * size, leaf_depth=3,
                                                  leaf_branch=3, exponentials=False))
                     for s in range(seeds)]
        instances.append(("bang", 0, nested_bang(size, 3, 2)))
        for family, s, f in instances:
            for engine in ("naive", "dp", "linear"):
                verdict, ops, secs, status = _run_engine(engine, f, max_nodes, timeout_ms)
                rows.append({"suite": "engines", "family": family, "size": size,
                             "seed": seed + s, "engine": engine, "verdict": verdict,
                             "time_s": secs, "ops": ops, "status": status})
    rows.sort(key=lambda r: (r["family"], r["size"], r["seed"]))
    return rows


def bench_growth(sizes, seed=0):
    rows = []
    for n in sizes:
        for m in sizes:
            for family in ("A", "L"):
                rep = measure(expand(family_par(family, 2 * n, 2 * m)))
                rows.append({"suite": "growth", "family": family, "n": n, "m": m,
                             "size": n + m, "seed": seed, "usize": rep.usize,
                             "leaves": rep.leaves, "nodes": rep.nodes,
                             "binomial": comb(n + m, n), "poly_bound": 2 ** (2 * n + 2 * m)})
    rows.sort(key=lambda r: (r["size"], r["seed"], r["family"], r["n"]))
    return rows


def bench_shortcircuit(sizes, seed=0, seeds=1000, max_branch=3):
    rows = []
    for depth in sizes:
        short = full = 0
        true_count = 0
        for s in range(seeds):
            g = random_game(depth, max_branch, OPP, seed + s)
            a = eval_cost(g, short_circuit=True)
            b = eval_cost(g, short_circuit=False)
            short += a.visits
            full += b.visits
            true_count += a.verdict
        rows.append({"suite": "shortcircuit", "depth": depth, "size": depth, "seed": seed,
                     "seeds": seeds, "mean_visits_short": short / seeds,
                     "mean_visits_full": full / seeds, "fraction_true": true_count / seeds})
    return rows


def write_csv(rows, path):
    fields = list(rows[0]) if rows else []
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=fields)
        writer.writeheader()
        writer.writerows(rows)


def run_suite(suite, out_dir, sizes=None, seed=0, seeds=None, max_nodes=10**6, timeout_ms=10_000):
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    sizes = sizes or DEFAULT_SIZES[suite]
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    if suite == "engines":
        rows = bench_engines(sizes, seed, seeds or 3, max_nodes, timeout_ms)
        plot = plot_engines
    elif suite == "growth":
        rows = bench_growth(sizes, seed)
        plot = plot_growth
    else:
        rows = bench_shortcircuit(sizes, seed, seeds or 1000)
        plot = plot_shortcircuit
    csv_path, png_path = out / f"{suite}.csv", out / f"{suite}.png"
    write_csv(rows, csv_path)
    plot(rows, png_path)
    return rows, csv_path, png_path
