"""Acceptance criteria, one test each.  Every test prints a PASS/FAIL line;
the lines are also collected in the pytest terminal summary.

Run alone with ``pytest tests/test_acceptance.py -v``.
"""

import gc
import random
import time
from math import comb, factorial

from polgame.analytics import (bang_edge_bound, edge_bound_from_profile, graph_profile,
                               graph_size, profile_oxr, profile_tensor)
from polgame.connectives import expand
from polgame.dp import build_graph, eval_dp, prop_dyn_bound
from polgame.errors import BudgetExceeded
from polgame.games import measure, profile, random_game, to_formula
from polgame.generators import chain_formula, family_par, nested_bang, random_formula
from polgame.linear import linear_eval, linear_value
from polgame.morphisms import (COMPOSABLE_TRIPLES, Compose, ProofSearch, TermGenerator,
                               compose_kind, enumerate_proofs, hom_formula, normalize,
                               sequent_of_games, typecheck, typecheck_games)
from polgame.naive import count_strategies, has_strategy
from polgame.syntax import OPP, PLY, Bang, OxR, Par, Tensor, ast_size, parse_formula, parse_sequent
from polgame.terms import parse_term, print_term


def _best_time(fn, repeats=5):
    best = float("inf")
    gc.disable()
    try:
        for _ in range(repeats):
            start = time.perf_counter()
            fn()
            best = min(best, time.perf_counter() - start)
    finally:
        gc.enable()
    return best


def test_criterion_01_golden_profile(acceptance):
    o = parse_formula("(2:{2:()})")
    p = parse_formula("{1:(),1:(2:{})}")
    golden = [1, 2, 6, 8, 8]
    measured = profile(expand(OxR(o, p)))
    formula = profile_oxr([1, 2, 4], [1, 2, 2])
    secs = _best_time(lambda: (profile(expand(OxR(o, p))), profile_oxr([1, 2, 4], [1, 2, 2])))
    ok = measured == golden and formula == golden and secs < 1e-3
    acceptance(1, "golden profile", ok, f"measured {measured}, formula {formula}, "
               f"{secs * 1e3:.3f} ms")


def test_criterion_02_profile_formulas(acceptance):
    start = time.perf_counter()
    pairs = mismatches = 0
    for seed in range(500):
        rng = random.Random(seed)
        o = random_game(rng.randint(0, 5), 3, OPP, rng)
        o2 = random_game(rng.randint(0, 5), 3, OPP, rng)
        p = random_game(rng.randint(0, 5), 3, PLY, rng)
        fo, fo2, fp = to_formula(o), to_formula(o2), to_formula(p)
        if profile_tensor(profile(o), profile(o2)) != profile(expand(Tensor(fo, fo2))):
            mismatches += 1
        if profile_oxr(profile(o), profile(p)) != profile(expand(OxR(fo, fp))):
            mismatches += 1
        pairs += 2
    secs = time.perf_counter() - start
    ok = pairs >= 500 and mismatches == 0 and secs < 30
    acceptance(2, "profile formulas", ok, f"{pairs} pairs, {mismatches} mismatches, "
               f"{secs:.2f} s")


def test_criterion_03_exponential_laws(acceptance):
    start = time.perf_counter()
    leaf_failures = []
    for n in range(1, 5):
        for m in range(1, 4):
            leaves = measure(expand(Bang(parse_formula(f"({n}:{{{m}:()}})")))).leaves
            if leaves != factorial(n) * m ** n:
                leaf_failures.append((n, m, leaves))
    rng = random.Random(0)
    checked = edge_failures = 0
    while checked < 100:
        o = random_game(rng.randint(2, 3), 3, OPP, rng)
        m = measure(o)
        if m.depth < 2 or m.edges_p == 0:
            continue
        checked += 1
        if measure(expand(Bang(to_formula(o)))).edges > bang_edge_bound(m.edges_o, m.edges_p):
            edge_failures += 1
    secs = time.perf_counter() - start
    ok = not leaf_failures and edge_failures == 0 and secs < 10
    acceptance(3, "exponential laws", ok, f"leaf failures {leaf_failures}, "
               f"edge bound failures {edge_failures}/{checked}, {secs:.2f} s")


def test_criterion_04_engine_triad(acceptance):
    start = time.perf_counter()
    checked = disagreements = over_budget = 0
    seed = 0
    while checked < 2000:
        rng = random.Random(seed)
        seed += 1
        f = random_formula(rng, rng.choice([OPP, PLY]), depth=rng.randint(1, 4))
        try:
            tree = expand(f, 10**5)
        except BudgetExceeded:
            over_budget += 1
            continue
        checked += 1
        if not linear_value(f) == eval_dp(f).verdict == has_strategy(tree):
            disagreements += 1
    secs = time.perf_counter() - start
    ok = disagreements == 0 and secs < 60
    acceptance(4, "engine triad", ok, f"{checked} formulas, {disagreements} disagreements, "
               f"{over_budget} over budget, {secs:.2f} s")


def test_criterion_05_prop_dyn(acceptance):
    start = time.perf_counter()
    violations = 0
    tight = 0
    for seed in range(500):
        rng = random.Random(seed)
        p1 = random_game(rng.randint(0, 4), 3, PLY, rng)
        p2 = random_game(rng.randint(0, 4), 3, PLY, rng)
        ops = eval_dp(Par(to_formula(p1), to_formula(p2))).counter.binary_ops
        bound = prop_dyn_bound(p1, p2)
        violations += ops > bound
        tight += ops == bound
    secs = time.perf_counter() - start
    ok = violations == 0 and secs < 30
    acceptance(5, "dp operation bound", ok, f"500 pairs, {violations} violations, "
               f"{tight} tight, {secs:.2f} s")


def test_criterion_06_graph_sizing(acceptance):
    start = time.perf_counter()
    checked = size_mismatches = edge_violations = 0
    seed = 0
    while checked < 500:
        rng = random.Random(seed)
        seed += 1
        f = random_formula(rng, rng.choice([OPP, PLY]), depth=rng.randint(1, 4),
                           multiplicative_only=True)
        graph = build_graph(f, global_dedup=False)
        quad = graph_size(f)
        checked += 1
        if graph.quad() != (quad.nodes_o, quad.nodes_p, quad.edges_o, quad.edges_p):
            size_mismatches += 1
        if graph.edges > edge_bound_from_profile(graph_profile(f)):
            edge_violations += 1
    secs = time.perf_counter() - start
    ok = size_mismatches == 0 and edge_violations == 0 and secs < 30
    acceptance(6, "graph sizing", ok, f"{checked} formulas, {size_mismatches} size mismatches, "
               f"{edge_violations} edge bound violations, {secs:.2f} s")


def test_criterion_07_growth_witnesses(acceptance):
    exponential_misses = []
    off_by_one = 0
    for n in range(5):
        for m in range(5):
            rep = measure(expand(family_par("L", 2 * n, 2 * m)))
            if rep.usize != comb(n + m, n):
                exponential_misses.append((n, m))
            off_by_one += rep.usize == comb(n + m, n) - 1 and rep.leaves == comb(n + m, n)
    polynomial_misses = []
    for n in range(4):
        for m in range(4):
            usize = measure(expand(family_par("A", 2 * n, 2 * m))).usize
            if usize > 2 ** (2 * n + 2 * m):
                polynomial_misses.append((n, m, usize))
    l44 = measure(expand(family_par("L", 4, 4)))
    ok = not exponential_misses and not polynomial_misses
    detail = (f"A family: {len(polynomial_misses)}/16 violations; L family: "
              f"{len(exponential_misses)}/25 differ from C(n+m,n), and on {off_by_one}/25 "
              f"usize = C(n+m,n)-1 with leaves = C(n+m,n); par(L_4,L_4) has usize "
              f"{l44.usize}, leaves {l44.leaves}, C(4,2) = {comb(4, 2)}")
    acceptance(7, "growth witnesses", ok, detail)


def test_criterion_08_cut_elimination(acceptance):
    start = time.perf_counter()
    gen = TermGenerator(seed=8)
    order_failures = 0
    for i in range(1000):
        kind = gen.rng.choice("omp")
        x, y = gen.provable_games(kind)
        typed = typecheck_games(gen.term(x, y, kind), x, y, kind)
        forms = {normalize(typed, "innermost"), normalize(typed, "outermost"),
                 normalize(typed, "random", seed=i)}
        order_failures += len(forms) != 1
    s = parse_sequent("(a:{},b:{}) |- {a:(),b:()}")
    worked = parse_term("(a -> >c . (), b -> >e . ()) ; <b . {e -> >a . (), f -> >b . ()}")
    worked_nf = print_term(normalize(typecheck(worked, s)), unicode=True)
    assoc_failures = 0
    for _ in range(200):
        kinds = gen.rng.choice(COMPOSABLE_TRIPLES)
        g = gen.chain(kinds)
        f, h, k = (gen.term(g[j], g[j + 1], kinds[j]) for j in range(3))
        kind = compose_kind(compose_kind(kinds[0], kinds[1]), kinds[2])
        left = normalize(typecheck_games(Compose(Compose(f, h), k), g[0], g[3], kind))
        right = normalize(typecheck_games(Compose(f, Compose(h, k)), g[0], g[3], kind))
        assoc_failures += left != right
    secs = time.perf_counter() - start
    ok = order_failures == 0 and worked_nf == "→a · ()" and assoc_failures == 0
    acceptance(8, "cut elimination", ok, f"1000 terms, {order_failures} order failures, "
               f"worked example {worked_nf!r}, 200 triples, {assoc_failures} associativity "
               f"failures, {secs:.2f} s")


def test_criterion_09_proof_strategy_bijection(acceptance):
    rng = random.Random(9)
    mismatches = 0
    largest = 0
    for _ in range(300):
        x = random_game(rng.randint(0, 3), 2, OPP, rng)
        y = random_game(rng.randint(0, 3), 2, OPP, rng)
        s = sequent_of_games(x, y, "o")
        enumerated = sum(1 for _ in enumerate_proofs(x, y, "o"))
        largest = max(largest, enumerated)
        if enumerated != count_strategies(expand(hom_formula(s))):
            mismatches += 1
        if enumerated != ProofSearch().count(x, y, "o"):
            mismatches += 1
    example = parse_sequent("(a:{},b:{}) |-o (a:{c:(),d:()}, b:{e:(),f:()})")
    example_count = count_strategies(expand(hom_formula(example)))
    ok = mismatches == 0 and example_count >= 4
    acceptance(9, "proof/strategy bijection", ok, f"300 sequents, {mismatches} mismatches, "
               f"largest count {largest}, example hom game count {example_count}")


def test_criterion_10_linear_engine(acceptance):
    visit_failures = 0
    for seed in range(300):
        f = random_formula(seed, OPP if seed % 2 else PLY, depth=5)
        visit_failures += linear_eval(f).visits != ast_size(f)
    n = 100_000
    chains = {k: chain_formula(k * n, seed=10) for k in (1, 2, 4)}
    for f in chains.values():
        visit_failures += linear_eval(f).visits != ast_size(f)
    times = {k: _best_time(lambda f=f: linear_eval(f), repeats=5) for k, f in chains.items()}
    ratios = [times[2] / times[1], times[4] / times[2]]
    bang = nested_bang(2, 8, 3)
    linear_secs = _best_time(lambda: linear_value(bang), repeats=3)
    try:
        expand(bang, 10**6)
        naive_blew_up = False
    except BudgetExceeded:
        naive_blew_up = True
    ok = (visit_failures == 0 and all(1.5 <= r <= 3 for r in ratios)
          and naive_blew_up and linear_secs < 0.01)
    acceptance(10, "linear engine", ok, f"visit mismatches {visit_failures}, time ratios "
               f"{ratios[0]:.2f} and {ratios[1]:.2f}, naive over 10^6 budget: {naive_blew_up}, "
               f"linear on the same instance {linear_secs * 1e3:.2f} ms")
