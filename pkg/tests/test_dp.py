import random

import pytest
from hypothesis import given

from polgame.connectives import expand
from polgame.dp import (OpCounter, build_graph, dp_cost_bound, eval_dp, op_cost, prop_dyn_bound,
                        prop_dyn_bound_directed, unfold)
from polgame.errors import BudgetExceeded, UnsupportedConnective
from polgame.games import random_game, to_formula
from polgame.naive import has_strategy
from polgame.syntax import OPP, PLY, Bang, OtR, Par, Tensor, parse_formula

from conftest import formulas, games


def test_unit():
    res = eval_dp(parse_formula("()"))
    assert res.verdict is True
    assert res.counter.binary_ops == 0


def test_op_cost():
    assert op_cost(0, False) == 0
    assert op_cost(1, False) == 0
    assert op_cost(3, False) == 2
    assert op_cost(1, True) == 1
    assert op_cost(0, True) == 0


def test_single_node_graph():
    g = build_graph(parse_formula("()"))
    assert g.nodes == 1 and g.edges == 0


def test_par_graph_counts():
    p = parse_formula("{a:(),b:()}")
    g = build_graph(Par(p, p), global_dedup=False)
    no, np_, eo, ep = g.quad()
    assert ep == 4
    assert np_ == 1
    assert no == 4


def test_exponentials_rejected_by_build_graph():
    with pytest.raises(UnsupportedConnective):
        build_graph(Bang(parse_formula("()")))


def test_cost_bound_examples():
    assert dp_cost_bound(parse_formula("()")) == 0
    o = parse_formula("(a:{})")
    assert dp_cost_bound(Tensor(o, o)) == 2


def test_prop_dyn_counterexample_for_plain_accounting():
    # billing single-argument collapses at every state would cost 3 here
    small = parse_formula("{a:(a:{})}")
    other = parse_formula("{a:()}")
    res = eval_dp(Par(small, other))
    assert res.counter.binary_ops <= prop_dyn_bound(expand(small), expand(other)) == 2


@given(formulas(max_depth=4))
def test_agrees_with_naive(f):
    try:
        t = expand(f, 10**5)
    except BudgetExceeded:
        return
    res = eval_dp(f)
    assert res.verdict == has_strategy(t)
    assert eval_dp(f, expand_exponentials=True).verdict == res.verdict


@given(formulas(max_depth=4, exponentials=False))
def test_memo_soundness(f):
    with_memo = eval_dp(f)
    without = eval_dp(f, memo=False)
    assert with_memo.verdict == without.verdict
    assert without.counter.binary_ops >= with_memo.counter.binary_ops
    assert eval_dp(f, global_dedup=False).verdict == with_memo.verdict


@given(formulas(max_depth=4, multiplicative_only=True))
def test_unfold_is_expansion(f):
    try:
        t = expand(f, 10**5)
    except BudgetExceeded:
        return
    assert unfold(build_graph(f, global_dedup=False)) == t
    assert has_strategy(unfold(build_graph(f))) == has_strategy(t)


@given(formulas(max_depth=4, multiplicative_only=True))
def test_cost_within_graph_bound(f):
    assert eval_dp(f).counter.binary_ops <= 4 * dp_cost_bound(f)


@given(games(pol=PLY), games(pol=PLY))
def test_prop_dyn_par(p1, p2):
    res = eval_dp(Par(to_formula(p1), to_formula(p2)))
    assert res.counter.binary_ops <= prop_dyn_bound(p1, p2)


@given(games(pol=PLY), games(pol=OPP))
def test_prop_dyn_directed(p, o):
    res = eval_dp(OtR(to_formula(p), to_formula(o)))
    assert res.counter.binary_ops <= prop_dyn_bound_directed(p, o)


def test_counter_is_fresh_per_call():
    f = parse_formula("par({a:(),b:()},{c:()})")
    assert eval_dp(f).counter == eval_dp(f).counter
    assert isinstance(eval_dp(f).counter, OpCounter)


def test_deterministic_over_seeds():
    rng = random.Random(3)
    for _ in range(50):
        p1 = random_game(3, 3, PLY, rng)
        p2 = random_game(3, 3, PLY, rng)
        f = Par(to_formula(p1), to_formula(p2))
        assert eval_dp(f).counter.binary_ops == eval_dp(f).counter.binary_ops
