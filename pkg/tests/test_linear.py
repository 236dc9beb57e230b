import time

import pytest
from hypothesis import given

from polgame.connectives import expand
from polgame.errors import BudgetExceeded, PolarityError
from polgame.generators import chain_formula, nested_bang
from polgame.linear import (hom_reduction_check, linear_counter, linear_eval, linear_value,
                            provable)
from polgame.naive import has_strategy
from polgame.syntax import OPP, Dual, Par, Tensor, ast_size, parse_formula, parse_sequent

from conftest import formulas


def test_base_cases():
    assert linear_value(parse_formula("()")) is True
    assert linear_value(parse_formula("{}")) is False


@pytest.mark.parametrize("text,expected", [
    ("() |-o ()", True),
    ("() |-o (a:{})", False),
    ("(a:{}) |-o ()", True),
    ("{} |-p {}", True),
    ("() |- {}", False),
    ("(a:{}) |- {}", True),
])
def test_provable(text, expected):
    assert provable(parse_sequent(text)) is expected


def test_hom_reduction_examples():
    one = parse_formula("()")
    assert hom_reduction_check(one, one) is True
    assert hom_reduction_check(parse_formula("(a:{})"), one) is True
    with pytest.raises(PolarityError):
        hom_reduction_check(parse_formula("{}"), one)


@given(formulas(pol=OPP, max_depth=2), formulas(pol=OPP, max_depth=2))
def test_hom_reduction_random(o1, o2):
    try:
        hom_reduction_check(o1, o2, node_budget=10**5)
    except BudgetExceeded:
        pass


@given(formulas(max_depth=4))
def test_triad(f):
    try:
        t = expand(f, 10**5)
    except BudgetExceeded:
        return
    assert linear_value(f) == has_strategy(t)


@given(formulas(max_depth=5))
def test_negation_coherence(f):
    assert linear_value(Dual(f)) == (not linear_value(f))
    assert linear_counter(f) == (not linear_value(f))


@given(formulas(pol=OPP, max_depth=3), formulas(pol=OPP, max_depth=3))
def test_tensor_law(a, b):
    assert linear_value(Tensor(a, b)) == (linear_value(a) and linear_value(b))


@given(formulas(pol=OPP, max_depth=3).map(Dual), formulas(pol=OPP, max_depth=3).map(Dual))
def test_par_law(a, b):
    assert linear_value(Par(a, b)) == (linear_value(a) or linear_value(b))


@given(formulas(max_depth=6))
def test_visits_equal_ast_size(f):
    assert linear_eval(f).visits == ast_size(f)


def test_deep_chain_needs_no_recursion():
    f = chain_formula(50_000, seed=1)
    assert linear_eval(f).visits == ast_size(f)


def test_nested_exponentials_are_fast():
    f = nested_bang(3, 8, 3)
    start = time.perf_counter()
    assert linear_value(f) is True
    assert time.perf_counter() - start < 0.05
