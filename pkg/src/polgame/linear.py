"""Linear-time provability: one pass over the formula, never expanding it.

``S(f)`` means "f has a strategy" (for a player formula: a mixed map from 1).
The recursion, one visit per AST node:

    S(()) = true, S({}) = false
    S((b_j : P_j)) = and of S(P_j)         S({a_i : O_i}) = or of S(O_i)
    S(O (x) O') = S(O) and S(O')           S(P (par) P') = S(P) or S(P')
    S(O (x)-> P) = S(O) and S(P)           S(P (par)-> O) = S(P) or S(O)
    S(dual G) = not S(G)                   S(!O) = S(O),  S(?P) = S(P)

Sequents reduce to strategy questions: ``O |-o O'`` and ``O |- P`` hold iff
the left side has no strategy or the right side has one, and ``P |-p P'``
likewise.
"""

from __future__ import annotations

from dataclasses import dataclass

from .connectives import DEFAULT_NODE_BUDGET, expand
from .errors import EngineDisagreement, PolarityError
from .naive import has_strategy
from .syntax import (OPP, Bang, Dual, OppLit, OtL, OtR, OxL, OxR, Par, PlayLit, Quest,
                     Sequent, SequentKind, Tensor)


@dataclass(frozen=True)
class LinearResult:
    value: bool
    visits: int


# how each node kind combines its children's values; "not" for dual, "id" for the
# exponentials; the counter-strategy table swaps and/or and true/false
_STRATEGY_RULES = {
    OppLit: all, PlayLit: any,
    Tensor: all, OxR: all, OxL: all,
    Par: any, OtR: any, OtL: any,
}
_COUNTER_RULES = {
    OppLit: any, PlayLit: all,
    Tensor: any, OxR: any, OxL: any,
    Par: all, OtR: all, OtL: all,
}


def _children(node):
    if isinstance(node, (OppLit, PlayLit)):
        return [br.child for br in node.branches]
    if isinstance(node, (Dual, Bang, Quest)):
        return [node.child]
    return [node.left, node.right]


def _run(f, rules) -> LinearResult:
    visits = 0
    values = []
    # (node, expanded?) pairs; a node is combined once its children's values are on the stack
    stack = [(f, False)]
    while stack:
        node, expanded = stack.pop()
        if not expanded:
            visits += 1
            kids = _children(node)
            stack.append((node, True))
            stack.extend((c, False) for c in reversed(kids))
            continue
        kind = type(node)
        if kind is Dual:
            values.append(not values.pop())
            continue
        if kind is Bang or kind is Quest:
            continue  # the child's value stands
        n = len(node.branches) if kind is OppLit or kind is PlayLit else 2
        if n:
            args = values[-n:]
            del values[-n:]
        else:
            args = ()
        values.append(rules[kind](args))
    return LinearResult(values.pop(), visits)


def linear_eval(f) -> LinearResult:
    """Strategy value together with the number of AST nodes visited."""
    return _run(f, _STRATEGY_RULES)


def linear_value(f) -> bool:
    return _run(f, _STRATEGY_RULES).value


def linear_counter(f) -> bool:
    """Counter-strategy existence by the de Morgan dual rules."""
    return _run(f, _COUNTER_RULES).value


def provable(s: Sequent) -> bool:
    left = linear_value(s.lhs)
    right = linear_value(s.rhs)
    return (not left) or right


def hom_reduction_check(o1, o2, node_budget=DEFAULT_NODE_BUDGET) -> bool:
    """Check that three routes to ``o1 |-o o2`` agree and return the verdict.

    The routes are the sequent rule, the linear strategy values, and naive
    evaluation of the expanded internal-hom game ``dual(o1) (par)-> o2``.
    """
    if o1.polarity is not OPP or o2.polarity is not OPP:
        raise PolarityError("hom_reduction_check needs two opponent formulas")
    by_sequent = provable(Sequent(SequentKind.OPPONENT, o1, o2))
    by_values = (not linear_value(o1)) or linear_value(o2)
    by_tree = has_strategy(expand(OtR(Dual(o1), o2), node_budget))
    if not by_sequent == by_values == by_tree:
        raise EngineDisagreement(
            f"sequent {by_sequent}, linear values {by_values}, expanded hom game {by_tree}")
    return by_sequent
