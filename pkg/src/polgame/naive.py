"""Strategy semantics on expanded trees.

``()`` has a strategy, ``{}`` does not; an opponent node is the meet of its
children and a player node the join.  Counter-strategies use the de Morgan
dual rules, computed by their own recursion so that "exactly one of the two
exists" is something the tests check rather than something assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .games import GameTree
from .syntax import OPP
from .terms import RightMove, TupleTerm


@dataclass(frozen=True)
class EvalCost:
    verdict: bool
    visits: int


def _evaluate(g: GameTree, short_circuit: bool, counter: bool) -> EvalCost:
    """Iterative and/or evaluation that counts node visits.

    For strategies an opponent node is a conjunction; for counter-strategies
    it is a disjunction.  A conjunction stops at the first false child and a
    disjunction at the first true one when ``short_circuit`` is set.
    """
    def is_conj(node):
        return (node.polarity is OPP) != counter

    visits = 1
    # frame: [node, next child index, accumulated value]
    stack = [[g, 0, is_conj(g)]]
    result = None
    while stack:
        frame = stack[-1]
        node, idx, acc = frame
        if result is not None:
            acc = (acc and result) if is_conj(node) else (acc or result)
            frame[2] = acc
            result = None
        decided = acc is not is_conj(node)  # conj went false or disj went true
        if idx == len(node.branches) or (short_circuit and decided):
            stack.pop()
            result = acc
            continue
        frame[1] = idx + 1
        child = node.branches[idx][1]
        visits += 1
        stack.append([child, 0, is_conj(child)])
    return EvalCost(result, visits)


def has_strategy(g: GameTree, short_circuit: bool = True) -> bool:
    return _evaluate(g, short_circuit, counter=False).verdict


def has_counter_strategy(g: GameTree, short_circuit: bool = True) -> bool:
    return _evaluate(g, short_circuit, counter=True).verdict


def eval_cost(g: GameTree, short_circuit: bool = False) -> EvalCost:
    """Verdict together with the number of nodes visited."""
    return _evaluate(g, short_circuit, counter=False)


def _bottom_up(g: GameTree, combine_opp, combine_ply) -> dict:
    """Fold every distinct subtree (keyed by id) after all of its children."""
    table = {}
    stack = [(g, False)]
    while stack:
        node, expanded = stack.pop()
        if id(node) in table:
            continue
        if not expanded:
            stack.append((node, True))
            stack.extend((c, False) for _, c in node.branches if id(c) not in table)
            continue
        kids = [table[id(c)] for _, c in node.branches]
        table[id(node)] = combine_opp(kids) if node.polarity is OPP else combine_ply(kids)
    return table


def count_strategies(g: GameTree) -> int:
    """Meets become products and joins become sums; exact integers."""
    return _bottom_up(g, prod, sum)[id(g)]


def _strategy_table(g: GameTree) -> dict:
    """has_strategy for every distinct subtree, keyed by id."""
    return _bottom_up(g, all, any)


def extract_strategy(g: GameTree):
    """A composition-free strategy term, or ``None`` when none exists.

    Opponent nodes become tuples; at player nodes the leftmost winning move
    is taken.  For a player-rooted ``g`` the result is a mixed term ``>a . t``.
    """
    table = _strategy_table(g)
    if not table[id(g)]:
        return None

    def build(node):
        if node.polarity is OPP:
            return TupleTerm(tuple((b, build(p)) for b, p in node.branches))
        for a, o in node.branches:
            if table[id(o)]:
                return RightMove(a, build(o))
        raise AssertionError("winning player node without a winning move")

    return build(g)
