"""Expansion of compound formulas into explicit game trees, and shape isomorphism.

Every connective is unfolded by its inductive definition.  Branches of a
compound node are tagged ``L.`` or ``R.`` by the operand they came from, left
operand first.  The exponentials unfold through iterated tensors (bang) and
pars (quest), so they are guarded by a node budget.
"""

from __future__ import annotations

import time
from functools import reduce

from .errors import BudgetExceeded, TimeoutExceeded
from .games import GameTree
from .syntax import (OPP, PLY, Bang, Binary, Dual, OppLit, OtL, OtR, OxL, OxR, Par,
                     PlayLit, Quest, Tensor)

DEFAULT_NODE_BUDGET = 10**6


class Expander:
    """Tree-level connectives sharing one budget and one memo table."""

    def __init__(self, node_budget=DEFAULT_NODE_BUDGET, deadline=None):
        if node_budget <= 0:
            raise ValueError("node_budget must be positive")
        self.budget = node_budget
        self.deadline = deadline
        self.produced = 0
        self.memo = {}
        self._keep = []  # keeps memo-key operands alive so ids stay unique

    def node(self, pol, branches):
        t = GameTree(pol, branches)
        self.produced += 1
        if t.size > self.budget:
            raise BudgetExceeded(self.budget, max(self.produced, t.size))
        if self.deadline is not None and self.produced % 2048 == 0 \
                and time.perf_counter() > self.deadline:
            raise TimeoutExceeded("expansion timed out")
        return t

    def _cached(self, tag, a, b, build):
        key = (tag, id(a), id(b))
        hit = self.memo.get(key)
        if hit is None:
            self._keep.append((a, b))
            hit = self.memo[key] = build()
        return hit

    # O (x) O'
    def tensor(self, o1, o2):
        return self._cached("ox", o1, o2, lambda: self.node(OPP, [
            *(("L." + b, self.oxl(p, o2)) for b, p in o1.branches),
            *(("R." + b, self.oxr(o1, p)) for b, p in o2.branches)]))

    # O (x)-> P = {a_j : O (x) O_j}
    def oxr(self, o, p):
        return self._cached("oxr", o, p, lambda: self.node(PLY, [
            ("R." + a, self.tensor(o, oj)) for a, oj in p.branches]))

    # P <-(x) O = {a_j : O_j (x) O}
    def oxl(self, p, o):
        return self._cached("oxl", p, o, lambda: self.node(PLY, [
            ("L." + a, self.tensor(oj, o)) for a, oj in p.branches]))

    def par(self, p1, p2):
        return self._cached("par", p1, p2, lambda: self.node(PLY, [
            *(("L." + a, self.otl(o, p2)) for a, o in p1.branches),
            *(("R." + a, self.otr(p1, o)) for a, o in p2.branches)]))

    # P (par)-> O = (b_i : P par P_i)
    def otr(self, p, o):
        return self._cached("otr", p, o, lambda: self.node(OPP, [
            ("R." + b, self.par(p, pi)) for b, pi in o.branches]))

    # O <-(par) P = (b_i : P_i par P)
    def otl(self, o, p):
        return self._cached("otl", o, p, lambda: self.node(OPP, [
            ("L." + b, self.par(pi, p)) for b, pi in o.branches]))

    def dual(self, g):
        return self._cached("dual", g, None, lambda: self.node(
            g.polarity.flip(), [(lab, self.dual(c)) for lab, c in g.branches]))

    def bang(self, o):
        # !() = (); otherwise the tensor over i of (b_i : !'P_i)
        if not o.branches:
            return o
        def build():
            units = [self.node(OPP, [(b, self.bang_prime(p))]) for b, p in o.branches]
            return reduce(self.tensor, units)
        return self._cached("bang", o, None, build)

    def bang_prime(self, p):
        return self._cached("bang'", p, None, lambda: self.node(PLY, [
            (a, self.bang(oj)) for a, oj in p.branches]))

    def quest(self, p):
        if not p.branches:
            return p
        def build():
            units = [self.node(PLY, [(a, self.quest_prime(o))]) for a, o in p.branches]
            return reduce(self.par, units)
        return self._cached("quest", p, None, build)

    def quest_prime(self, o):
        return self._cached("quest'", o, None, lambda: self.node(OPP, [
            (b, self.quest(pi)) for b, pi in o.branches]))

    _BINARY = {Tensor: "tensor", OxR: "oxr", OxL: "oxl", Par: "par", OtR: "otr", OtL: "otl"}

    def expand(self, f):
        if isinstance(f, (OppLit, PlayLit)):
            pol = OPP if isinstance(f, OppLit) else PLY
            return self.node(pol, [(br.label, self.expand(br.child)) for br in f.branches])
        if isinstance(f, Binary):
            op = getattr(self, self._BINARY[type(f)])
            return op(self.expand(f.left), self.expand(f.right))
        inner = self.expand(f.child)
        if isinstance(f, Dual):
            return self.dual(inner)
        if isinstance(f, Bang):
            return self.bang(inner)
        if isinstance(f, Quest):
            return self.quest(inner)
        raise TypeError(f"not a formula: {f!r}")


def expand(f, node_budget=DEFAULT_NODE_BUDGET, deadline=None) -> GameTree:
    return Expander(node_budget, deadline).expand(f)


# --------------------------------------------------------------------------
# isomorphism up to sibling order, labels erased

def canonical_key(g: GameTree):
    memo = {}

    def go(t):
        key = id(t)
        hit = memo.get(key)
        if hit is None:
            hit = memo[key] = (t.polarity is OPP, tuple(sorted(go(c) for _, c in t.branches)))
        return hit

    return go(g)


def canonical_form(g: GameTree) -> GameTree:
    """Labels replaced by positions ``0, 1, ...`` after sorting children canonically."""
    built = {}

    def build(key):
        hit = built.get(key)
        if hit is None:
            is_opp, kids = key
            hit = built[key] = GameTree(OPP if is_opp else PLY,
                                        [(str(i), build(k)) for i, k in enumerate(kids)])
        return hit

    return build(canonical_key(g))


def trees_isomorphic(g: GameTree, h: GameTree) -> bool:
    return g.polarity is h.polarity and canonical_key(g) == canonical_key(h)


def is_iso(f, h, node_budget=DEFAULT_NODE_BUDGET) -> bool:
    if f.polarity is not h.polarity:
        raise ValueError("is_iso needs formulas of equal polarity")
    return trees_isomorphic(expand(f, node_budget), expand(h, node_budget))
