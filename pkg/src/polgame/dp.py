"""Dynamic programming over graph games.

A formula is evaluated without building its game tree.  Every position of a
compound game is a *state*: a literal node, a pair of operand states under a
tensor-family or par-family product, or the dual of a state.  States are
interned in a table, so a sub-problem such as ``P_ik (par) P'_jl`` that is
reachable along several interleavings is evaluated once.

Product semantics (shared by all six binary connectives):

* tensor family: a pair is an opponent state iff both components are
  opponent states; par family: a pair is a player state iff both are player.
* moves are made in every component whose polarity equals the pair's
  polarity, with ``L.``/``R.`` prefixes on the labels.

``O (x)-> P`` is then just the pair ``(O, P)``, ``P (par)-> O`` the pair
``(P, O)``, and so on: the directed connectives differ only in the root.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field

from .analytics import graph_size
from .connectives import DEFAULT_NODE_BUDGET, Expander
from .errors import BudgetExceeded, TimeoutExceeded, UnsupportedConnective
from .games import GameTree, measure
from .syntax import (OPP, PLY, Bang, Dual, OppLit, OtL, OtR, OxL, OxR, Par, PlayLit,
                     Quest, Tensor)

_TENSOR_FAMILY = (Tensor, OxR, OxL)
_PAR_FAMILY = (Par, OtR, OtL)


@dataclass
class OpCounter:
    binary_ops: int = 0
    memo_hits: int = 0
    memo_entries: int = 0

    def to_json(self):
        return asdict(self)


def op_cost(arity: int, combination: bool) -> int:
    """Binary operations billed for combining ``arity`` child values.

    An m-ary meet or join takes m-1 binary operations and a leaf is free.  A
    *combination* state is a pair in which both components can move: its
    value is the root join (or meet) of the left-side and right-side results,
    which is billed one operation even when only a single argument remains,
    since the retrieval of that argument is bundled into it.
    """
    if arity == 0:
        return 0
    if combination:
        return max(arity - 1, 1)
    return arity - 1


class StateTable:
    """Interned states with lazily computed moves."""

    def __init__(self, global_dedup=True, expand_exponentials=False, allow_exponentials=True,
                 node_budget=DEFAULT_NODE_BUDGET, deadline=None):
        self.global_dedup = global_dedup
        self.expand_exponentials = expand_exponentials
        self.allow_exponentials = allow_exponentials
        self.node_budget = node_budget
        self.deadline = deadline
        self.polarity = []   # state id -> Polarity
        self.shape = []       # state id -> ("lit", None) | ("t"|"p", (a, b)) | ("d", s)
        self.moves_of = []   # state id -> tuple of (label, child id), or None if not computed
        self.index = {}

    def __len__(self):
        return len(self.polarity)

    def _new(self, key, pol, shape, moves=None):
        if key is not None:
            hit = self.index.get(key)
            if hit is not None:
                return hit
        sid = len(self.polarity)
        if sid >= self.node_budget:
            raise BudgetExceeded(self.node_budget, sid)
        if self.deadline is not None and sid % 4096 == 0 and time.perf_counter() > self.deadline:
            raise TimeoutExceeded("graph evaluation timed out")
        self.polarity.append(pol)
        self.shape.append(shape)
        self.moves_of.append(moves)
        if key is not None:
            self.index[key] = sid
        return sid

    def literal(self, pol, moves):
        moves = tuple(moves)
        key = ("lit", pol, moves) if self.global_dedup else None
        return self._new(key, pol, ("lit", None), moves)

    def pair(self, kind, a, b):
        pa, pb = self.polarity[a], self.polarity[b]
        if kind == "t":
            pol = OPP if (pa is OPP and pb is OPP) else PLY
        else:
            pol = PLY if (pa is PLY and pb is PLY) else OPP
        return self._new((kind, a, b), pol, (kind, (a, b)))

    def is_combination(self, sid):
        """True for a pair state whose two components both have its polarity."""
        kind, data = self.shape[sid]
        if kind == "d":
            return self.is_combination(data)
        if kind == "lit":
            return False
        pol = self.polarity[sid]
        return self.polarity[data[0]] is pol and self.polarity[data[1]] is pol

    def dual(self, s):
        return self._new(("d", s), self.polarity[s].flip(), ("d", s))

    def moves(self, sid):
        got = self.moves_of[sid]
        if got is not None:
            return got
        kind, data = self.shape[sid]
        pol = self.polarity[sid]
        if kind == "d":
            got = tuple((lab, self.dual(c)) for lab, c in self.moves(data))
        else:
            a, b = data
            got = []
            if self.polarity[a] is pol:
                got.extend(("L." + lab, self.pair(kind, c, b)) for lab, c in self.moves(a))
            if self.polarity[b] is pol:
                got.extend(("R." + lab, self.pair(kind, a, c)) for lab, c in self.moves(b))
            got = tuple(got)
        self.moves_of[sid] = got
        return got

    # ------------------------------------------------------------------
    def from_tree(self, g: GameTree):
        memo = {}

        def go(t):
            hit = memo.get(id(t))
            if hit is None:
                hit = self.literal(t.polarity, [(lab, go(c)) for lab, c in t.branches])
                if self.global_dedup:
                    memo[id(t)] = hit
            return hit

        return go(g)

    def from_formula(self, f):
        if isinstance(f, (OppLit, PlayLit)):
            kids = [(br.label, self.from_formula(br.child)) for br in f.branches]
            return self.literal(f.polarity, kids)
        if isinstance(f, _TENSOR_FAMILY):
            return self.pair("t", self.from_formula(f.left), self.from_formula(f.right))
        if isinstance(f, _PAR_FAMILY):
            return self.pair("p", self.from_formula(f.left), self.from_formula(f.right))
        if isinstance(f, Dual):
            return self.dual(self.from_formula(f.child))
        if isinstance(f, (Bang, Quest)):
            if not self.allow_exponentials:
                raise UnsupportedConnective("graph games do not cover the exponentials")
            if self.expand_exponentials:
                budget = self.node_budget - len(self)
                if budget <= 0:
                    raise BudgetExceeded(self.node_budget, len(self))
                return self.from_tree(Expander(budget, self.deadline).expand(f))
            # a strategy exists for !O exactly when one exists for O (and dually
            # for ?P), and every connective's verdict depends only on the
            # operands' verdicts, so the operand can stand in for the exponential
            return self.from_formula(f.child)
        raise TypeError(f"not a formula: {f!r}")


# --------------------------------------------------------------------------
# evaluation

@dataclass
class DPResult:
    verdict: bool
    counter: OpCounter = field(default_factory=OpCounter)
    states: int = 0


def _evaluate(table: StateTable, root: int, counter: OpCounter, memo: bool) -> bool:
    values = {}
    # frame: [state, moves, next index, acc]
    def frame(sid):
        return [sid, table.moves(sid), 0, table.polarity[sid] is OPP]

    stack = [frame(root)]
    result = None
    while stack:
        fr = stack[-1]
        sid, moves, idx, acc = fr
        is_meet = table.polarity[sid] is OPP
        if result is not None:
            fr[3] = acc = (acc and result) if is_meet else (acc or result)
            result = None
        if idx == len(moves):
            stack.pop()
            counter.binary_ops += op_cost(len(moves), table.is_combination(sid))
            if memo:
                values[sid] = acc
            result = acc
            continue
        fr[2] = idx + 1
        child = moves[idx][1]
        if memo and child in values:
            counter.memo_hits += 1
            result = values[child]
            continue
        stack.append(frame(child))
    counter.memo_entries = len(values)
    return result


def eval_dp(f, memo=True, global_dedup=True, expand_exponentials=False,
            node_budget=DEFAULT_NODE_BUDGET, deadline=None) -> DPResult:
    """Decide whether ``f`` has a strategy, evaluating each state once.

    Without ``memo`` every state is re-evaluated each time it is reached,
    which amounts to naive evaluation of the unfolded tree; the verdict must
    not change.
    """
    table = StateTable(global_dedup, expand_exponentials, True, node_budget, deadline)
    root = table.from_formula(f)
    counter = OpCounter()
    verdict = _evaluate(table, root, counter, memo)
    return DPResult(verdict, counter, len(table))


# --------------------------------------------------------------------------
# explicit graph games

@dataclass(frozen=True)
class GraphGame:
    """Reachable states of a formula; children ids always precede parent ids."""

    polarity: tuple
    children: tuple  # per node: tuple of (label, child id)
    root: int

    @property
    def nodes(self):
        return len(self.polarity)

    def quad(self):
        no = sum(1 for p in self.polarity if p is OPP)
        eo = sum(len(ch) for p, ch in zip(self.polarity, self.children) if p is OPP)
        ep = sum(len(ch) for p, ch in zip(self.polarity, self.children) if p is PLY)
        return (no, self.nodes - no, eo, ep)

    @property
    def edges(self):
        return sum(len(ch) for ch in self.children)

    def profile(self):
        """Distinct nodes at each distance from the root."""
        depth = {self.root: 0}
        frontier = [self.root]
        counts = [1]
        while frontier:
            nxt = []
            for sid in frontier:
                for _, c in self.children[sid]:
                    if c not in depth:
                        depth[c] = depth[sid] + 1
                        nxt.append(c)
            if nxt:
                counts.append(len(nxt))
            frontier = nxt
        return counts


def build_graph(f, global_dedup=True, node_budget=DEFAULT_NODE_BUDGET) -> GraphGame:
    table = StateTable(global_dedup, allow_exponentials=False, node_budget=node_budget)
    start = table.from_formula(f)
    ids = {}
    pols, kids = [], []
    stack = [(start, False)]
    while stack:
        sid, done = stack.pop()
        if sid in ids:
            continue
        moves = table.moves(sid)
        if done:
            ids[sid] = len(pols)
            pols.append(table.polarity[sid])
            kids.append(tuple((lab, ids[c]) for lab, c in moves))
            continue
        stack.append((sid, True))
        stack.extend((c, False) for _, c in reversed(moves) if c not in ids)
    return GraphGame(tuple(pols), tuple(kids), ids[start])


def unfold(graph: GraphGame, node_budget=DEFAULT_NODE_BUDGET) -> GameTree:
    built = []
    for pol, ch in zip(graph.polarity, graph.children):
        t = GameTree(pol, [(lab, built[c]) for lab, c in ch])
        if t.size > node_budget:
            raise BudgetExceeded(node_budget, t.size)
        built.append(t)
    return built[graph.root]


# --------------------------------------------------------------------------
# cost bounds

def dp_cost_bound(f) -> int:
    """Cost bound for evaluating ``f`` on its graph game.

    Literals cost their arity plus their children's costs; a product costs
    the edges of the operand graphs weighted by the node counts of the
    polarity it is built on, e.g. ``esize[O]|O'|_o + esize[O']|O|_o``.
    """
    if isinstance(f, (OppLit, PlayLit)):
        return len(f.branches) + sum(dp_cost_bound(br.child) for br in f.branches)
    if isinstance(f, Dual):
        return dp_cost_bound(f.child)
    if isinstance(f, (Bang, Quest)):
        raise UnsupportedConnective("no cost bound for the exponentials")
    left, right = graph_size(f.left), graph_size(f.right)
    if isinstance(f, _TENSOR_FAMILY):
        return left.edges * right.nodes_o + right.edges * left.nodes_o
    return left.edges * right.nodes_p + right.edges * left.nodes_p


def prop_dyn_bound(p1: GameTree, p2: GameTree) -> int:
    """Operation bound for ``P (par) P'``: usize[P]|P'|_p + usize[P']|P|_p + |P|_p|P'|_p."""
    m1, m2 = measure(p1), measure(p2)
    return m1.usize * m2.nodes_p + m2.usize * m1.nodes_p + m1.nodes_p * m2.nodes_p


def prop_dyn_bound_directed(p: GameTree, o: GameTree) -> int:
    """Operation bound for ``P (par)-> O``: usize[P]|O| + usize[O]|P|_p + |P|_p|O|_p."""
    mp, mo = measure(p), measure(o)
    return mp.usize * mo.nodes + mo.usize * mp.nodes_p + mp.nodes_p * mo.nodes_p
