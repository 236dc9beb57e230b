"""Morphisms as proof terms: typechecking, identities, cut elimination, and the
translation between proofs of a sequent and strategies in its hom game.

Sequents come in three kinds, written here as ``"o"`` (opponent,
``O |-o O'``), ``"m"`` (mixed, ``O |- P``) and ``"p"`` (player, ``P |-p P'``).
The rules:

* tuple ``(b -> h_b)`` proves ``X |-o (b : P_b)`` from ``h_b : X |- P_b``;
* cotuple ``{a -> h_a}`` proves ``{a : O_a} |-p Y`` from ``h_a : O_a |- Y``;
* left move ``<b . f`` proves ``(.., b : P_b, ..) |- Y`` from ``f : P_b |-p Y``;
* right move ``>a . g`` proves ``X |- {.., a : O_a, ..}`` from ``g : X |-o O_a``;
* ``id`` proves ``X |-o X`` and ``X |-p X``;
* ``f ; g`` is a cut through a game that the term does not mention, so the
  checker infers it by unifying partially known games.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .connectives import DEFAULT_NODE_BUDGET, expand
from .errors import PolgameError, ShapeMismatch, TypeCheckError
from .games import GameTree, random_game, to_formula
from .syntax import (OPP, PLY, Branch, Dual, OppLit, OtR, Polarity, Sequent, SequentKind)
from .terms import (ID, CotupleTerm, Compose, Identity, LeftMove, RightMove, Term,
                    TupleTerm, is_normal)

KIND_OF = {SequentKind.OPPONENT: "o", SequentKind.MIXED: "m", SequentKind.PLAYER: "p"}
SEQUENT_KIND = {v: k for k, v in KIND_OF.items()}
_KIND_NAME = {"o": "opponent", "m": "mixed", "p": "player"}


# --------------------------------------------------------------------------
# partial games for cut inference

class _PNode:
    """A game known only partly: its polarity, some labelled branches, and
    whether the branch set is complete (``closed``)."""

    __slots__ = ("parent", "pol", "labels", "kids", "closed")

    def __init__(self, pol: Polarity):
        self.parent = None
        self.pol = pol
        self.labels = []
        self.kids = {}
        self.closed = False


def _find(x: _PNode) -> _PNode:
    root = x
    while root.parent is not None:
        root = root.parent
    while x.parent is not None:
        x.parent, x = root, x.parent
    return root


class _Checker:
    def __init__(self):
        self.holes = []
        self._from_tree = {}

    def from_tree(self, g: GameTree) -> _PNode:
        hit = self._from_tree.get(id(g))
        if hit is None:
            hit = _PNode(g.polarity)
            hit.closed = True
            self._from_tree[id(g)] = hit
            for lab, c in g.branches:
                hit.labels.append(lab)
                hit.kids[lab] = self.from_tree(c)
        return hit

    # -- constraints ------------------------------------------------------
    def require(self, x, label, rule, path):
        x = _find(x)
        kid = x.kids.get(label)
        if kid is not None:
            return kid
        if x.closed:
            have = ", ".join(x.labels) or "no branches"
            raise TypeCheckError(rule, path, f"label {label!r} is not a branch (have {have})")
        kid = _PNode(x.pol.flip())
        x.labels.append(label)
        x.kids[label] = kid
        return kid

    def close(self, x, labels, rule, path):
        x = _find(x)
        labels = list(labels)
        if x.closed:
            if set(labels) != set(x.labels):
                raise TypeCheckError(
                    rule, path, f"branches {sorted(labels)} do not match the game's "
                                f"{sorted(x.labels)}")
            return
        extra = [lab for lab in x.labels if lab not in labels]
        if extra:
            raise TypeCheckError(rule, path, f"no case for required branches {extra}")
        for lab in labels:
            if lab not in x.kids:
                x.kids[lab] = _PNode(x.pol.flip())
        x.labels = labels
        x.closed = True

    def unify(self, a, b, rule, path):
        work = [(a, b)]
        while work:
            x, y = work.pop()
            x, y = _find(x), _find(y)
            if x is y:
                continue
            if x.pol is not y.pol:
                raise TypeCheckError(rule, path, f"cannot equate a {x.pol} game with a {y.pol} game")
            if y.closed and not x.closed:
                x, y = y, x
            if x.closed:
                if y.closed and set(x.labels) != set(y.labels):
                    raise TypeCheckError(rule, path, "games have different branches")
                missing = [lab for lab in y.labels if lab not in x.kids]
                if missing:
                    raise TypeCheckError(rule, path, f"labels {missing} are not branches")
            y.parent = x
            for lab in y.labels:
                if lab in x.kids:
                    work.append((x.kids[lab], y.kids[lab]))
                else:
                    x.labels.append(lab)
                    x.kids[lab] = y.kids[lab]
            y.kids = {}
            y.labels = []

    def materialize(self, x, path=()):
        done = {}
        active = set()

        def go(node):
            node = _find(node)
            hit = done.get(id(node))
            if hit is not None:
                return hit
            if id(node) in active:
                raise TypeCheckError("cut", path, "the inferred cut game would be infinite")
            active.add(id(node))
            t = GameTree(node.pol, [(lab, go(node.kids[lab])) for lab in node.labels])
            active.discard(id(node))
            done[id(node)] = t
            return t

        return go(x)

    # -- the rules --------------------------------------------------------
    def check(self, t, x, y, kind, path):
        if isinstance(t, TupleTerm):
            self._want(kind, "o", "tuple", path)
            self.close(y, [b for b, _ in t.branches], "tuple", path)
            return TupleTerm(tuple(
                (b, self.check(h, x, self.require(y, b, "tuple", path), "m", path + (b,)))
                for b, h in t.branches))
        if isinstance(t, CotupleTerm):
            self._want(kind, "p", "cotuple", path)
            self.close(x, [a for a, _ in t.branches], "cotuple", path)
            return CotupleTerm(tuple(
                (a, self.check(h, self.require(x, a, "cotuple", path), y, "m", path + (a,)))
                for a, h in t.branches))
        if isinstance(t, LeftMove):
            self._want(kind, "m", "projection", path)
            sub = self.require(x, t.label, "projection", path)
            return LeftMove(t.label, self.check(t.body, sub, y, "p", path + ("<" + t.label,)))
        if isinstance(t, RightMove):
            self._want(kind, "m", "injection", path)
            sub = self.require(y, t.label, "injection", path)
            return RightMove(t.label, self.check(t.body, x, sub, "o", path + (">" + t.label,)))
        if isinstance(t, Identity):
            if kind == "m":
                raise TypeCheckError("identity", path,
                                     "an identity needs endpoints of equal polarity")
            self.unify(x, y, "identity", path)
            hole = _IdHole(x, path)
            self.holes.append(hole)
            return hole
        if isinstance(t, Compose):
            if kind == "o":
                k1, k2, pol = "o", "o", OPP
            elif kind == "p":
                k1, k2, pol = "p", "p", PLY
            elif term_kind(t.left) == "m":
                k1, k2, pol = "m", "p", PLY
            else:
                k1, k2, pol = "o", "m", OPP
            mid = _PNode(pol)
            left = self.check(t.left, x, mid, k1, path + (";1",))
            right = self.check(t.right, mid, y, k2, path + (";2",))
            return Compose(left, right)
        raise TypeCheckError("term", path, f"not a term: {t!r}")

    @staticmethod
    def _want(kind, want, rule, path):
        if kind != want:
            raise TypeCheckError(rule, path, f"a {rule} proves a {_KIND_NAME[want]} sequent, "
                                             f"not a {_KIND_NAME[kind]} one")


@dataclass(frozen=True)
class _IdHole(Term):
    node: object
    path: tuple


def term_kind(t: Term):
    """Sequent kind a term can only prove, read off its shape (None for ``id``)."""
    if isinstance(t, TupleTerm):
        return "o"
    if isinstance(t, CotupleTerm):
        return "p"
    if isinstance(t, (LeftMove, RightMove)):
        return "m"
    if isinstance(t, Compose):
        left, right = term_kind(t.left), term_kind(t.right)
        if left is None:
            return right
        if right is None:
            return left
        if left == "m" or right == "m":
            return "m"
        return left
    return None


def _fill_holes(t, checker):
    if isinstance(t, _IdHole):
        return identity_of(checker.materialize(t.node, t.path))
    if isinstance(t, TupleTerm):
        return TupleTerm(tuple((b, _fill_holes(h, checker)) for b, h in t.branches))
    if isinstance(t, CotupleTerm):
        return CotupleTerm(tuple((a, _fill_holes(h, checker)) for a, h in t.branches))
    if isinstance(t, LeftMove):
        return LeftMove(t.label, _fill_holes(t.body, checker))
    if isinstance(t, RightMove):
        return RightMove(t.label, _fill_holes(t.body, checker))
    if isinstance(t, Compose):
        return Compose(_fill_holes(t.left, checker), _fill_holes(t.right, checker))
    return t


@dataclass(frozen=True)
class TypedTerm:
    """A term that derives ``sequent``; ``term`` has every ``id`` spelled out."""

    term: Term
    source: Term
    sequent: Sequent
    lhs: GameTree
    rhs: GameTree

    @property
    def kind(self) -> str:
        return KIND_OF[self.sequent.kind]


def typecheck_games(t: Term, lhs: GameTree, rhs: GameTree, kind: str) -> TypedTerm:
    checker = _Checker()
    if (lhs.polarity, rhs.polarity) == (PLY, OPP):
        raise TypeCheckError("sequent", (), "there are no morphisms from player to opponent")
    elaborated = checker.check(t, checker.from_tree(lhs), checker.from_tree(rhs), kind, ())
    elaborated = _fill_holes(elaborated, checker)
    seq = Sequent(SEQUENT_KIND[kind], to_formula(lhs), to_formula(rhs))
    return TypedTerm(elaborated, t, seq, lhs, rhs)


def typecheck(t: Term, s: Sequent, node_budget=DEFAULT_NODE_BUDGET) -> TypedTerm:
    lhs = expand(s.lhs, node_budget)
    rhs = expand(s.rhs, node_budget)
    typed = typecheck_games(t, lhs, rhs, KIND_OF[s.kind])
    return TypedTerm(typed.term, t, s, lhs, rhs)


def sequent_of_games(lhs: GameTree, rhs: GameTree, kind: str) -> Sequent:
    return Sequent(SEQUENT_KIND[kind], to_formula(lhs), to_formula(rhs))


# --------------------------------------------------------------------------
# identities

def identity_of(g: GameTree) -> Term:
    """``1_O = (b -> <b . 1_{P_b})`` and ``1_P = {a -> >a . 1_{O_a}}``."""
    if g.polarity is OPP:
        return TupleTerm(tuple((b, LeftMove(b, identity_of(p))) for b, p in g.branches))
    return CotupleTerm(tuple((a, RightMove(a, identity_of(o))) for a, o in g.branches))


# --------------------------------------------------------------------------
# cut elimination

def _contract(t: Compose):
    """One rewrite at the root of ``t``, or None when ``t`` is not a redex."""
    f, g = t.left, t.right
    if isinstance(g, Identity):
        return f
    if isinstance(f, Identity):
        return g
    if isinstance(g, TupleTerm):
        return TupleTerm(tuple((b, Compose(f, h)) for b, h in g.branches))
    if isinstance(g, RightMove):
        return RightMove(g.label, Compose(f, g.body))
    if isinstance(f, TupleTerm) and isinstance(g, LeftMove):
        for b, h in f.branches:
            if b == g.label:
                return Compose(h, g.body)
        raise ShapeMismatch(f"tuple has no branch {g.label!r}")
    if isinstance(f, RightMove) and isinstance(g, CotupleTerm):
        for a, h in g.branches:
            if a == f.label:
                return Compose(f.body, h)
        raise ShapeMismatch(f"cotuple has no branch {f.label!r}")
    if isinstance(f, LeftMove):
        return LeftMove(f.label, Compose(f.body, g))
    if isinstance(f, CotupleTerm):
        return CotupleTerm(tuple((a, Compose(h, g)) for a, h in f.branches))
    return None


def _children(t):
    if isinstance(t, (TupleTerm, CotupleTerm)):
        return [h for _, h in t.branches]
    if isinstance(t, (LeftMove, RightMove)):
        return [t.body]
    if isinstance(t, Compose):
        return [t.left, t.right]
    return []


def _replace_child(t, i, new):
    if isinstance(t, TupleTerm):
        br = list(t.branches)
        br[i] = (br[i][0], new)
        return TupleTerm(tuple(br))
    if isinstance(t, CotupleTerm):
        br = list(t.branches)
        br[i] = (br[i][0], new)
        return CotupleTerm(tuple(br))
    if isinstance(t, LeftMove):
        return LeftMove(t.label, new)
    if isinstance(t, RightMove):
        return RightMove(t.label, new)
    return Compose(new, t.right) if i == 0 else Compose(t.left, new)


def _is_redex(t):
    return isinstance(t, Compose) and _contract(t) is not None


def _find_innermost(t, path=()):
    """Leftmost redex with no redex below it (first redex in post-order)."""
    for i, c in enumerate(_children(t)):
        hit = _find_innermost(c, path + (i,))
        if hit is not None:
            return hit
    return path if _is_redex(t) else None


def _find_outermost(t, path=()):
    """Rightmost topmost redex (pre-order, right children first)."""
    if _is_redex(t):
        return path
    kids = _children(t)
    for i in reversed(range(len(kids))):
        hit = _find_outermost(kids[i], path + (i,))
        if hit is not None:
            return hit
    return None


def _all_redexes(t, path=(), out=None):
    out = [] if out is None else out
    if _is_redex(t):
        out.append(path)
    for i, c in enumerate(_children(t)):
        _all_redexes(c, path + (i,), out)
    return out


def _rewrite_at(t, path):
    if not path:
        return _contract(t)
    i = path[0]
    return _replace_child(t, i, _rewrite_at(_children(t)[i], path[1:]))


class NormalizationBudget(PolgameError):
    def __init__(self, steps):
        self.steps = steps
        super().__init__(f"normalization did not finish within {steps} steps")


STRATEGIES = ("innermost", "outermost", "random")


def normalize(t, strategy="innermost", max_steps=100_000, seed=0, trace=None) -> Term:
    """Rewrite compositions away.

    ``strategy`` picks the redex contracted at each step: ``innermost``
    (leftmost-innermost, the default), ``outermost`` (rightmost-outermost) or
    ``random``.  ``trace``, if a list, receives each intermediate term.
    """
    if isinstance(t, TypedTerm):
        t = t.term
    rng = random.Random(seed)
    for _ in range(max_steps + 1):
        if strategy == "innermost":
            path = _find_innermost(t)
        elif strategy == "outermost":
            path = _find_outermost(t)
        elif strategy == "random":
            found = _all_redexes(t)
            path = rng.choice(found) if found else None
        else:
            raise ValueError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")
        if path is None:
            if not is_normal(t):
                raise ShapeMismatch("stuck composition: the term is not well typed")
            return t
        t = _rewrite_at(t, path)
        if trace is not None:
            trace.append(t)
    raise NormalizationBudget(max_steps)


# --------------------------------------------------------------------------
# proofs and strategies

def hom_formula(s: Sequent):
    """Opponent formula whose strategies correspond to proofs of ``s``.

    ``O |-o O'`` gives ``dual(O) (par)-> O'``; ``O |- P`` first turns ``P``
    into the opponent game ``(* : P)``; ``P |-p P'`` is read as
    ``dual(P') |-o dual(P)``, with the double dual left in place.
    """
    if s.kind is SequentKind.OPPONENT:
        return OtR(Dual(s.lhs), s.rhs)
    if s.kind is SequentKind.MIXED:
        return OtR(Dual(s.lhs), OppLit((Branch("*", s.rhs),)))
    return OtR(Dual(Dual(s.rhs)), Dual(s.lhs))


def transpose(t: Term) -> Term:
    """A proof of ``P |-p P'`` read as a proof of ``dual(P') |-o dual(P)`` (and back)."""
    if isinstance(t, TupleTerm):
        return CotupleTerm(tuple((b, transpose(h)) for b, h in t.branches))
    if isinstance(t, CotupleTerm):
        return TupleTerm(tuple((a, transpose(h)) for a, h in t.branches))
    if isinstance(t, LeftMove):
        return RightMove(t.label, transpose(t.body))
    if isinstance(t, RightMove):
        return LeftMove(t.label, transpose(t.body))
    raise ShapeMismatch(f"only normal proofs can be transposed, got {type(t).__name__}")


def _opp_to_strategy(t):
    if not isinstance(t, TupleTerm):
        raise ShapeMismatch(f"an opponent proof starts with a tuple, got {type(t).__name__}")
    return TupleTerm(tuple(("R." + b, _mixed_to_strategy(u)) for b, u in t.branches))


def _mixed_to_strategy(t):
    if isinstance(t, LeftMove):
        return RightMove("L." + t.label, _player_to_strategy(t.body))
    if isinstance(t, RightMove):
        return RightMove("R." + t.label, _opp_to_strategy(t.body))
    raise ShapeMismatch(f"a mixed proof starts with a move, got {type(t).__name__}")


def _player_to_strategy(t):
    if not isinstance(t, CotupleTerm):
        raise ShapeMismatch(f"a player proof starts with a cotuple, got {type(t).__name__}")
    return TupleTerm(tuple(("L." + a, _mixed_to_strategy(v)) for a, v in t.branches))


def proof_to_strategy(p) -> Term:
    """Send a normal proof of ``s`` to a strategy in ``expand(hom_formula(s))``."""
    if isinstance(p, TypedTerm):
        term, kind = p.term, p.kind
    else:
        term, kind = p
    if not is_normal(term):
        raise ShapeMismatch("proof_to_strategy needs a normal proof; normalize it first")
    if kind == "o":
        return _opp_to_strategy(term)
    if kind == "m":
        return TupleTerm((("R.*", _mixed_to_strategy(term)),))
    return _opp_to_strategy(transpose(term))


def _strip(label, prefix):
    if not label.startswith(prefix):
        raise ShapeMismatch(f"label {label!r} does not come from the {prefix[0]} operand")
    return label[len(prefix):]


def _strategy_to_opp(t):
    if not isinstance(t, TupleTerm):
        raise ShapeMismatch(f"expected a tuple, got {type(t).__name__}")
    return TupleTerm(tuple((_strip(b, "R."), _strategy_to_mixed(u)) for b, u in t.branches))


def _strategy_to_mixed(t):
    if not isinstance(t, RightMove):
        raise ShapeMismatch(f"expected a move, got {type(t).__name__}")
    if t.label.startswith("L."):
        return LeftMove(t.label[2:], _strategy_to_player(t.body))
    return RightMove(_strip(t.label, "R."), _strategy_to_opp(t.body))


def _strategy_to_player(t):
    if not isinstance(t, TupleTerm):
        raise ShapeMismatch(f"expected a tuple, got {type(t).__name__}")
    return CotupleTerm(tuple((_strip(a, "L."), _strategy_to_mixed(v)) for a, v in t.branches))


def strategy_to_proof(t: Term, s: Sequent, node_budget=DEFAULT_NODE_BUDGET) -> Term:
    """Invert :func:`proof_to_strategy`; the result is checked against ``s``."""
    kind = KIND_OF[s.kind]
    if kind == "o":
        proof = _strategy_to_opp(t)
    elif kind == "m":
        if not (isinstance(t, TupleTerm) and [b for b, _ in t.branches] == ["R.*"]):
            raise ShapeMismatch("a mixed hom strategy answers the single move 'R.*'")
        proof = _strategy_to_mixed(t.branches[0][1])
    else:
        proof = transpose(_strategy_to_opp(t))
    try:
        typecheck(proof, s, node_budget)
    except TypeCheckError as exc:
        raise ShapeMismatch(f"not a strategy in the hom game: {exc}") from None
    return proof


# --------------------------------------------------------------------------
# proof search

class ProofSearch:
    """Rule-driven search over normal proofs between game trees."""

    def __init__(self):
        self._exists = {}
        self._count = {}
        self._keep = []

    def exists(self, x: GameTree, y: GameTree, kind: str) -> bool:
        key = (id(x), id(y), kind)
        hit = self._exists.get(key)
        if hit is None:
            self._keep.append((x, y))
            if kind == "o":
                hit = all(self.exists(x, p, "m") for _, p in y.branches)
            elif kind == "p":
                hit = all(self.exists(o, y, "m") for _, o in x.branches)
            else:
                hit = (any(self.exists(p, y, "p") for _, p in x.branches)
                       or any(self.exists(x, o, "o") for _, o in y.branches))
            self._exists[key] = hit
        return hit

    def count(self, x: GameTree, y: GameTree, kind: str) -> int:
        key = (id(x), id(y), kind)
        hit = self._count.get(key)
        if hit is None:
            self._keep.append((x, y))
            if kind == "o":
                hit = 1
                for _, p in y.branches:
                    hit *= self.count(x, p, "m")
            elif kind == "p":
                hit = 1
                for _, o in x.branches:
                    hit *= self.count(o, y, "m")
            else:
                hit = (sum(self.count(p, y, "p") for _, p in x.branches)
                       + sum(self.count(x, o, "o") for _, o in y.branches))
            self._count[key] = hit
        return hit

    def enumerate(self, x: GameTree, y: GameTree, kind: str):
        """Every normal proof, generated lazily in rule order."""
        if kind == "o":
            labels = [b for b, _ in y.branches]
            subs = [lambda p=p: self.enumerate(x, p, "m") for _, p in y.branches]
            for combo in _product(subs):
                yield TupleTerm(tuple(zip(labels, combo)))
        elif kind == "p":
            labels = [a for a, _ in x.branches]
            subs = [lambda o=o: self.enumerate(o, y, "m") for _, o in x.branches]
            for combo in _product(subs):
                yield CotupleTerm(tuple(zip(labels, combo)))
        else:
            for b, p in x.branches:
                for f in self.enumerate(p, y, "p"):
                    yield LeftMove(b, f)
            for a, o in y.branches:
                for g in self.enumerate(x, o, "o"):
                    yield RightMove(a, g)


def _product(factories):
    """Cartesian product of lazily regenerated iterables."""
    if not factories:
        yield ()
        return
    head, rest = factories[0], factories[1:]
    for first in head():
        for tail in _product(rest):
            yield (first,) + tail


def enumerate_proofs(lhs: GameTree, rhs: GameTree, kind: str):
    return ProofSearch().enumerate(lhs, rhs, kind)


def exists(lhs: GameTree, rhs: GameTree, kind: str) -> bool:
    return ProofSearch().exists(lhs, rhs, kind)


# --------------------------------------------------------------------------
# random typed terms

_CUTS = {
    "o": [("o", "o", OPP)],
    "p": [("p", "p", PLY)],
    "m": [("o", "m", OPP), ("m", "p", PLY)],
}


class TermGenerator:
    """Random well-typed terms, with cuts through random or endpoint games."""

    def __init__(self, seed=0, compose_prob=0.3, id_prob=0.15, mid_depth=2, mid_branch=2):
        self.rng = seed if isinstance(seed, random.Random) else random.Random(seed)
        self.compose_prob = compose_prob
        self.id_prob = id_prob
        self.mid_depth = mid_depth
        self.mid_branch = mid_branch
        self.search = ProofSearch()

    def random_mid(self, pol, x, y):
        choices = [g for g in (x, y) if g.polarity is pol]
        if choices and self.rng.random() < 0.3:
            return self.rng.choice(choices)
        return random_game(self.rng.randint(0, self.mid_depth), self.mid_branch, pol, self.rng)

    def term(self, x: GameTree, y: GameTree, kind: str, fuel: int = 2) -> Term:
        """A term proving ``x |- y`` of the given kind; the sequent must be provable."""
        if not self.search.exists(x, y, kind):
            raise ValueError("the sequent has no proof")
        rng = self.rng
        if kind != "m" and x is y and rng.random() < self.id_prob:
            return ID
        if fuel > 0 and rng.random() < self.compose_prob:
            for _ in range(8):
                k1, k2, pol = rng.choice(_CUTS[kind])
                mid = self.random_mid(pol, x, y)
                if self.search.exists(x, mid, k1) and self.search.exists(mid, y, k2):
                    return Compose(self.term(x, mid, k1, fuel - 1),
                                   self.term(mid, y, k2, fuel - 1))
        if kind == "o":
            return TupleTerm(tuple((b, self.term(x, p, "m", fuel)) for b, p in y.branches))
        if kind == "p":
            return CotupleTerm(tuple((a, self.term(o, y, "m", fuel)) for a, o in x.branches))
        options = [("<", b, p) for b, p in x.branches if self.search.exists(p, y, "p")]
        options += [(">", a, o) for a, o in y.branches if self.search.exists(x, o, "o")]
        side, label, sub = rng.choice(options)
        if side == "<":
            return LeftMove(label, self.term(sub, y, "p", fuel))
        return RightMove(label, self.term(x, sub, "o", fuel))

    def provable_games(self, kind: str, depth=2, branch=2, tries=200):
        """Random endpoint games for which a proof of the given kind exists."""
        pols = {"o": (OPP, OPP), "m": (OPP, PLY), "p": (PLY, PLY)}[kind]
        for _ in range(tries):
            x = random_game(self.rng.randint(0, depth), branch, pols[0], self.rng)
            y = random_game(self.rng.randint(0, depth), branch, pols[1], self.rng)
            if self.search.exists(x, y, kind):
                return x, y
        raise ValueError("no provable sequent found")

    def chain(self, kinds, depth=2, branch=2, tries=200):
        """Games ``g0 .. gn`` with proofs of ``g_i |- g_{i+1}`` of the given kinds."""
        pol_in = {"o": OPP, "m": OPP, "p": PLY}
        pol_out = {"o": OPP, "m": PLY, "p": PLY}
        for _ in range(tries):
            games = [random_game(self.rng.randint(0, depth), branch, pol_in[kinds[0]], self.rng)]
            for k in kinds:
                games.append(random_game(self.rng.randint(0, depth), branch, pol_out[k], self.rng))
            if all(self.search.exists(games[i], games[i + 1], k) for i, k in enumerate(kinds)):
                return games
        raise ValueError("no provable chain found")


def compose_kind(k1: str, k2: str) -> str:
    table = {("o", "o"): "o", ("o", "m"): "m", ("m", "p"): "m", ("p", "p"): "p"}
    try:
        return table[(k1, k2)]
    except KeyError:
        raise ValueError(f"cannot compose a {k1} proof with a {k2} proof") from None


COMPOSABLE_TRIPLES = [
    ("o", "o", "o"), ("o", "o", "m"), ("o", "m", "p"), ("m", "p", "p"), ("p", "p", "p"),
]

__all__ = [
    "TypedTerm", "typecheck", "typecheck_games", "identity_of", "normalize", "hom_formula",
    "proof_to_strategy", "strategy_to_proof", "transpose", "ProofSearch", "enumerate_proofs",
    "exists", "TermGenerator", "term_kind", "compose_kind", "COMPOSABLE_TRIPLES",
    "sequent_of_games", "STRATEGIES", "NormalizationBudget",
]
