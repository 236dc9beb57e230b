"""Expanded additive game trees: duality, size measures, profiles, generators."""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field

from .errors import PolarityError, UnsupportedConnective
from .syntax import OPP, PLY, Branch, OppLit, PlayLit, Polarity


@dataclass(frozen=True)
class GameTree:
    """An alternating tree; ``branches`` is an ordered tuple of ``(label, child)``.

    Subtrees may be shared between parents (expansion memoizes), so traversals
    that care about cost key their caches on ``id``.
    """

    polarity: Polarity
    branches: tuple = ()
    size: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "branches", tuple(self.branches))
        total = 1
        want = self.polarity.flip()
        for label, child in self.branches:
            if child.polarity is not want:
                raise PolarityError(
                    f"branch {label!r} of a {self.polarity} node must be a {want} node")
            total += child.size
        object.__setattr__(self, "size", total)

    @property
    def labels(self):
        return [label for label, _ in self.branches]

    def child(self, label):
        for lab, sub in self.branches:
            if lab == label:
                return sub
        raise KeyError(label)

    def __str__(self):
        return print_game(self)


ONE = GameTree(OPP)
ZERO = GameTree(PLY)


def opp(*branches) -> GameTree:
    return GameTree(OPP, branches)


def ply(*branches) -> GameTree:
    return GameTree(PLY, branches)


def dual(g: GameTree) -> GameTree:
    memo = {}

    def go(t):
        key = id(t)
        if key not in memo:
            memo[key] = GameTree(t.polarity.flip(), [(lab, go(c)) for lab, c in t.branches])
        return memo[key]

    return go(g)


@dataclass(frozen=True)
class SizeReport:
    nodes: int
    nodes_o: int
    nodes_p: int
    edges: int
    edges_o: int
    edges_p: int
    leaves: int
    usize: int
    depth: int

    def to_json(self):
        return asdict(self)


def measure(g: GameTree) -> SizeReport:
    # per-node tuple: (nodes_o, nodes_p, edges_o, edges_p, leaves, usize, depth)
    memo = {}

    def go(t):
        key = id(t)
        hit = memo.get(key)
        if hit is not None:
            return hit
        no = np_ = eo = ep = leaves = usize = depth = 0
        n = len(t.branches)
        for _, c in t.branches:
            c_no, c_np, c_eo, c_ep, c_leaves, c_usize, c_depth = go(c)
            no += c_no
            np_ += c_np
            eo += c_eo
            ep += c_ep
            leaves += c_leaves
            usize += c_usize
            depth = max(depth, c_depth + 1)
        if t.polarity is OPP:
            no += 1
            eo += n
        else:
            np_ += 1
            ep += n
        if n == 0:
            leaves = 1
        else:
            usize += n - 1
        memo[key] = res = (no, np_, eo, ep, leaves, usize, depth)
        return res

    no, np_, eo, ep, leaves, usize, depth = go(g)
    return SizeReport(nodes=no + np_, nodes_o=no, nodes_p=np_, edges=eo + ep,
                      edges_o=eo, edges_p=ep, leaves=leaves, usize=usize, depth=depth)


def profile(g: GameTree) -> list:
    """Number of nodes at each depth; always starts with 1."""
    memo = {}

    def go(t):
        key = id(t)
        if key in memo:
            return memo[key]
        acc = [1]
        for _, c in t.branches:
            sub = go(c)
            if len(acc) < len(sub) + 1:
                acc.extend([0] * (len(sub) + 1 - len(acc)))
            for i, v in enumerate(sub):
                acc[i + 1] += v
        memo[key] = acc
        return acc

    return list(go(g))


def branch_label(i: int) -> str:
    return chr(ord("a") + i) if i < 26 else f"m{i}"


def random_game(depth: int, max_branch: int, start: Polarity = OPP, seed=0) -> GameTree:
    """Random alternating tree from ``random.Random(seed)`` (Mersenne Twister).

    Each node draws its branching factor uniformly from ``0..max_branch``;
    nodes at the depth limit are leaves.  Children are labelled ``a, b, c, ...``.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)

    def go(d, pol):
        k = 0 if d == 0 else rng.randint(0, max_branch)
        return GameTree(pol, [(branch_label(i), go(d - 1, pol.flip())) for i in range(k)])

    return go(depth, start)


# --------------------------------------------------------------------------
# families used by the growth examples

def game_A(n: int) -> GameTree:
    """A_0 = {}, A_{n+1} = {2 : B_n}; B_0 = (), B_{n+1} = (1 : A_n)."""
    if n == 0:
        return ZERO
    b = game_B(n - 1)
    return ply(("_1", b), ("_2", b))


def game_B(n: int) -> GameTree:
    if n == 0:
        return ONE
    return opp(("_1", game_A(n - 1)))


def game_L(n: int) -> GameTree:
    """L_0 = {}, L_{n+1} = {1 : L'_n}; L'_0 = (), L'_{n+1} = (1 : L_n)."""
    if n == 0:
        return ZERO
    return ply(("_1", game_L_prime(n - 1)))


def game_L_prime(n: int) -> GameTree:
    if n == 0:
        return ONE
    return opp(("_1", game_L(n - 1)))


# --------------------------------------------------------------------------
# conversions

def to_formula(g: GameTree):
    memo = {}

    def go(t):
        key = id(t)
        if key not in memo:
            cls = OppLit if t.polarity is OPP else PlayLit
            memo[key] = cls(tuple(Branch(lab, go(c)) for lab, c in t.branches))
        return memo[key]

    return go(g)


def from_literal(f) -> GameTree:
    """Convert a connective-free formula; use ``connectives.expand`` otherwise."""
    if isinstance(f, OppLit):
        return GameTree(OPP, [(b.label, from_literal(b.child)) for b in f.branches])
    if isinstance(f, PlayLit):
        return GameTree(PLY, [(b.label, from_literal(b.child)) for b in f.branches])
    raise UnsupportedConnective(f"{type(f).__name__} is not a literal; expand it first")


def print_game(g: GameTree) -> str:
    opener, closer = ("(", ")") if g.polarity is OPP else ("{", "}")
    if not g.branches:
        return opener + closer
    inner = ", ".join(f"{lab}:{print_game(c)}" for lab, c in g.branches)
    return f"{opener} {inner} {closer}"
