"""Random formulas and the structured families used by tests and benchmarks."""

from __future__ import annotations

import random

from .games import game_A, game_L, random_game, to_formula
from .syntax import (OPP, PLY, Bang, Branch, Dual, OppLit, OtL, OtR, OxL, OxR, Par, PlayLit,
                     Polarity, Quest, Tensor)

ONE_F = OppLit(())
ZERO_F = PlayLit(())


def _rng(seed):
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_literal(rng, pol: Polarity, depth=2, branch=2):
    return to_formula(random_game(rng.randint(0, depth), branch, pol, rng))


def random_formula(seed=0, pol: Polarity = OPP, depth=3, leaf_depth=2, leaf_branch=2,
                   exponentials=True, multiplicative_only=False):
    """A random well-polarized formula.

    Internal nodes are connectives chosen uniformly among those producing
    the wanted polarity; leaves are random literal games.  With
    ``multiplicative_only`` the formula uses the six binary connectives and
    literals only (no dual, no exponentials), which is the fragment covered
    by the graph-size formulas.
    """
    rng = _rng(seed)

    def go(want, d):
        if d == 0 or rng.random() < 0.25:
            return random_literal(rng, want, leaf_depth, leaf_branch)
        if want is OPP:
            options = ["ox", "otr", "otl"]
        else:
            options = ["par", "oxr", "oxl"]
        if not multiplicative_only:
            options.append("dual")
            if exponentials:
                options.append("exp")
        op = rng.choice(options)
        if op == "ox":
            return Tensor(go(OPP, d - 1), go(OPP, d - 1))
        if op == "otr":
            return OtR(go(PLY, d - 1), go(OPP, d - 1))
        if op == "otl":
            return OtL(go(OPP, d - 1), go(PLY, d - 1))
        if op == "par":
            return Par(go(PLY, d - 1), go(PLY, d - 1))
        if op == "oxr":
            return OxR(go(OPP, d - 1), go(PLY, d - 1))
        if op == "oxl":
            return OxL(go(PLY, d - 1), go(OPP, d - 1))
        if op == "dual":
            return Dual(go(want.flip(), d - 1))
        # exponentials only over small literals so that expansion stays feasible
        inner = random_literal(rng, want, 2, 2)
        return Bang(inner) if want is OPP else Quest(inner)

    return go(pol, depth)


def chain_formula(n: int, seed=0):
    """An opponent formula of roughly ``n`` AST nodes built as a deep chain.

    Each step wraps the formula so far in one of a few connectives, so the
    AST depth grows linearly; recursion-free consumers are required.
    """
    rng = _rng(seed)
    f = ONE_F
    size = 1
    while size < n:
        step = rng.randrange(5)
        if step == 0:
            f = Tensor(f, ONE_F)
            size += 2
        elif step == 1:
            f = OtL(f, ZERO_F)
            size += 2
        elif step == 2:
            f = Dual(Par(Dual(f), ZERO_F))
            size += 4
        elif step == 3:
            f = Bang(f)
            size += 1
        else:
            f = OtR(ZERO_F, f)
            size += 2
    return f


def nested_bang(levels: int, n: int = 3, m: int = 2):
    """``!( n : { m : !( ... ) } )`` nested ``levels`` deep; explodes under expansion."""
    f = ONE_F
    for _ in range(levels):
        inner = PlayLit(tuple(_branches(m, f)))
        f = Bang(OppLit(tuple(_branches(n, inner))))
    return f


def _branches(k, child):
    return [Branch(f"_{i}", child) for i in range(1, k + 1)]


def family_par(family: str, n: int, m: int):
    """``par(X_n, X_m)`` for the A (polynomial) or L (exponential) family."""
    make = {"A": game_A, "L": game_L}[family]
    return Par(to_formula(make(n)), to_formula(make(m)))
