"""Closed-form size and profile formulas, evaluated without expanding anything.

All arithmetic is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import comb, factorial

from .errors import UnsupportedConnective
from .syntax import (Bang, Dual, OppLit, OtL, OtR, OxL, OxR, Par, PlayLit,
                     Quest, Tensor)


def gamma(n: int, m: int) -> int:
    """0 when both ``n`` and ``m`` are odd, 1 otherwise."""
    return 0 if (n % 2 == 1 and m % 2 == 1) else 1


def _at(p, i):
    return p[i] if 0 <= i < len(p) else 0


def _trim(p):
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def profile_tensor(p1, p2) -> list:
    """Profile of the tensor (or par) of two trees with the given profiles."""
    length = len(p1) + len(p2) - 1
    out = [1]
    for n in range(1, length):
        out.append(sum(comb(n // 2, i // 2) * gamma(i, n - i) * _at(p1, i) * _at(p2, n - i)
                       for i in range(n + 1)))
    return _trim(out)


def profile_oxr(p_passive, p_directed) -> list:
    """Profile of ``O (x)-> P`` from the profiles of O and P.

    ``p_directed`` is the operand whose root is consumed (P here); the same
    formula serves ``oxl``, ``otr`` and ``otl`` with the operands placed
    accordingly.
    """
    length = len(p_passive) + len(p_directed) - 1
    out = [1]
    for n in range(length - 1):
        out.append(sum(comb(n // 2, i // 2) * gamma(i, n - i)
                       * _at(p_passive, i) * _at(p_directed, n - i + 1)
                       for i in range(n + 1)))
    return _trim(out)


def bang_leaf_count(n: int, m: int) -> int:
    """Leaves of ``!(n:{m:()})``."""
    return factorial(n) * m**n


def bang_edge_bound(eo: int, ep: int) -> int:
    """Upper bound on the edges of ``!G`` from the opponent/player edge counts of G."""
    if ep == 0:
        return eo
    return 2 * eo * factorial(eo) * ep**eo


def edge_bound_from_profile(p) -> int:
    return sum(p[i] * p[i + 1] for i in range(len(p) - 1))


def _directed_operands(f):
    """(passive, directed) operands of a one-sided connective."""
    if isinstance(f, (OxR, OtL)):
        # O (x)-> P consumes P's root; O <-(par) P consumes O's root
        return (f.left, f.right) if isinstance(f, OxR) else (f.right, f.left)
    # P <-(x) O consumes P's root; P (par)-> O consumes O's root
    return (f.right, f.left) if isinstance(f, OxL) else (f.left, f.right)


def tree_profile(f) -> list:
    """Profile of ``expand(f)`` computed from operand profiles (no exponentials)."""
    if isinstance(f, (OppLit, PlayLit)):
        out = [1]
        for br in f.branches:
            sub = tree_profile(br.child)
            out.extend([0] * (len(sub) + 1 - len(out)))
            for i, v in enumerate(sub):
                out[i + 1] += v
        return out
    if isinstance(f, Dual):
        return tree_profile(f.child)
    if isinstance(f, (Tensor, Par)):
        return profile_tensor(tree_profile(f.left), tree_profile(f.right))
    if isinstance(f, (OxR, OxL, OtR, OtL)):
        passive, directed = _directed_operands(f)
        return profile_oxr(tree_profile(passive), tree_profile(directed))
    raise UnsupportedConnective(f"no closed-form profile for {type(f).__name__}")


# --------------------------------------------------------------------------
# graph games (structure shared, no binomial interleaving counts)

def _graph_profile_product(p1, p2):
    length = len(p1) + len(p2) - 1
    out = [sum(gamma(i, n - i) * _at(p1, i) * _at(p2, n - i) for i in range(n + 1))
           for n in range(length)]
    return _trim(out)


def _graph_profile_directed(p_passive, p_directed):
    length = len(p_passive) + len(p_directed) - 1
    out = [1] + [sum(gamma(i, n - i) * _at(p_passive, i) * _at(p_directed, n - i + 1)
                     for i in range(n + 1))
                 for n in range(length - 1)]
    return _trim(out)


def graph_profile(f) -> list:
    if isinstance(f, (OppLit, PlayLit)):
        out = [1]
        for br in f.branches:
            sub = graph_profile(br.child)
            out.extend([0] * (len(sub) + 1 - len(out)))
            for i, v in enumerate(sub):
                out[i + 1] += v
        return out
    if isinstance(f, Dual):
        return graph_profile(f.child)
    if isinstance(f, (Tensor, Par)):
        return _graph_profile_product(graph_profile(f.left), graph_profile(f.right))
    if isinstance(f, (OxR, OxL, OtR, OtL)):
        passive, directed = _directed_operands(f)
        return _graph_profile_directed(graph_profile(passive), graph_profile(directed))
    raise UnsupportedConnective(f"graph sizing does not cover {type(f).__name__}")


@dataclass(frozen=True)
class SizeQuad:
    nodes_o: int
    nodes_p: int
    edges_o: int
    edges_p: int

    @property
    def nodes(self):
        return self.nodes_o + self.nodes_p

    @property
    def edges(self):
        return self.edges_o + self.edges_p

    def triple(self):
        """The coarser (|G|_o, |G|_p, esize_p) summary."""
        return (self.nodes_o, self.nodes_p, self.edges_p)

    def to_json(self):
        return asdict(self)


def _graph_size(f):
    """Returns (nodes_o, nodes_p, edges_o, edges_p, root_out_degree).

    Counts are of reachable product states.  In a one-sided product the
    directed operand's root is only ever paired with the other root, which
    removes ``(nodes of the passive side's root polarity) - 1`` states and
    their out-edges from the full product count.
    """
    if isinstance(f, (OppLit, PlayLit)):
        no = np_ = eo = ep = 0
        for br in f.branches:
            c = _graph_size(br.child)
            no += c[0]
            np_ += c[1]
            eo += c[2]
            ep += c[3]
        k = len(f.branches)
        if isinstance(f, OppLit):
            return (no + 1, np_, eo + k, ep, k)
        return (no, np_ + 1, eo, ep + k, k)
    if isinstance(f, Dual):
        no, np_, eo, ep, r = _graph_size(f.child)
        return (np_, no, ep, eo, r)
    if isinstance(f, (Bang, Quest)):
        raise UnsupportedConnective("graph sizing does not cover the exponentials")

    n1, N1, eo1, ep1, r1 = _graph_size(f.left)
    n2, N2, eo2, ep2, r2 = _graph_size(f.right)
    if isinstance(f, (Tensor, OxR, OxL)):
        # opponent states pair two opponent nodes; player states mix polarities
        no = n1 * n2
        np_ = N1 * n2 + n1 * N2
        eo = eo1 * n2 + n1 * eo2
        ep = ep1 * n2 + n1 * ep2
        if isinstance(f, Tensor):
            return (no, np_, eo, ep, r1 + r2)
        if isinstance(f, OxR):
            # unreachable: (o, root of P) for every non-root opponent node o of O
            return (no, np_ - (n1 - 1), eo, ep - (n1 - 1) * r2, r2)
        return (no, np_ - (n2 - 1), eo, ep - (n2 - 1) * r1, r1)
    # par family: player states pair two player nodes
    np_ = N1 * N2
    no = n1 * N2 + N1 * n2
    ep = ep1 * N2 + N1 * ep2
    eo = eo1 * N2 + N1 * eo2
    if isinstance(f, Par):
        return (no, np_, eo, ep, r1 + r2)
    if isinstance(f, OtR):
        return (no - (N1 - 1), np_, eo - (N1 - 1) * r2, ep, r2)
    return (no - (N2 - 1), np_, eo - (N2 - 1) * r1, ep, r1)


def graph_size(f) -> SizeQuad:
    no, np_, eo, ep, _ = _graph_size(f)
    return SizeQuad(no, np_, eo, ep)
