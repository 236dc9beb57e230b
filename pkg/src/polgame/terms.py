"""Proof terms of the graded sequent calculus: data types, parser, printer.

Grammar (ASCII, unicode alternatives in brackets)::

    term    := prefix (";" prefix)*                      composition, left nested
    prefix  := "(" [ label "->" term ("," label "->" term)* ] ")"     tuple
             | "{" [ label "->" term ("," label "->" term)* ] "}"     cotuple
             | "<" label "." prefix      [← b · t]      left move (projection)
             | ">" label "." prefix      [→ a · t]      right move (injection)
             | "id"
             | "(" term ")"                             grouping

``->`` may also be written ``↦``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DuplicateLabelError, ParseError
from .syntax import TokenStream, parse_sequent


class Term:
    __slots__ = ()


@dataclass(frozen=True)
class TupleTerm(Term):
    """``(b_1 -> h_1, ..., b_m -> h_m)``: answers every opponent move on the right."""

    branches: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "branches", _check_labels(self.branches, "tuple"))


@dataclass(frozen=True)
class CotupleTerm(Term):
    """``{a_1 -> h_1, ...}``: answers every player move on the left."""

    branches: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "branches", _check_labels(self.branches, "cotuple"))


@dataclass(frozen=True)
class LeftMove(Term):
    """``<b . f``: the process sends ``b`` on the domain channel."""

    label: str
    body: Term


@dataclass(frozen=True)
class RightMove(Term):
    """``>a . g``: the process sends ``a`` on the codomain channel."""

    label: str
    body: Term


@dataclass(frozen=True)
class Identity(Term):
    pass


@dataclass(frozen=True)
class Compose(Term):
    left: Term
    right: Term


ID = Identity()


def _check_labels(branches, kind):
    branches = tuple((str(label), body) for label, body in branches)
    seen = set()
    for label, _ in branches:
        if label in seen:
            raise DuplicateLabelError(f"duplicate label {label!r} in {kind} term")
        seen.add(label)
    return branches


def is_normal(t: Term) -> bool:
    """True iff ``t`` contains no composition."""
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Compose):
            return False
        if isinstance(node, (TupleTerm, CotupleTerm)):
            stack.extend(body for _, body in node.branches)
        elif isinstance(node, (LeftMove, RightMove)):
            stack.append(node.body)
    return True


def term_size(t: Term) -> int:
    count = 0
    stack = [t]
    while stack:
        node = stack.pop()
        count += 1
        if isinstance(node, (TupleTerm, CotupleTerm)):
            stack.extend(body for _, body in node.branches)
        elif isinstance(node, (LeftMove, RightMove)):
            stack.append(node.body)
        elif isinstance(node, Compose):
            stack.extend((node.left, node.right))
    return count


# --------------------------------------------------------------------------
# parsing

def _parse_term(ts: TokenStream) -> Term:
    t = _parse_prefix(ts)
    while ts.peek.kind == ";":
        ts.next()
        t = Compose(t, _parse_prefix(ts))
    return t


def _is_branch_start(ts: TokenStream) -> bool:
    return ts.peek_at(1).kind in ("LABEL", "INT") and ts.peek_at(2).kind == "->"


def _parse_prefix(ts: TokenStream) -> Term:
    tok = ts.peek
    if tok.kind == "(":
        if ts.peek_at(1).kind == ")" or _is_branch_start(ts):
            return TupleTerm(_parse_branches(ts, ")"))
        ts.next()
        inner = _parse_term(ts)
        ts.expect(")")
        return inner
    if tok.kind == "{":
        return CotupleTerm(_parse_branches(ts, "}"))
    if tok.kind in ("<", ">"):
        ts.next()
        label = _parse_label(ts)
        ts.expect(".")
        body = _parse_prefix(ts)
        return LeftMove(label, body) if tok.kind == "<" else RightMove(label, body)
    if tok.kind == "LABEL" and tok.text == "id":
        ts.next()
        return ID
    ts.error(f"expected a term, found {tok.text or 'end of input'!r}")


def _parse_label(ts: TokenStream) -> str:
    tok = ts.peek
    if tok.kind not in ("LABEL", "INT"):
        ts.error(f"expected a label, found {tok.text or 'end of input'!r}")
    return ts.next().text


def _parse_branches(ts: TokenStream, close: str) -> tuple:
    ts.next()
    branches = []
    if ts.peek.kind != close:
        while True:
            label = _parse_label(ts)
            ts.expect("->")
            branches.append((label, _parse_term(ts)))
            if ts.peek.kind != ",":
                break
            ts.next()
    ts.expect(close)
    return tuple(branches)


def parse_term(text: str) -> Term:
    ts = TokenStream(text)
    t = _parse_term(ts)
    if ts.peek.kind != "EOF":
        ts.error(f"unexpected trailing input {ts.peek.text!r}")
    return t


def parse_judgement(text: str):
    """Split ``"<term> :: <sequent>"`` into a term and a sequent."""
    if "::" not in text:
        raise ParseError("expected '<term> :: <sequent>'", None, text)
    term_text, seq_text = text.split("::", 1)
    return parse_term(term_text), parse_sequent(seq_text)


# --------------------------------------------------------------------------
# printing

def _print_branches(branches, opener, closer, unicode):
    arrow = " ↦ " if unicode else " -> "
    if not branches:
        return opener + closer
    inner = ", ".join(label + arrow + print_term(body, unicode) for label, body in branches)
    return f"{opener} {inner} {closer}"


def print_term(t: Term, unicode: bool = False) -> str:
    if isinstance(t, TupleTerm):
        return _print_branches(t.branches, "(", ")", unicode)
    if isinstance(t, CotupleTerm):
        return _print_branches(t.branches, "{", "}", unicode)
    if isinstance(t, (LeftMove, RightMove)):
        if unicode:
            head = "←" if isinstance(t, LeftMove) else "→"
            dot = " · "
        else:
            head = "<" if isinstance(t, LeftMove) else ">"
            dot = " . "
        body = print_term(t.body, unicode)
        if isinstance(t.body, Compose):
            body = f"({body})"
        return f"{head}{t.label}{dot}{body}"
    if isinstance(t, Identity):
        return "id"
    if isinstance(t, Compose):
        right = print_term(t.right, unicode)
        if isinstance(t.right, Compose):
            right = f"({right})"
        return f"{print_term(t.left, unicode)} ; {right}"
    raise TypeError(f"not a term: {t!r}")
