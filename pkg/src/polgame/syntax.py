"""Formula and sequent syntax: AST types, a recursive-descent parser and a printer.

Grammar (whitespace-insensitive)::

    formula  := literal | conn
    literal  := "(" branches? ")" | "{" branches? "}"
    branches := branch ("," branch)*
    branch   := (label | int | int "*" label) ":" formula
    conn     := ("ox"|"oxr"|"oxl"|"par"|"otl"|"otr") "(" formula "," formula ")"
              | ("dual"|"bang"|"quest") "(" formula ")" | "!" formula | "?" formula
    sequent  := formula ("|-o" | "|-p" | "|-") formula

``n : F`` expands to ``n`` branches labelled ``_1 .. _n`` and ``n * a : F`` to
``a#1 .. a#n``.  Round brackets are opponent literals, braces player literals.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field

from .errors import DuplicateLabelError, NoMorphismError, ParseError, PolarityError


class Polarity(enum.Enum):
    OPPONENT = "opponent"
    PLAYER = "player"

    def flip(self) -> "Polarity":
        return Polarity.PLAYER if self is Polarity.OPPONENT else Polarity.OPPONENT

    def __str__(self):
        return self.value


OPP = Polarity.OPPONENT
PLY = Polarity.PLAYER


class Formula:
    """Base of every AST node.  ``polarity`` is fixed at construction."""

    __slots__ = ()
    polarity: Polarity


def _set_polarity(node, pol):
    object.__setattr__(node, "polarity", pol)


@dataclass(frozen=True)
class Branch:
    label: str
    child: Formula


def _check_branches(kind, branches, want):
    seen = set()
    for br in branches:
        if br.label in seen:
            raise DuplicateLabelError(f"duplicate label {br.label!r} in {kind} literal")
        seen.add(br.label)
        if br.child.polarity is not want:
            raise PolarityError(
                f"{kind} literal branch {br.label!r} must be a {want} game, "
                f"got a {br.child.polarity} game")


@dataclass(frozen=True)
class OppLit(Formula):
    branches: tuple = ()
    polarity: Polarity = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "branches", tuple(self.branches))
        _check_branches("opponent", self.branches, PLY)
        _set_polarity(self, OPP)


@dataclass(frozen=True)
class PlayLit(Formula):
    branches: tuple = ()
    polarity: Polarity = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "branches", tuple(self.branches))
        _check_branches("player", self.branches, OPP)
        _set_polarity(self, PLY)


@dataclass(frozen=True)
class Binary(Formula):
    left: Formula
    right: Formula
    polarity: Polarity = field(init=False, repr=False, compare=False)

    # (left operand, right operand, result); overridden per connective
    signature = (OPP, OPP, OPP)
    keyword = "?"

    def __post_init__(self):
        want_l, want_r, result = self.signature
        for side, operand, want in (("left", self.left, want_l), ("right", self.right, want_r)):
            if operand.polarity is not want:
                raise PolarityError(
                    f"{self.keyword} requires a {want} {side} operand, "
                    f"got a {operand.polarity} game")
        _set_polarity(self, result)


class Tensor(Binary):
    signature = (OPP, OPP, OPP)
    keyword = "ox"


class OxR(Binary):
    signature = (OPP, PLY, PLY)
    keyword = "oxr"


class OxL(Binary):
    signature = (PLY, OPP, PLY)
    keyword = "oxl"


class Par(Binary):
    signature = (PLY, PLY, PLY)
    keyword = "par"


class OtR(Binary):
    signature = (PLY, OPP, OPP)
    keyword = "otr"


class OtL(Binary):
    signature = (OPP, PLY, OPP)
    keyword = "otl"


@dataclass(frozen=True)
class Unary(Formula):
    child: Formula
    polarity: Polarity = field(init=False, repr=False, compare=False)

    keyword = "?"

    def __post_init__(self):
        _set_polarity(self, self._result_polarity())

    def _result_polarity(self) -> Polarity:
        raise NotImplementedError


class Dual(Unary):
    keyword = "dual"

    def _result_polarity(self):
        return self.child.polarity.flip()


class Bang(Unary):
    keyword = "bang"

    def _result_polarity(self):
        if self.child.polarity is not OPP:
            raise PolarityError("bang requires an opponent operand, got a player game")
        return OPP


class Quest(Unary):
    keyword = "quest"

    def _result_polarity(self):
        if self.child.polarity is not PLY:
            raise PolarityError("quest requires a player operand, got an opponent game")
        return PLY


BINARY = {cls.keyword: cls for cls in (Tensor, OxR, OxL, Par, OtR, OtL)}
UNARY = {cls.keyword: cls for cls in (Dual, Bang, Quest)}


def polarity_of(f: Formula) -> Polarity:
    return f.polarity


def ast_size(f: Formula) -> int:
    """Number of AST nodes (literals count one node each, plus their children)."""
    count = 0
    stack = [f]
    while stack:
        node = stack.pop()
        count += 1
        if isinstance(node, (OppLit, PlayLit)):
            stack.extend(br.child for br in node.branches)
        elif isinstance(node, Binary):
            stack.append(node.left)
            stack.append(node.right)
        else:
            stack.append(node.child)
    return count


class SequentKind(enum.Enum):
    OPPONENT = "|-o"
    MIXED = "|-"
    PLAYER = "|-p"


_KIND_POLARITIES = {
    SequentKind.OPPONENT: (OPP, OPP),
    SequentKind.MIXED: (OPP, PLY),
    SequentKind.PLAYER: (PLY, PLY),
}


@dataclass(frozen=True)
class Sequent:
    kind: SequentKind
    lhs: Formula
    rhs: Formula

    def __post_init__(self):
        if self.lhs.polarity is PLY and self.rhs.polarity is OPP:
            raise NoMorphismError("there are no morphisms from a player game to an opponent game")
        want = _KIND_POLARITIES[self.kind]
        got = (self.lhs.polarity, self.rhs.polarity)
        if got != want:
            raise PolarityError(
                f"sequent {self.kind.value} needs {want[0]} |- {want[1]}, "
                f"got {got[0]} |- {got[1]}")


def sequent_kind_for(lhs: Polarity, rhs: Polarity) -> SequentKind:
    for kind, pols in _KIND_POLARITIES.items():
        if pols == (lhs, rhs):
            return kind
    raise NoMorphismError("there are no morphisms from a player game to an opponent game")


# --------------------------------------------------------------------------
# lexing

_LABEL_CHARS = "A-Za-z0-9_#"
LABEL_RE = re.compile(
    rf"(?:[A-Za-z_][{_LABEL_CHARS}]*|\*)(?:\.(?:[{_LABEL_CHARS}]+|\*))*")
_INT_RE = re.compile(r"[0-9]+")
_SYMBOLS = ["::", "->", "|-", "(", ")", "{", "}", ",", ":", "!", "?", ";", "<", ">", "."]
_UNICODE = {"↦": "->", "←": "<", "→": ">", "·": ".", "⊢": "|-"}


@dataclass(frozen=True)
class Token:
    kind: str  # "INT", "LABEL", "EOF" or the symbol itself
    text: str
    pos: int


def tokenize(text: str) -> list:
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _UNICODE:
            toks.append(Token(_UNICODE[ch], ch, i))
            i += 1
            continue
        m = _INT_RE.match(text, i)
        if m:
            toks.append(Token("INT", m.group(), i))
            i = m.end()
            continue
        if text.startswith("|-", i):
            nxt = text[i + 2:i + 3]
            after = text[i + 3:i + 4]
            if nxt in ("o", "p") and not re.match(rf"[{_LABEL_CHARS}.]", after):
                toks.append(Token("|-" + nxt, "|-" + nxt, i))
                i += 3
            else:
                toks.append(Token("|-", "|-", i))
                i += 2
            continue
        m = LABEL_RE.match(text, i)
        if m:
            toks.append(Token("LABEL", m.group(), i))
            i = m.end()
            continue
        for sym in _SYMBOLS:
            if text.startswith(sym, i):
                toks.append(Token(sym, sym, i))
                i += len(sym)
                break
        else:
            raise ParseError(f"unexpected character {ch!r}", i, text)
    toks.append(Token("EOF", "", n))
    return toks


class TokenStream:
    def __init__(self, text):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    @property
    def peek(self) -> Token:
        return self.toks[self.i]

    def peek_at(self, k) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def next(self) -> Token:
        tok = self.toks[self.i]
        if tok.kind != "EOF":
            self.i += 1
        return tok

    def expect(self, kind) -> Token:
        tok = self.peek
        if tok.kind != kind:
            shown = tok.text or "end of input"
            raise ParseError(f"expected {kind!r} but found {shown!r}", tok.pos, self.text)
        return self.next()

    def error(self, message):
        raise ParseError(message, self.peek.pos, self.text)


# --------------------------------------------------------------------------
# parsing

def _parse_formula(ts: TokenStream) -> Formula:
    tok = ts.peek
    if tok.kind in ("(", "{"):
        return _parse_literal(ts)
    if tok.kind == "!":
        ts.next()
        return _build(ts, tok, Bang, _parse_formula(ts))
    if tok.kind == "?":
        ts.next()
        return _build(ts, tok, Quest, _parse_formula(ts))
    if tok.kind == "LABEL" and (tok.text in BINARY or tok.text in UNARY):
        ts.next()
        ts.expect("(")
        if tok.text in BINARY:
            left = _parse_formula(ts)
            ts.expect(",")
            right = _parse_formula(ts)
            ts.expect(")")
            return _build(ts, tok, BINARY[tok.text], left, right)
        child = _parse_formula(ts)
        ts.expect(")")
        return _build(ts, tok, UNARY[tok.text], child)
    ts.error(f"expected a formula, found {tok.text or 'end of input'!r}")


def _build(ts, tok, cls, *args):
    try:
        return cls(*args)
    except (PolarityError, DuplicateLabelError) as exc:
        raise type(exc)(f"{exc} (connective at position {tok.pos})") from None


def _parse_literal(ts: TokenStream) -> Formula:
    open_tok = ts.next()
    close = ")" if open_tok.kind == "(" else "}"
    branches = []
    counters = {}
    if ts.peek.kind != close:
        while True:
            branches.extend(_parse_branch(ts, counters))
            if ts.peek.kind == ",":
                ts.next()
                continue
            break
    ts.expect(close)
    cls = OppLit if close == ")" else PlayLit
    return _build(ts, open_tok, cls, tuple(branches))


def _parse_branch(ts: TokenStream, counters: dict) -> list:
    # numbering continues across groups of one literal: {1:(),1:()} gives _1, _2
    tok = ts.peek
    if tok.kind == "INT":
        ts.next()
        count = int(tok.text)
        if ts.peek.kind == "LABEL" and ts.peek.text == "*" and ts.peek_at(1).kind == "LABEL":
            ts.next()
            base = ts.next().text
            prefix = f"{base}#"
        else:
            prefix = "_"
        start = counters.get(prefix, 0)
        counters[prefix] = start + count
        labels = [f"{prefix}{k}" for k in range(start + 1, start + count + 1)]
    elif tok.kind == "LABEL":
        ts.next()
        labels = [tok.text]
    else:
        ts.error(f"expected a branch label, found {tok.text or 'end of input'!r}")
    ts.expect(":")
    child = _parse_formula(ts)
    return [Branch(label, child) for label in labels]


def parse_formula(text: str) -> Formula:
    ts = TokenStream(text)
    f = _parse_formula(ts)
    if ts.peek.kind != "EOF":
        ts.error(f"unexpected trailing input {ts.peek.text!r}")
    return f


def parse_sequent(text: str) -> Sequent:
    ts = TokenStream(text)
    lhs = _parse_formula(ts)
    tok = ts.next()
    kinds = {k.value: k for k in SequentKind}
    if tok.kind not in kinds:
        raise ParseError("expected a turnstile '|-o', '|-' or '|-p'", tok.pos, text)
    rhs = _parse_formula(ts)
    if ts.peek.kind != "EOF":
        ts.error(f"unexpected trailing input {ts.peek.text!r}")
    return Sequent(kinds[tok.kind], lhs, rhs)


# --------------------------------------------------------------------------
# printing

def _print_branches(branches, opener, closer):
    if not branches:
        return opener + closer
    inner = ", ".join(f"{label}:{text}" for label, text in branches)
    return f"{opener} {inner} {closer}"


def print_formula(f: Formula) -> str:
    if isinstance(f, OppLit):
        return _print_branches([(b.label, print_formula(b.child)) for b in f.branches], "(", ")")
    if isinstance(f, PlayLit):
        return _print_branches([(b.label, print_formula(b.child)) for b in f.branches], "{", "}")
    if isinstance(f, Binary):
        return f"{f.keyword}({print_formula(f.left)}, {print_formula(f.right)})"
    return f"{f.keyword}({print_formula(f.child)})"


def print_sequent(s: Sequent) -> str:
    return f"{print_formula(s.lhs)} {s.kind.value} {print_formula(s.rhs)}"
