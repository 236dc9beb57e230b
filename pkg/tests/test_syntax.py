import pytest
from hypothesis import given

from polgame.errors import DuplicateLabelError, NoMorphismError, ParseError, PolarityError
from polgame.syntax import (OPP, PLY, Bang, Branch, Dual, OppLit, OtL, OtR, OxL, OxR, Par, PlayLit,
                            Quest, SequentKind, Tensor, ast_size, parse_formula, parse_sequent,
                            polarity_of, print_formula, print_sequent)

from conftest import formulas

ONE = OppLit(())
ZERO = PlayLit(())


def test_empty_opponent_literal():
    f = parse_formula("()")
    assert f == OppLit(())
    assert f.polarity is OPP


def test_multiplicity_expands_to_numbered_labels():
    f = parse_formula("( 2 : { 2 : () } )")
    inner = PlayLit((Branch("_1", ONE), Branch("_2", ONE)))
    assert f == OppLit((Branch("_1", inner), Branch("_2", inner)))


def test_counted_label_multiplicity():
    f = parse_formula("{ 3 * a : () }")
    assert [b.label for b in f.branches] == ["a#1", "a#2", "a#3"]


def test_numbering_continues_across_groups():
    f = parse_formula("{1:(),1:(2:{})}")
    assert [b.label for b in f.branches] == ["_1", "_2"]


def test_tensor_rejects_player_operand():
    with pytest.raises(PolarityError):
        parse_formula("ox((),{})")


def test_rejection_names_the_position():
    with pytest.raises(PolarityError, match="position"):
        parse_formula("par({}, ox((), {}))")


def test_duplicate_labels_rejected():
    with pytest.raises(DuplicateLabelError):
        parse_formula("(a:{}, a:{})")


@pytest.mark.parametrize("text", ["(", "(a {})", "ox(())", "foo(())", "() junk", "{a:()"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_formula(text)


@pytest.mark.parametrize("text,kind,pols", [
    ("() |-o ()", SequentKind.OPPONENT, (OPP, OPP)),
    ("{} |-p {}", SequentKind.PLAYER, (PLY, PLY)),
    ("( a:{} ) |- { b:() }", SequentKind.MIXED, (OPP, PLY)),
])
def test_sequent_kinds(text, kind, pols):
    s = parse_sequent(text)
    assert s.kind is kind
    assert (s.lhs.polarity, s.rhs.polarity) == pols


def test_player_to_opponent_sequent_has_no_morphisms():
    with pytest.raises(NoMorphismError):
        parse_sequent("{} |- ()")


def test_sequent_kind_must_match_polarities():
    with pytest.raises(PolarityError):
        parse_sequent("() |-o {}")


def test_printing_examples():
    assert print_formula(ONE) == "()"
    assert print_formula(Dual(ONE)) == "dual(())"
    assert print_formula(parse_formula("(2:{2:()})")) == \
        "( _1:{ _1:(), _2:() }, _2:{ _1:(), _2:() } )"


def test_polarity_examples():
    assert polarity_of(OxR(ONE, ZERO)) is PLY
    assert polarity_of(Dual(ZERO)) is OPP
    assert polarity_of(Bang(ONE)) is OPP
    assert polarity_of(Quest(ZERO)) is PLY
    assert polarity_of(OtR(ZERO, ONE)) is OPP
    assert polarity_of(OtL(ONE, ZERO)) is OPP
    assert polarity_of(OxL(ZERO, ONE)) is PLY
    assert polarity_of(Par(ZERO, ZERO)) is PLY
    assert polarity_of(Tensor(ONE, ONE)) is OPP


def test_exponentials_check_their_operand():
    with pytest.raises(PolarityError):
        Bang(ZERO)
    with pytest.raises(PolarityError):
        Quest(ONE)


def test_prefix_shorthands():
    assert parse_formula("!(a:{})") == parse_formula("bang((a:{}))")
    assert parse_formula("?{}") == Quest(ZERO)


def test_ast_size_counts_every_node():
    assert ast_size(ONE) == 1
    assert ast_size(parse_formula("ox((a:{}), ())")) == 4


@given(formulas())
def test_round_trip(f):
    assert parse_formula(print_formula(f)) == f


@given(formulas(pol=OPP, max_depth=2))
def test_sequent_round_trip(f):
    s = parse_sequent(f"{print_formula(f)} |-o ()")
    assert parse_sequent(print_sequent(s)) == s
