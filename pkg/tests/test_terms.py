import pytest
from hypothesis import given, strategies as st

from polgame.errors import DuplicateLabelError, ParseError
from polgame.terms import (ID, Compose, CotupleTerm, LeftMove, RightMove, TupleTerm, is_normal,
                           parse_judgement, parse_term, print_term, term_size)

labels = st.sampled_from(["a", "b", "c", "_1", "a#2", "L.x", "*"])


def terms(max_leaves=12):
    leaf = st.sampled_from([TupleTerm(()), CotupleTerm(()), ID])

    def extend(children):
        branches = st.lists(st.tuples(labels, children), max_size=3,
                            unique_by=lambda br: br[0]).map(tuple)
        return st.one_of(
            branches.map(TupleTerm),
            branches.map(CotupleTerm),
            st.builds(LeftMove, labels, children),
            st.builds(RightMove, labels, children),
            st.builds(Compose, children, children),
        )

    return st.recursive(leaf, extend, max_leaves=max_leaves)


def test_basic_forms():
    assert parse_term("()") == TupleTerm(())
    assert parse_term("{}") == CotupleTerm(())
    assert parse_term("id") == ID
    assert parse_term(">a . ()") == RightMove("a", TupleTerm(()))
    assert parse_term("<b . {}") == LeftMove("b", CotupleTerm(()))


def test_composition_nests_left():
    t = parse_term("() ; id ; {}")
    assert t == Compose(Compose(TupleTerm(()), ID), CotupleTerm(()))


def test_grouping():
    t = parse_term("() ; (id ; {})")
    assert t == Compose(TupleTerm(()), Compose(ID, CotupleTerm(())))


def test_unicode_spelling():
    assert parse_term("(a ↦ →c · ())") == parse_term("(a -> >c . ())")
    assert print_term(parse_term("(a -> <a . {})"), unicode=True) == "( a ↦ ←a · {} )"


def test_printing():
    t = parse_term("(b -> >a . (), c -> <d . {})")
    assert print_term(t) == "( b -> >a . (), c -> <d . {} )"
    assert print_term(RightMove("a", Compose(ID, ID))) == ">a . (id ; id)"


def test_duplicate_labels():
    with pytest.raises(DuplicateLabelError):
        parse_term("(a -> (), a -> ())")


@pytest.mark.parametrize("text", ["(a -> )", ">a ()", "(a -> () ,", "foo", "() ;"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_term(text)


def test_judgement():
    t, s = parse_judgement("() :: () |-o ()")
    assert t == TupleTerm(())
    assert s.kind.value == "|-o"
    with pytest.raises(ParseError):
        parse_judgement("()")


def test_normal_and_size():
    assert is_normal(parse_term("(a -> >b . ())"))
    assert not is_normal(parse_term("(a -> () ; ())"))
    assert term_size(parse_term("() ; {}")) == 3


@given(terms())
def test_round_trip(t):
    assert parse_term(print_term(t)) == t
    assert parse_term(print_term(t, unicode=True)) == t
