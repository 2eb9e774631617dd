import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lea.logic import (
    BOT,
    TOP,
    Meta,
    Neg,
    ParseError,
    Prod,
    Sequent,
    Var,
    chi,
    chi_literal,
    parse_formula,
    parse_sequent,
    print_formula,
    print_sequent,
    variables,
)

p, q, r = Var("p"), Var("q"), Var("r")

# names chosen to sit next to the keywords and exercise the full identifier class
NAMES = ["p", "q", "x1", "bottom", "topQ", "a_b"]


def formulas(max_depth=8, names=NAMES):
    leaves = st.one_of(st.sampled_from([Var(n) for n in names]), st.just(BOT), st.just(TOP))

    def grow(depth):
        if depth == 0:
            return leaves
        sub = grow(depth - 1)
        return st.one_of(
            leaves,
            st.builds(Neg, sub),
            st.builds(Prod, sub, sub),
        )

    return grow(max_depth)


@pytest.mark.parametrize(
    "text,expected",
    [
        ("top", TOP),
        ("bot", BOT),
        ("~(p * ~q)", Neg(Prod(p, Neg(q)))),
        ("p * q * r", Prod(Prod(p, q), r)),
        ("p * (q * r)", Prod(p, Prod(q, r))),
        ("~p * q", Prod(Neg(p), q)),
        ("~~p", Neg(Neg(p))),
        ("botx", Var("botx")),
        ("¬p · ⊤", Prod(Neg(p), TOP)),
        ("⊥", BOT),
        ("  ( p )  ", p),
    ],
)
def test_parse_examples(text, expected):
    assert parse_formula(text) == expected


@pytest.mark.parametrize(
    "text,pos",
    [
        ("p *", 3),
        ("(p", 2),
        ("p q", 2),
        ("P", 0),
        ("", 0),
        ("p |- q", 2),
        ("~", 1),
        ("p * )", 4),
    ],
)
def test_syntax_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_formula(text)
    assert info.value.pos == pos
    assert f"position {pos}" in str(info.value)


def test_metavariables_only_when_allowed():
    assert parse_formula("?phi * p", allow_meta=True) == Prod(Meta("phi"), p)
    with pytest.raises(ParseError):
        parse_formula("?phi")


@pytest.mark.parametrize(
    "f,text",
    [
        (Prod(Prod(p, q), r), "p * q * r"),
        (Prod(p, Prod(q, r)), "p * (q * r)"),
        (Neg(Prod(p, q)), "~(p * q)"),
        (Prod(Neg(p), Neg(Neg(q))), "~p * ~~q"),
        (TOP, "top"),
    ],
)
def test_print_examples(f, text):
    assert print_formula(f) == text


def test_sequents():
    s = parse_sequent("p * q |- q * p")
    assert s == Sequent(Prod(p, q), Prod(q, p))
    assert print_sequent(s) == "p * q |- q * p"
    assert parse_sequent("p ⊢ q") == Sequent(p, q)
    with pytest.raises(ParseError):
        parse_sequent("p |- q |- r")
    with pytest.raises(ParseError):
        parse_sequent("p")


def test_variables_in_order_of_first_occurrence():
    assert variables(parse_formula("q * ~(p * q) * r")) == ["q", "p", "r"]


def test_chi_forms():
    assert print_formula(chi(p, q)) == "~(~(p * ~q) * ~q)"
    assert print_formula(chi(p, TOP)) == "~(~(p * ~top) * ~top)"
    assert print_formula(chi(BOT, q)) == "~(~(bot * ~q) * ~q)"
    assert print_formula(chi_literal(p, q)) == "~(~(p * ~p) * ~p)"


@settings(max_examples=500, deadline=None)
@given(formulas())
def test_round_trip(f):
    assert parse_formula(print_formula(f)) == f


@settings(max_examples=200, deadline=None)
@given(formulas(4), formulas(4))
def test_sequent_round_trip(a, b):
    s = Sequent(a, b)
    assert parse_sequent(print_sequent(s)) == s
