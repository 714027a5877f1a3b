from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from djd import double
from djd.parser import Name, ParseError, Power, Product, Sum, parse, parse_element, parse_vector, presentation

D = double.dj_presentation()
x, y, g, zeta, u, v = D.gens()


def test_ast_shapes():
    assert isinstance(parse("y*x"), Product)
    assert isinstance(parse("x + y"), Sum)
    assert isinstance(parse("-x"), Sum)
    node = parse("g^-2")
    assert isinstance(node, Power) and node.exponent == -2
    assert parse("zeta") == Name("zeta", 0)


def test_jordan_relation_through_parser():
    assert parse_element("y*x") == x * y - Fraction(1, 2) * x * x


def test_macro_q_expands():
    assert parse_element("q") == parse_element("u*x + 2*(1+g)")
    assert parse_element("z") == parse_element("q^2*gi")


def test_macros_match_distinguished():
    dist = double.distinguished()
    for name in ("q", "z", "s", "theta", "omega"):
        assert parse_element(name) == getattr(dist, name)


def test_whitespace_and_unicode():
    assert parse_element("  v *y ") == parse_element("v*y")
    assert parse_element("ζ*x") == zeta * x
    assert parse_element("gi") == D.gen("g^-1")


def test_rationals_and_signs():
    assert parse_element("-1/2*x^2 + x*y") == x * y - Fraction(1, 2) * x * x
    assert parse_element("-(x - y)") == y - x
    assert parse_element("(1/2)^-1") == 2
    assert parse_element("3/6") == Fraction(1, 2)


def test_x_inverse_rejected():
    with pytest.raises(ParseError, match="x is not invertible") as exc:
        parse_element("x^-1")
    assert exc.value.pos == 1


def test_q_inverse_rejected():
    with pytest.raises(ParseError, match="not invertible"):
        parse_element("q^-1")


@pytest.mark.parametrize("text, pos", [
    ("x + * y", 4),
    ("(x", 2),
    ("x^y", 2),
    ("x^1/2", 2),
    ("x $ y", 2),
    ("x y", 2),
    ("", 0),
])
def test_syntax_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as exc:
        parse_element(text)
    assert exc.value.pos == pos


@pytest.mark.parametrize("text, algebra", [("e", "dj"), ("x", "sl2"), ("theta", "a2s"), ("foo", "dj")])
def test_unknown_names(text, algebra):
    with pytest.raises(ParseError, match="unknown name"):
        parse_element(text, algebra)


def test_unknown_algebra():
    with pytest.raises(ParseError):
        presentation("e8")


def test_other_algebras():
    assert parse_element("e*f - f*e", "sl2") == parse_element("h", "sl2")
    assert parse_element("p*q - q*p", "a2s") == 1
    assert parse_element("qi*q", "a2s") == 1


letters = st.sampled_from(["x", "y", "g", "gi", "zeta", "u", "v"])
coeff_text = st.sampled_from(["1", "2", "1/2", "3/4", "5"])


@st.composite
def expressions(draw):
    terms = []
    for _ in range(draw(st.integers(1, 3))):
        word = "*".join(draw(st.lists(letters, min_size=1, max_size=3)))
        sign = draw(st.sampled_from(["+", "-"]))
        terms.append(f"{sign} {draw(coeff_text)}*{word}")
    return " ".join(terms)


@settings(max_examples=50, deadline=None)
@given(expressions())
def test_round_trip(text):
    a = parse_element(text)
    assert parse_element(str(a)) == a
    assert str(parse_element(str(a))) == str(a)


@pytest.mark.parametrize("algebra, text", [
    ("sl2", "e*f*h - 2*f + 1/3"),
    ("a2s", "p*qi*t - xi*ti*zp + z^-2"),
])
def test_round_trip_other_algebras(algebra, text):
    a = parse_element(text, algebra)
    assert parse_element(str(a), algebra) == a


def test_parse_vector():
    assert parse_vector("z(1,0)", "z", 2) == {(1, 0): 1}
    assert parse_vector("2·x(3) - 1/2*x(0)", "x", 1) == {(3,): 2, (0,): Fraction(-1, 2)}
    with pytest.raises(ParseError):
        parse_vector("z(1)", "z", 2)
    with pytest.raises(ParseError):
        parse_vector("x(1)", "z", 2)
    with pytest.raises(ParseError):
        parse_vector("", "z", 2)
