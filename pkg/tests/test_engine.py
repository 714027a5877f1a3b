import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import _oracle
from djd.double import dj_presentation
from djd.engine import (
    AlgebraMap,
    NonTerminationError,
    Presentation,
    PresentationError,
    Tensor,
    check_local_confluence,
    commutator,
    degree_of,
)
from djd.sl2 import sl2_presentation
from djd.weyl import a2s_presentation

D = dj_presentation()
x, y, g, zeta, u, v = D.gens()
gi = D.gen("g^-1")
H = Fraction(1, 2)


def from_exponents(terms):
    """Oracle output -> engine Element."""
    out = D.zero()
    for exps, c in terms.items():
        out = out + D.monomial(dict(exps), c)
    return out


def engine_word(word):
    out = D.one()
    for letter in word:
        out = out * D.gen(letter)
    return out


# -- small presentations --------------------------------------------------------


def test_docstring_example():
    P = Presentation(["a", "b"], rules={("b", "a"): {("a", "b"): 1, (): 1}})
    a, b = P.gens()
    assert b * a == a * b + 1
    assert str(b * a) == "a*b + 1"


def test_jordan_plane_relation():
    assert y * x == x * y - H * x * x


def test_missing_rule_rejected():
    with pytest.raises(PresentationError, match="no straightening rule"):
        Presentation(["a", "b"])


def test_inhomogeneous_rule_rejected():
    with pytest.raises(PresentationError):
        Presentation(["a", "b"], rules={("b", "a"): {("a", "b"): 1, ("a",): 1}},
                     degrees={"a": 1, "b": 1})


def test_rule_with_negative_power_rejected():
    with pytest.raises(PresentationError):
        Presentation(["a", "b"], rules={("b", "a"): {("a^-1", "b"): 1}}, invertible=["b"])


def test_unordered_right_side_rejected():
    with pytest.raises(PresentationError, match="not PBW ordered"):
        Presentation(["a", "b"], rules={("b", "a"): {("b", "a"): 1}})


def test_non_descending_rule_rejected_by_validation():
    with pytest.raises(PresentationError):
        Presentation(["a", "b"], rules={("b", "a"): {("a", "a", "b", "b"): 1}})


def test_non_descending_rule_stops_at_runtime():
    P = Presentation(["a", "b"], rules={("b", "a"): {("a", "a", "b", "b"): 1}}, validate=False)
    a, b = P.gens()
    with pytest.raises(NonTerminationError):
        P.multiply_terms((b * b).terms, (a * a).terms, step_cap=1000)


def test_step_cap_guard():
    big_v = v ** 4
    big_y = y ** 4
    with pytest.raises(NonTerminationError):
        D.multiply_terms(big_v.terms, big_y.terms, step_cap=5)
    D.clear_cache()
    assert D.multiply_terms(big_v.terms, big_y.terms)


def test_non_confluent_presentation_detected():
    P = Presentation(
        ["a", "b", "c"],
        rules={
            ("b", "a"): {("a", "b"): 1, (): 1},
            ("c", "a"): {("a", "c"): 1},
            ("c", "b"): {("b", "c"): 1, ("b",): 1},
        },
    )
    report = check_local_confluence(P)
    assert not report.ok
    assert report.failures


@pytest.mark.parametrize("pres", [dj_presentation(), sl2_presentation(), a2s_presentation()],
                         ids=["dj", "sl2", "a2s"])
def test_confluence(pres):
    report = check_local_confluence(pres)
    assert report.ok, report.failures[:3]
    letters = len(pres.letters())
    assert report.triples_checked == letters ** 3


def test_dj_has_seven_letters():
    assert len(D.letters()) == 7


# -- against the naive oracle ---------------------------------------------------

FROZEN = {
    # output of the naive rewriter, frozen
    ("u", "y", "y"): {(("y", 2), ("u", 1)): 1, (("y", 1),): 2,
                      (("y", 1), ("g", 1)): -2, (("x", 1), ("g", 1)): -1},
    ("v", "x", "x"): {(("x", 2), ("v", 1)): 1, (("x", 2), ("u", 1)): 2,
                      (("x", 1),): 2, (("x", 1), ("g", 1)): -2},
    ("u", "y", "y", "y"): {(("y", 3), ("u", 1)): 1, (("y", 2),): 3,
                           (("y", 2), ("g", 1)): -3, (("x", 1), ("y", 1), ("g", 1)): -3},
    ("v", "u", "y"): {(("y", 1), ("u", 1), ("v", 1)): 1, (("y", 1), ("u", 2)): H,
                      (("v", 1),): 1, (("g", 1), ("v", 1)): -1, (("g", 1), ("u", 1)): -1,
                      (("g", 1), ("zeta", 1), ("u", 1)): -1},
}


@pytest.mark.parametrize("word", list(FROZEN), ids=lambda w: "".join(w))
def test_frozen_products(word):
    assert engine_word(word) == from_exponents(FROZEN[word])


@pytest.mark.parametrize("word", list(FROZEN), ids=lambda w: "".join(w))
def test_oracle_reproduces_frozen(word):
    assert _oracle.to_exponents(_oracle.reduce({word: 1})) == FROZEN[word]


def test_random_words_match_oracle():
    rng = random.Random(11)
    letters = list(_oracle.ORDER)
    for _ in range(150):
        word = tuple(rng.choice(letters) for _ in range(rng.randint(0, 6)))
        expected = from_exponents(_oracle.to_exponents(_oracle.reduce({word: 1})))
        assert engine_word(word) == expected, word


def test_inverse_letters_against_oracle():
    # g * (g^-1 w) must reproduce w; the oracle has no inverse letter
    rng = random.Random(5)
    letters = list(_oracle.ORDER)
    for _ in range(40):
        word = tuple(rng.choice(letters) for _ in range(rng.randint(1, 5)))
        w = engine_word(word)
        assert g * (gi * w) == w
        assert (w * gi) * g == w


# -- algebraic properties -------------------------------------------------------

coeffs = st.sampled_from([Fraction(1), Fraction(-1), H, Fraction(-3, 2), Fraction(2)])


@st.composite
def elements(draw, max_terms=3, max_exp=2):
    out = D.zero()
    for _ in range(draw(st.integers(1, max_terms))):
        exps = {name: draw(st.integers(0, max_exp)) for name in ("x", "y", "zeta", "u", "v")}
        exps["g"] = draw(st.integers(-1, 1))
        out = out + D.monomial(exps, draw(coeffs))
    return out


@settings(max_examples=25, deadline=None)
@given(elements(2, 1), elements(2, 1), elements(2, 1))
def test_associativity(a, b, c):
    assert (a * b) * c == a * (b * c)


@settings(max_examples=25, deadline=None)
@given(elements(), elements(), elements())
def test_distributivity(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


@settings(max_examples=40, deadline=None)
@given(st.lists(st.sampled_from(["x", "y", "g", "g^-1", "zeta", "u", "v"]), min_size=1, max_size=6))
def test_grading_is_additive(word):
    degrees = {"x": -1, "y": -1, "u": 1, "v": 1}
    expected = sum(degrees.get(letter, 0) for letter in word)
    product = engine_word(word)
    if product:
        assert degree_of(product) == expected


def test_degree_of_mixed_is_inhomogeneous():
    assert degree_of(x + u) == "inhomogeneous"
    assert degree_of(D.zero()) is None


def test_powers_and_inverses():
    assert g ** -2 * g ** 2 == 1
    assert (2 * g) ** -1 == H * gi
    with pytest.raises(ValueError):
        x ** -1
    with pytest.raises(ValueError):
        (1 + g) ** -1
    assert x ** 0 == 1


def test_formatting():
    assert str(D.zero()) == "0"
    assert str(gi) == "g^-1"
    assert str(-H * x * x) == "-1/2*x^2"
    assert str(x * u + 2 * g + 2) == "x*u + 2*g + 2"


def test_scalar_equality_and_commutator():
    assert D.one() == 1
    assert commutator(g, x) == 0
    assert commutator(zeta, x) == x


def test_normal_form_of_words():
    assert D.normal_form([("v", 1), ("y", 1)]) == v * y
    assert D.normal_form([("g", -2), ("g", 3)]) == g
    with pytest.raises(ValueError):
        D.normal_form([("x", -1)])


def test_tensor_legwise_product():
    a = Tensor.pure(x, g)
    b = Tensor.pure(y, u)
    assert a * b == Tensor.pure(x * y, g * u)
    assert str(Tensor.pure(v, D.one())) == "v⊗1"
    assert not (a - a)


def test_identity_algebra_map():
    ident = AlgebraMap(D, {n: D.gen(n) for n in ("x", "y", "g", "g^-1", "zeta", "u", "v")}, D.one())
    assert ident(v * y * x) == v * y * x
    assert ident.of_word(("v", "y")) == v * y
