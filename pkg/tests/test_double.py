from fractions import Fraction

import pytest

from djd import double
from djd.engine import Tensor, commutator

D = double.dj_presentation()
x, y, g, zeta, u, v = D.gens()
gi = D.gen("g^-1")
one = D.one()
H = Fraction(1, 2)
T = Tensor.pure


def test_seventeen_relations_all_normalize():
    report = double.relation_checks()
    assert len(report.checks) == 17
    assert report.ok, report.failures


# -- coproduct, counit, antipode on generators -----------------------------------


@pytest.mark.parametrize("name, expected", [
    ("g", lambda: T(g, g)),
    ("g^-1", lambda: T(gi, gi)),
    ("x", lambda: T(x, one) + T(g, x)),
    ("y", lambda: T(y, one) + T(g, y)),
    ("zeta", lambda: T(zeta, one) + T(one, zeta)),
    ("u", lambda: T(u, one) + T(one, u)),
    ("v", lambda: T(v, one) + T(one, v) + T(zeta, u)),
])
def test_coproduct_of_generators(name, expected):
    assert double.coproduct(D.gen(name)) == expected()


def test_coproduct_v_prints():
    assert str(double.coproduct(v)) == "zeta⊗u + v⊗1 + 1⊗v"


@pytest.mark.parametrize("name, expected", [
    ("g", lambda: gi),
    ("x", lambda: -(gi * x)),
    ("y", lambda: -(gi * y)),
    ("zeta", lambda: -zeta),
    ("u", lambda: -u),
    ("v", lambda: -v + zeta * u),  # forced by m(S (x) id) Delta(v) = 0
])
def test_antipode_of_generators(name, expected):
    assert double.antipode(D.gen(name)) == expected()


def test_counit():
    assert double.counit(g ** 3) == 1
    assert double.counit(x) == 0
    assert double.counit(2 * g + zeta * u - 3) == -1


def test_coproduct_is_multiplicative_on_a_product():
    a = v * y * x
    assert double.coproduct(a) == double.coproduct(v) * double.coproduct(y) * double.coproduct(x)


def test_antipode_reverses_products():
    assert double.antipode(v * y) == double.antipode(y) * double.antipode(v)


def test_hopf_suite_small():
    report = double.verify_hopf(samples=3, seed=1)
    assert report.ok, report.failures


def test_random_elements_deterministic():
    assert double.random_elements(5, seed=3) == double.random_elements(5, seed=3)


# -- closed formulas -----------------------------------------------------------


def test_u_y2_formula():
    # closed formula at n = 2
    assert u * y * y == y * y * u + 2 * y - 2 * y * g - x * g
    assert u * y ** 2 == double.u_yn_formula(2)


def test_v_x3_formula():
    assert v * x ** 3 == double.v_xm_formula(3)


def test_factorials():
    assert double.falling_factorial(4, 3) == 24
    assert double.rising_factorial(2, 3) == 24
    assert double.falling_factorial(2, 3) == 0


def test_g_y_formula_falling_reading_small():
    for n in range(-2, 3):
        for ell in range(4):
            assert double.g_y_formula(n, ell, "falling") == (g ** n) * (y ** ell), (n, ell)


def test_g_y_formula_rising_reading_small():
    for n in range(-2, 3):
        for ell in range(4):
            assert double.g_y_formula(n, ell, "rising") == (g ** n) * (y ** ell), (n, ell)


def test_formula_oracles_small():
    report = double.formula_oracles(max_n=4, max_ell=3, max_g=2)
    assert report.ok, report.failures


def test_ore_tower():
    report = double.ore_tower_check()
    assert report.ok, report.failures
    assert len(report.checks) == 12


# -- distinguished elements ------------------------------------------------------


def test_q_definition():
    dist = double.distinguished()
    assert dist.q == u * x + 2 * (1 + g)
    assert str(dist.q) == "x*u + 2*g + 2"
    assert dist.z == dist.q * dist.q * gi


def test_omega_two_ways():
    dist = double.distinguished()
    s = x * v + u * y + (-H * u * x + g - 1) * zeta - 2 * (1 + g)
    assert dist.s == s
    assert dist.theta == s * s * gi
    assert dist.omega == dist.q * gi * s


@pytest.mark.parametrize("name, central", [
    ("z", True), ("theta", True), ("omega", True), ("q", False), ("s", False),
])
def test_centrality(name, central):
    assert double.is_central(getattr(double.distinguished(), name)) is central


def test_q_and_s_are_normal_with_same_automorphism():
    dist = double.distinguished()
    gamma = double.gamma_q()
    assert double.check_normal(dist.q, gamma)
    assert double.check_normal(dist.s, gamma)


def test_ad_x_orders():
    assert double.ad_nilpotency(x, [y, v, u]) == [2, 2, 1]


def test_ad_nilpotency_reports_failure_within_cap():
    assert double.ad_nilpotency(zeta, [x], cap=5) == [None]


def test_center_relation():
    assert double.center_relation_holds()
    dist = double.distinguished()
    assert commutator(dist.z, v) == 0


def test_kleinian_class():
    assert double.kleinian_class(0, 2, 0) == (1, 0, 1)
    assert double.kleinian_class(1, 0, 1) == (1, 0, 1)
    assert double.kleinian_class(0, 3, 0) == (1, 1, 1)


def test_center_independence_low_degree():
    ranks = double.center_independence(3)
    assert ranks.standard_rank == ranks.standard_count
    assert ranks.literal_rank == ranks.literal_classes
    assert ranks.literal_rank < ranks.literal_count
