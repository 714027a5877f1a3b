"""The double of the Jordan plane as a Hopf algebra.

Generators in PBW order ``x < y < g < zeta < u < v`` with ``g`` invertible.
The module provides the presentation, the coproduct, counit and antipode,
the distinguished elements ``q, z, s, theta, omega``, and the checks built on
them (Hopf axioms, normality, centrality, closed commutation formulas and the
iterated Ore extension data).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Dict, List, Mapping, Sequence, Tuple

from .engine import (
    AlgebraMap,
    Element,
    Presentation,
    Tensor,
    accumulate,
    commutator,
    degree_of,
)
from .linalg import rank
from .report import Report

HALF = Fraction(1, 2)
GENERATORS = ("x", "y", "g", "zeta", "u", "v")

# Defining relations as (name, left word, right side as {word: coeff}).
# Words are read left to right; they are fed to maps letter by letter, so
# checking a relation under a map never goes through the normal form.
RELATIONS: Tuple[Tuple[str, Tuple[str, ...], Dict[Tuple[str, ...], Fraction]], ...] = (
    ("g g^-1 = 1", ("g", "g^-1"), {(): 1}),
    ("g^-1 g = 1", ("g^-1", "g"), {(): 1}),
    ("zeta g = g zeta", ("zeta", "g"), {("g", "zeta"): 1}),
    ("g x = x g", ("g", "x"), {("x", "g"): 1}),
    ("g y = y g + x g", ("g", "y"), {("y", "g"): 1, ("x", "g"): 1}),
    ("zeta y = y zeta + y", ("zeta", "y"), {("y", "zeta"): 1, ("y",): 1}),
    ("zeta x = x zeta + x", ("zeta", "x"), {("x", "zeta"): 1, ("x",): 1}),
    ("u g = g u", ("u", "g"), {("g", "u"): 1}),
    ("v g = g v + g u", ("v", "g"), {("g", "v"): 1, ("g", "u"): 1}),
    ("v zeta = zeta v + v", ("v", "zeta"), {("zeta", "v"): 1, ("v",): 1}),
    ("u zeta = zeta u + u", ("u", "zeta"), {("zeta", "u"): 1, ("u",): 1}),
    ("y x = x y - 1/2 x^2", ("y", "x"), {("x", "y"): 1, ("x", "x"): -HALF}),
    ("v u = u v - 1/2 u^2", ("v", "u"), {("u", "v"): 1, ("u", "u"): -HALF}),
    ("u x = x u", ("u", "x"), {("x", "u"): 1}),
    ("v x = x v + 1 - g + x u", ("v", "x"), {("x", "v"): 1, (): 1, ("g",): -1, ("x", "u"): 1}),
    ("u y = y u + 1 - g", ("u", "y"), {("y", "u"): 1, (): 1, ("g",): -1}),
    ("v y = y v - g zeta + y u", ("v", "y"), {("y", "v"): 1, ("g", "zeta"): -1, ("y", "u"): 1}),
)


def relation_image(rel, image_of_word: Callable[[Sequence[str]], object]):
    """``f(left) - f(right)`` for a relation and a word-level map ``f``."""
    _, left, right = rel
    value = image_of_word(left)
    for word, c in right.items():
        value = value - image_of_word(word) * Fraction(c)
    return value


@lru_cache(maxsize=None)
def dj_presentation() -> Presentation:
    """The presentation of the double, with the derived inverse-letter rules."""
    rules = {}
    for _, left, right in RELATIONS:
        if len(left) == 2 and left[0] != "g^-1" and left != ("g", "g^-1"):
            if not _is_commuting(left, right):
                rules[left] = {w: c for w, c in right.items()}
    # g^-1 y = (y - x) g^-1 and v g^-1 = g^-1 (v - u), from gy = yg + xg and vg = gv + gu
    rules[("g^-1", "y")] = {("y", "g^-1"): 1, ("x", "g^-1"): -1}
    rules[("v", "g^-1")] = {("g^-1", "v"): 1, ("g^-1", "u"): -1}
    return Presentation(
        GENERATORS,
        rules,
        invertible=("g",),
        commuting=[("g", "x"), ("zeta", "g"), ("u", "g"), ("u", "x")],
        degrees={"x": -1, "y": -1, "u": 1, "v": 1},
        heavy=("v", "u", "zeta", "y"),
        label="D",
    )


def _is_commuting(left, right) -> bool:
    return len(right) == 1 and right.get((left[1], left[0])) == 1


def gen(name: str) -> Element:
    return dj_presentation().gen(name)


def relation_checks() -> Report:
    """Each defining relation normalizes to the same element on both sides."""
    P = dj_presentation()
    report = Report("relations")
    for rel in RELATIONS:
        diff = relation_image(rel, lambda w: P.normal_form([(P.letter(n)[0], P.letter(n)[1]) for n in w]))
        report.add(f"relation {rel[0]}", not diff, str(diff))
    return report


# -- Hopf structure -----------------------------------------------------------


def _tensor(*legs: Element) -> Tensor:
    return Tensor.pure(*legs)


@lru_cache(maxsize=None)
def _coproduct_map() -> AlgebraMap:
    P = dj_presentation()
    one = P.one()
    x, y, g, zeta, u, v = P.gens()
    gi = P.gen("g^-1")
    images = {
        "g": _tensor(g, g),
        "g^-1": _tensor(gi, gi),
        "u": _tensor(u, one) + _tensor(one, u),
        "zeta": _tensor(zeta, one) + _tensor(one, zeta),
        "x": _tensor(x, one) + _tensor(g, x),
        "y": _tensor(y, one) + _tensor(g, y),
        "v": _tensor(v, one) + _tensor(one, v) + _tensor(zeta, u),
    }
    return AlgebraMap(P, images, Tensor.one(P, 2))


@lru_cache(maxsize=None)
def _antipode_map() -> AlgebraMap:
    P = dj_presentation()
    x, y, g, zeta, u, v = P.gens()
    gi = P.gen("g^-1")
    images = {
        "g": gi,
        "g^-1": g,
        "u": -u,
        "zeta": -zeta,
        "x": -(gi * x),
        "y": -(gi * y),
        "v": -v + zeta * u,
    }
    return AlgebraMap(P, images, P.one(), anti=True)


def coproduct(a: Element) -> Tensor:
    return _coproduct_map()(a)


def antipode(a: Element) -> Element:
    return _antipode_map()(a)


_COUNIT = {"g": 1, "g^-1": 1}


def counit(a: Element) -> Fraction:
    P = a.pres
    total = Fraction(0)
    for m, c in a.terms.items():
        if all(e == 0 or P.names[i] == "g" for i, e in enumerate(m)):
            total += c
    return total


def counit_word(word: Sequence[str]) -> Fraction:
    return Fraction(1) if all(n in _COUNIT for n in word) else Fraction(0)


def _apply_legwise(t: Tensor, fns: Sequence[Callable[[Element], Tensor]]) -> Tensor:
    """Apply one map per leg (each returning a Tensor) and concatenate the legs."""
    P = t.pres
    terms: dict = {}
    arity = 0
    for key, c in t.terms.items():
        parts = [f(Element(P, {m: 1})) for f, m in zip(fns, key)]
        arity = sum(p.arity for p in parts)
        accumulate(terms, _concat_tensors(parts).terms, c)
    return Tensor(P, arity, terms)


def _concat_tensors(parts: Sequence[Tensor]) -> Tensor:
    P = parts[0].pres
    terms = {(): Fraction(1)}
    for part in parts:
        new = {}
        for k1, c1 in terms.items():
            for k2, c2 in part.terms.items():
                key = k1 + k2
                new[key] = new.get(key, Fraction(0)) + c1 * c2
        terms = new
    return Tensor(P, sum(p.arity for p in parts), terms)


def multiply_legs(t: Tensor) -> Element:
    P = t.pres
    out: dict = {}
    for key, c in t.terms.items():
        prod = {(0,) * P.n: Fraction(1)}
        for m in key:
            prod = P.multiply_terms(prod, {m: Fraction(1)})
        accumulate(out, prod, c)
    return Element(P, out)


def random_element(rng: random.Random, max_terms: int = 4, max_exp: int = 2) -> Element:
    """Random element: at most ``max_terms`` terms, exponents bounded by ``max_exp``.

    The g-exponent ranges over ``[-max_exp, max_exp]``; coefficients are drawn
    from ``{±1, ±1/2, ±2}``.
    """
    P = dj_presentation()
    coeffs = [Fraction(1), Fraction(-1), HALF, -HALF, Fraction(2), Fraction(-2)]
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mono = tuple(
            rng.randint(-max_exp, max_exp) if name == "g" else rng.randint(0, max_exp)
            for name in P.names
        )
        terms[mono] = rng.choice(coeffs)
    return Element(P, terms)


def random_elements(count: int, seed: int = 7) -> List[Element]:
    rng = random.Random(seed)
    return [random_element(rng) for _ in range(count)]


def verify_hopf(samples: int = 20, seed: int = 7) -> Report:
    """Bialgebra well-definedness, coassociativity, counit, antipode and S^2 = Ad(g^-1)."""
    P = dj_presentation()
    report = Report("hopf")
    delta = _coproduct_map()
    S = _antipode_map()
    gi, g = P.gen("g^-1"), P.gen("g")

    for rel in RELATIONS:
        name = rel[0]
        report.add(f"delta kills {name}", not relation_image(rel, delta.of_word))
        report.add(f"antipode kills {name}", not relation_image(rel, S.of_word))
        eps = counit_word(rel[1]) - sum(Fraction(c) * counit_word(w) for w, c in rel[2].items())
        report.add(f"counit kills {name}", eps == 0)

    generators = [("gen " + n, P.gen(n)) for n in ("x", "y", "g", "g^-1", "zeta", "u", "v")]
    sampled = [(f"sample {k:02d}", a) for k, a in enumerate(random_elements(samples, seed))]
    for label, a in generators + sampled:
        d = coproduct(a)
        left = _apply_legwise(d, [coproduct, lambda e: Tensor.pure(e)])
        right = _apply_legwise(d, [lambda e: Tensor.pure(e), coproduct])
        report.add(f"coassociativity {label}", left == right)

        lhs = multiply_legs(_apply_legwise(d, [lambda e: Tensor.pure(P.scalar(counit(e))), Tensor.pure]))
        rhs = multiply_legs(_apply_legwise(d, [Tensor.pure, lambda e: Tensor.pure(P.scalar(counit(e)))]))
        report.add(f"counit axiom {label}", lhs == a and rhs == a)

        eps = P.scalar(counit(a))
        left_s = multiply_legs(_apply_legwise(d, [lambda e: Tensor.pure(antipode(e)), Tensor.pure]))
        right_s = multiply_legs(_apply_legwise(d, [Tensor.pure, lambda e: Tensor.pure(antipode(e))]))
        report.add(f"antipode axiom {label}", left_s == eps and right_s == eps)

        report.add(f"S^2 = Ad(g^-1) {label}", antipode(antipode(a)) == gi * a * g)
    return report


# -- distinguished elements -----------------------------------------------------


@dataclass(frozen=True)
class Distinguished:
    q: Element
    z: Element
    s: Element
    theta: Element
    omega: Element

    def as_dict(self) -> Dict[str, Element]:
        return {"q": self.q, "z": self.z, "s": self.s, "theta": self.theta, "omega": self.omega}


@lru_cache(maxsize=None)
def distinguished() -> Distinguished:
    P = dj_presentation()
    x, y, g, zeta, u, v = P.gens()
    gi = P.gen("g^-1")
    q = u * x + 2 * (1 + g)
    z = q * q * gi
    s = x * v + u * y + (-HALF * u * x + g - 1) * zeta - 2 * (1 + g)
    theta = s * s * gi
    omega = q * gi * s
    return Distinguished(q, z, s, theta, omega)


def is_central(a: Element) -> bool:
    return all(not commutator(a, X) for X in a.pres.gens())


def gamma_q() -> Dict[str, Element]:
    """The automorphism attached to the normal element q, on generators."""
    x, y, g, zeta, u, v = dj_presentation().gens()
    return {"x": x, "y": y + HALF * x, "g": g, "zeta": zeta, "u": u, "v": v - HALF * u}


def check_normal(a: Element, gamma: Mapping[str, Element]) -> bool:
    """True iff ``a X = gamma(X) a`` for every generator ``X``."""
    P = a.pres
    return all(a * P.gen(name) == gamma[name] * a for name in P.names)


def ad_nilpotency(a: Element, targets: Sequence[Element], cap: int = 10) -> List[int | None]:
    """Least ``k <= cap`` with ``ad_a^k(t) = 0`` for each target, ``None`` past the cap."""
    orders = []
    for t in targets:
        current, order = t, None
        for k in range(cap + 1):
            if not current:
                order = k
                break
            current = commutator(a, current)
        orders.append(order)
    return orders


# -- closed formulas --------------------------------------------------------------


def falling_factorial(a: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= a - i
    return out


def rising_factorial(a: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= a + i
    return out


def _word(*pairs) -> Element:
    P = dj_presentation()
    return P.normal_form([(name, e) for name, e in pairs if e])


def u_yn_formula(n: int) -> Element:
    """Right side of the closed formula for ``u y^n``."""
    out = _word(("y", n), ("u", 1)) + n * _word(("y", n - 1))
    for k in range(n):
        coeff = Fraction(comb(n, k + 1) * factorial(k + 1), 2**k)
        out = out - coeff * _word(("y", n - 1 - k), ("x", k), ("g", 1))
    return out


def v_xm_formula(m: int) -> Element:
    """Right side of the closed formula for ``v x^m``."""
    g = gen("g")
    return (
        _word(("x", m), ("v", 1))
        + m * _word(("x", m - 1)) * (1 - g)
        + m * _word(("x", m), ("u", 1))
    )


def g_y_formula(n: int, ell: int, reading: str = "falling") -> Element:
    """Right side of the closed formula for ``g^n y^ell``.

    ``reading="falling"`` takes ``[2n]^[k]`` as the falling factorial and the
    k-th term as the PBW monomial ``x^k y^(ell-k) g^n``.  ``reading="rising"``
    keeps the printed factor order ``y^(ell-k) x^k g^n``, which needs the
    rising factorial; the engine straightens those products.
    """
    P = dj_presentation()
    out = P.zero()
    for k in range(ell + 1):
        if reading == "falling":
            coeff = Fraction(comb(ell, k) * falling_factorial(2 * n, k), 2**k)
            out = out + coeff * P.monomial({"x": k, "y": ell - k, "g": n})
        elif reading == "rising":
            coeff = Fraction(comb(ell, k) * rising_factorial(2 * n, k), 2**k)
            out = out + coeff * _word(("y", ell - k), ("x", k), ("g", n))
        else:
            raise ValueError(f"unknown reading {reading!r}")
    return out


def formula_oracles(max_n: int = 8, max_ell: int = 6, max_g: int = 4) -> Report:
    """Straightened left sides against the closed formulas, instance by instance."""
    report = Report("comm-formulas")
    for n in range(1, max_n + 1):
        lhs = _word(("u", 1), ("y", n))
        report.add(f"u y^{n}", lhs == u_yn_formula(n), str(lhs - u_yn_formula(n)))
    for m in range(1, max_n + 1):
        lhs = _word(("v", 1), ("x", m))
        report.add(f"v x^{m}", lhs == v_xm_formula(m), str(lhs - v_xm_formula(m)))
    for n in range(-max_g, max_g + 1):
        for ell in range(0, max_ell + 1):
            lhs = _word(("g", n), ("y", ell))
            for reading in ("falling", "rising"):
                rhs = g_y_formula(n, ell, reading)
                report.add(f"g^{n} y^{ell} ({reading})", lhs == rhs, str(lhs - rhs))
    return report


def ore_tower_check() -> Report:
    """Each value of the derivations and the twist in the Ore tower, as a commutator identity."""
    x, y, g, zeta, u, v = dj_presentation().gens()
    report = Report("ore-tower")
    d = {"x": -HALF * x * x, "u": g - 1, "g": -(x * g)}
    for name, value in d.items():
        a = gen(name)
        report.add(f"d({name})", y * a - a * y == value)
    delta = {"x": x, "u": -u, "g": 0 * x, "y": y}
    for name, value in delta.items():
        b = gen(name)
        report.add(f"delta({name})", zeta * b - b * zeta == value)
    sigma = {"x": x, "u": u, "g": g, "y": y, "zeta": zeta + 1}
    dd = {"x": 1 - g + x * u, "u": -HALF * u * u, "g": g * u, "y": -(g * zeta) + y * u, "zeta": 0 * x}
    for name in sigma:
        c = gen(name)
        report.add(f"sigma/dd({name})", v * c - sigma[name] * v == dd[name])
    return report


@lru_cache(maxsize=None)
def _central_power(name: str, k: int) -> Element:
    if k == 0:
        return dj_presentation().one()
    return _central_power(name, k - 1) * getattr(distinguished(), name)


def central_monomial(i: int, j: int, k: int) -> Element:
    """``z^i omega^j theta^k``."""
    return _central_power("z", i) * _central_power("omega", j) * _central_power("theta", k)


def _coordinate_rank(elements: Sequence[Element]) -> int:
    support = sorted({m for el in elements for m in el.terms})
    return rank([[el.terms.get(m, Fraction(0)) for m in support] for el in elements])


def kleinian_class(i: int, j: int, k: int) -> Tuple[int, int, int]:
    """Reduce ``X^i Y^j Z^k`` modulo ``Y^2 -> XZ``."""
    return i + j // 2, j % 2, k + j // 2


@dataclass(frozen=True)
class CenterRanks:
    literal_count: int
    literal_rank: int
    literal_classes: int
    standard_count: int
    standard_rank: int


@lru_cache(maxsize=None)
def center_independence(max_total: int = 6) -> CenterRanks:
    """Rank data for low-degree monomials in ``z, omega, theta`` (weights 1, 1, 2).

    ``literal``: ``z^i omega^j theta^e`` with ``e <= 1`` and ``i + j + 2e <= max_total``.
    This family contains both ``z theta`` and ``omega^2``, so its rank is compared
    with its number of classes modulo ``XZ = Y^2``.  ``standard``: the monomial
    basis ``z^i theta^k omega^e`` (``e <= 1``) of the quotient ring, same bound.
    """
    literal = [
        (i, j, e)
        for e in (0, 1)
        for i in range(max_total + 1)
        for j in range(max_total + 1 - i - 2 * e)
    ]
    standard = [
        (i, e, k)
        for e in (0, 1)
        for i in range(max_total + 1)
        for k in range((max_total - i - e) // 2 + 1)
        if i + e + 2 * k <= max_total
    ]
    return CenterRanks(
        literal_count=len(literal),
        literal_rank=_coordinate_rank([central_monomial(*m) for m in literal]),
        literal_classes=len({kleinian_class(*m) for m in literal}),
        standard_count=len(standard),
        standard_rank=_coordinate_rank([central_monomial(*m) for m in standard]),
    )


def normal_central_report() -> Report:
    dist = distinguished()
    P = dj_presentation()
    x = P.gen("x")
    report = Report("normal-central")
    report.add("q normal with gamma_q", check_normal(dist.q, gamma_q()))
    report.add("s normal with gamma_q", check_normal(dist.s, gamma_q()))
    for name in ("z", "theta", "omega"):
        report.add(f"{name} central", is_central(getattr(dist, name)))
    for name in ("q", "s"):
        report.add(f"{name} not central", not is_central(getattr(dist, name)))
    orders = ad_nilpotency(x, [P.gen("y"), P.gen("v"), P.gen("u")], cap=6)
    report.add("ad_x orders on y, v, u are 2, 2, 1", orders == [2, 2, 1], str(orders))
    for name, el in dist.as_dict().items():
        report.add(f"{name} homogeneous of degree 0", degree_of(el) == 0)
    omega = dist.omega
    report.add(
        "omega has v, y, zeta exponents <= 1",
        all(max(m[1], m[3], m[5]) <= 1 for m in omega.terms),
    )
    return report


def center_relation_report() -> Report:
    report = Report("center-relation")
    report.add("z theta = omega^2", center_relation_holds())
    return report


def center_independence_report(max_total: int = 6) -> Report:
    ranks = center_independence(max_total)
    report = Report("center-independence")
    report.add(
        f"z^i theta^k omega^e (e<=1, i+2k+e<={max_total}) independent",
        ranks.standard_rank == ranks.standard_count,
        f"rank {ranks.standard_rank} of {ranks.standard_count}",
    )
    report.add(
        f"z^i omega^j theta^e (i+j+2e<={max_total}): only XZ=Y^2 relates them",
        ranks.literal_rank == ranks.literal_classes,
        f"rank {ranks.literal_rank}, classes {ranks.literal_classes}",
    )
    return report


def center_relation_holds() -> bool:
    dist = distinguished()
    return not (dist.z * dist.theta - dist.omega * dist.omega)
