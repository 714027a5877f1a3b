"""The localized Weyl algebra A'_2(S) and the map phi from the double into it.

Generators ``z < zp < q < p < t < xi`` with ``z, q, t`` invertible; ``zp``
stands for the second central generator z'.  The only non-commuting pairs
are ``pq - qp = 1`` and ``xi t - t xi = 1``.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List

from . import double
from .engine import AlgebraMap, Element, Presentation, commutator
from .report import Report

HALF = Fraction(1, 2)
A2S_GENERATORS = ("z", "zp", "q", "p", "t", "xi")


@lru_cache(maxsize=None)
def a2s_presentation() -> Presentation:
    noncommuting = {("p", "q"), ("xi", "t")}
    commuting = [
        (b, a)
        for a, b in itertools.combinations(A2S_GENERATORS, 2)
        if (b, a) not in noncommuting
    ]
    return Presentation(
        A2S_GENERATORS,
        {
            ("p", "q"): {("q", "p"): 1, (): 1},
            ("p", "q^-1"): {("q^-1", "p"): 1, ("q^-1", "q^-1"): -1},
            ("xi", "t"): {("t", "xi"): 1, (): 1},
            ("xi", "t^-1"): {("t^-1", "xi"): 1, ("t^-1", "t^-1"): -1},
        },
        invertible=("z", "q", "t"),
        commuting=commuting,
        heavy=("xi", "p"),
        label="A'2(S)",
    )


def _gens() -> Dict[str, Element]:
    W = a2s_presentation()
    out = {name: W.gen(name) for name in W.names}
    for name in ("z", "q", "t"):
        out[name + "i"] = W.gen(name + "^-1")
    return out


def f_hat() -> Element:
    """The element f with zeta replaced by its image ``-t xi``."""
    G = _gens()
    z, zi, q, qi, p, t, xi = G["z"], G["zi"], G["q"], G["qi"], G["p"], G["t"], G["xi"]
    zeta = -(t * xi)
    return -(1 - HALF * q + zi * q * q) * p + 2 * qi - 2 * zi * (zeta - 1) * q


@lru_cache(maxsize=None)
def phi_images() -> Dict[str, Element]:
    G = _gens()
    z, zi, zp, q, qi, p, t, ti, xi = (G[k] for k in ("z", "zi", "zp", "q", "qi", "p", "t", "ti", "xi"))
    zeta = -(t * xi)
    return {
        "x": ti * q,
        "g": q * q * zi,
        "g^-1": qi * qi * z,
        "u": t - 2 * qi * t - 2 * q * zi * t,
        "y": -HALF * ti * q * q * p,
        "zeta": zeta,
        "v": t * (zp + f_hat() + HALF * zeta),
    }


def raw_u_image() -> Element:
    """``t - 2(1 + g) x^-1`` substituted directly, with ``x^-1 = q^-1 t``."""
    G = _gens()
    images = phi_images()
    return G["t"] - 2 * (1 + images["g"]) * G["qi"] * G["t"]


@lru_cache(maxsize=None)
def _phi_map() -> AlgebraMap:
    return AlgebraMap(double.dj_presentation(), phi_images(), a2s_presentation().one())


def phi(a: Element) -> Element:
    return _phi_map()(a)


def phi_gen(name: str) -> Element:
    return phi_images()[name]


def verify_phi() -> Report:
    D = double.dj_presentation()
    W = a2s_presentation()
    G = _gens()
    report = Report("phi")
    pm = _phi_map()
    for rel in double.RELATIONS:
        image = double.relation_image(rel, pm.of_word)
        report.add(f"phi kills {rel[0]}", not image, str(image))

    for a, b in itertools.product(D.letters(), repeat=2):
        la, lb = D.letter_name(*a), D.letter_name(*b)
        product = D.gen(la) * D.gen(lb)
        report.add(f"phi multiplicative on {la}*{lb}", phi(product) == pm.of_word((la, lb)))

    report.add("u image equals raw substitution", raw_u_image() == phi_gen("u"))
    for name, img in phi_images().items():
        bad = [W.names[i] for m in img.terms for i, e in enumerate(m) if e < 0 and not W.invertible[i]]
        report.add(f"phi({name}) has no negative non-invertible powers", not bad)

    q_d = double.distinguished().q
    x, y, zeta = D.gen("x"), D.gen("y"), D.gen("zeta")
    py, pzeta = phi(y), phi(zeta)
    q, t = G["q"], G["t"]
    report.add("phi(q) = q", phi(q_d) == q)
    report.add("d(q): phi(yq - qy) = phi(-1/2 x q)", phi(y * q_d - q_d * y) == phi(-HALF * x * q_d))
    report.add("d(q) = -1/2 q^2 t^-1", commutator(py, q) == -HALF * q * q * G["ti"])
    report.add("d(t) = 0: phi(y) t = t phi(y)", py * t == t * py)
    report.add("delta(q) = 0: phi(zeta) q = q phi(zeta)", pzeta * q == q * pzeta)
    report.add("delta(t) = -t", pzeta * t - t * pzeta == -t)
    r = -(q * G["p"])
    report.add("automorphic form: q r = (r + 1) q", q * r == (r + 1) * q)
    return report


def center_map_check() -> Report:
    dist = double.distinguished()
    G = _gens()
    W = a2s_presentation()
    z, zp, q = G["z"], G["zp"], G["q"]
    report = Report("center-map")
    report.add("phi(z) = z", phi(dist.z) == z)
    report.add("phi(s) = q z'", phi(dist.s) == q * zp)
    report.add("phi(omega) = z z'", phi(dist.omega) == z * zp)
    report.add("phi(theta) = z z'^2", phi(dist.theta) == z * zp * zp)
    report.add("phi(z) phi(theta) = phi(omega)^2", phi(dist.z) * phi(dist.theta) == phi(dist.omega) ** 2)
    report.add("phi(z theta - omega^2) = 0", not phi(dist.z * dist.theta - dist.omega * dist.omega))
    for name, c in (("z", z), ("z'", zp)):
        report.add(f"{name} central in A'2(S)", all(not commutator(c, X) for X in W.gens()))
    return report


def random_degree0(rng: random.Random, max_terms: int = 4, max_exp: int = 2) -> Element:
    """Random combination of ``x^n u^n g^m`` (degree 0, supported on x, u, g)."""
    D = double.dj_presentation()
    coeffs = [Fraction(1), Fraction(-1), HALF, -HALF, Fraction(2), Fraction(-2)]
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        n = rng.randint(0, max_exp)
        mono = D.monomial({"x": n, "u": n, "g": rng.randint(-max_exp, max_exp)}).support()[0]
        terms[mono] = rng.choice(coeffs)
    return Element(D, terms)


def degree0_consistency(count: int = 30, seed: int = 7) -> Report:
    rng = random.Random(seed)
    D = double.dj_presentation()
    report = Report("degree0")
    elements: List[Element] = [random_degree0(rng) for _ in range(count)]
    for k in range(count):
        w1, w2 = elements[k], elements[(k + 1) % count]
        report.add(f"phi(w{k} w{(k + 1) % count}) = phi(w{k}) phi(w{(k + 1) % count})",
                   phi(w1 * w2) == phi(w1) * phi(w2))
    report.add("phi(1) = 1", phi(D.one()) == 1)
    report.add("phi(g g^-1) = 1", phi(D.gen("g") * D.gen("g^-1")) == 1)
    return report
