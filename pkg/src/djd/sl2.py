"""U(sl2) and the quotient map from the double onto it."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict

import numpy as np

from . import double
from .engine import AlgebraMap, Element, Presentation, Tensor, commutator
from .linalg import solve_combination
from .report import Report

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


@lru_cache(maxsize=None)
def sl2_presentation() -> Presentation:
    """Chevalley generators in PBW order ``f < h < e``."""
    return Presentation(
        ("f", "h", "e"),
        {
            ("e", "f"): {("f", "e"): 1, ("h",): 1},
            ("e", "h"): {("h", "e"): 1, ("e",): -2},
            ("h", "f"): {("f", "h"): 1, ("f",): -2},
        },
        degrees={"f": -1, "e": 1},
        heavy=("e", "h"),
        label="U(sl2)",
    )


@lru_cache(maxsize=None)
def _pi_map() -> AlgebraMap:
    U = sl2_presentation()
    f, h, e = U.gens()
    zero = U.zero()
    images = {
        "v": QUARTER * e,
        "y": 2 * f,
        "zeta": -HALF * h,
        "u": zero,
        "x": zero,
        "g": U.one(),
        "g^-1": U.one(),
    }
    return AlgebraMap(double.dj_presentation(), images, U.one())


def pi(a: Element) -> Element:
    return _pi_map()(a)


@lru_cache(maxsize=None)
def _sl2_coproduct() -> AlgebraMap:
    U = sl2_presentation()
    one = U.one()
    images = {n: Tensor.pure(U.gen(n), one) + Tensor.pure(one, U.gen(n)) for n in U.names}
    return AlgebraMap(U, images, Tensor.one(U, 2))


def sl2_coproduct(a: Element) -> Tensor:
    return _sl2_coproduct()(a)


def casimir() -> Element:
    f, h, e = sl2_presentation().gens()
    return e * f + f * e + HALF * h * h


def _tensor_pi(t: Tensor) -> Tensor:
    D = t.pres
    U = sl2_presentation()
    out = Tensor(U, 2)
    for (m1, m2), c in t.terms.items():
        out = out + Tensor.pure(pi(Element(D, {m1: 1})), pi(Element(D, {m2: 1}))) * c
    return out


def casimir_polynomial(a: Element, max_degree: int = 3):
    """Coefficients ``c_k`` with ``a == sum c_k C^k``, or ``None``."""
    C = casimir()
    powers = [C ** k for k in range(max_degree + 1)]
    return solve_combination(a.terms, [p.terms for p in powers])


def verify_pi() -> Report:
    D = double.dj_presentation()
    U = sl2_presentation()
    report = Report("pi")
    pm = _pi_map()
    for rel in double.RELATIONS:
        image = double.relation_image(rel, pm.of_word)
        report.add(f"pi kills {rel[0]}", not image, str(image))
    for name, el in (("x", D.gen("x")), ("u", D.gen("u")), ("g-1", D.gen("g") - 1)):
        report.add(f"pi({name}) = 0", not pi(el))
    for name in ("x", "y", "g", "g^-1", "zeta", "u", "v"):
        a = D.gen(name)
        lhs = _tensor_pi(double.coproduct(a))
        rhs = sl2_coproduct(pi(a))
        report.add(f"delta compatibility on {name}", lhs == rhs, f"{lhs} vs {rhs}")
    for dname, sname, c in (("v", "e", QUARTER), ("y", "f", 2), ("zeta", "h", -HALF)):
        report.add(f"pi({dname}) = {c}*{sname}", pi(D.gen(dname)) == c * U.gen(sname))
    dist = double.distinguished()
    report.add("pi(z) = 16", pi(dist.z) == 16)
    for name in ("omega", "theta"):
        image = pi(getattr(dist, name))
        central = all(not commutator(image, X) for X in U.gens())
        poly = casimir_polynomial(image)
        report.add(f"pi({name}) central in U(sl2)", central)
        report.add(f"pi({name}) is a polynomial in the Casimir", poly is not None, str(image))
    return report


# -- finite-dimensional sl2 modules ----------------------------------------------


def highest_weight_module(n: int) -> Dict[str, np.ndarray]:
    """Matrices of e, f, h on the (n+1)-dim simple module, basis ``w_i = f^i w_0``."""
    dim = n + 1
    e = np.full((dim, dim), Fraction(0), dtype=object)
    f = np.full((dim, dim), Fraction(0), dtype=object)
    h = np.full((dim, dim), Fraction(0), dtype=object)
    for i in range(dim):
        h[i, i] = Fraction(n - 2 * i)
        if i + 1 < dim:
            f[i + 1, i] = Fraction(1)
        if i > 0:
            e[i - 1, i] = Fraction(i * (n - i + 1))
    return {"e": e, "f": f, "h": h}


def evaluate(a: Element, matrices: Dict[str, np.ndarray], dim: int) -> np.ndarray:
    """Matrix of an element of any presentation under generator matrices."""
    P = a.pres
    ident = np.eye(dim, dtype=int).astype(object) * Fraction(1)
    out = np.full((dim, dim), Fraction(0), dtype=object)
    for m, c in a.terms.items():
        mat = ident
        for i, exp in enumerate(m):
            if exp < 0:
                base = matrices[P.names[i] + "^-1"]
            else:
                base = matrices[P.names[i]]
            for _ in range(abs(exp)):
                mat = mat.dot(base)
        out = out + mat * c
    return out


def ln_pullback_check(n: int) -> Report:
    """The matrices of ``L_n`` agree with the sl2 module pulled back along pi."""
    from .reps import build_Ln

    D = double.dj_presentation()
    rep = build_Ln(n)
    sl2 = highest_weight_module(n)
    # t_i = 2^i w_i
    scale = np.diag([Fraction(2) ** i for i in range(n + 1)]).astype(object)
    inverse = np.diag([Fraction(1, 2) ** i for i in range(n + 1)]).astype(object)
    in_t_basis = {k: inverse.dot(m).dot(scale) for k, m in sl2.items()}
    report = Report(f"ln-pullback n={n}")
    for name in ("x", "y", "g", "g^-1", "zeta", "u", "v"):
        pulled = evaluate(pi(D.gen(name)), in_t_basis, n + 1)
        report.add(f"L_{n} {name} matches pi-pullback", np.array_equal(pulled, rep.matrices[name]))
    return report
