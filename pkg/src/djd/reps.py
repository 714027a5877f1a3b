"""Representations of the double: matrix modules, induced modules, Verma modules.

Finite-dimensional modules are a dict of exact rational numpy matrices (dtype
object, Fraction entries), one per letter ``x, y, g, g^-1, zeta, u, v``.
Infinite-dimensional induced modules are truncated by total degree; any
result that would leave the truncation raises :class:`DepthError`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Dict, Iterable, List, Mapping, Tuple

import numpy as np

from . import double
from .engine import Element, Presentation, as_scalar
from .linalg import EchelonBasis
from .report import Report

HALF = Fraction(1, 2)
LETTERS = ("x", "y", "g", "g^-1", "zeta", "u", "v")


class DepthError(ValueError):
    """An action left the truncated basis of an induced module."""


class NotNilpotentError(ValueError):
    pass


def zeros(dim: int) -> np.ndarray:
    return np.full((dim, dim), Fraction(0), dtype=object)


def identity(dim: int) -> np.ndarray:
    m = zeros(dim)
    for i in range(dim):
        m[i, i] = Fraction(1)
    return m


@dataclass
class MatrixRep:
    dim: int
    matrices: Dict[str, np.ndarray]

    def __post_init__(self):
        for name in LETTERS:
            if name not in self.matrices:
                raise ValueError(f"missing matrix for {name}")
            if self.matrices[name].shape != (self.dim, self.dim):
                raise ValueError(f"matrix for {name} has shape {self.matrices[name].shape}")

    def word(self, letters: Iterable[str]) -> np.ndarray:
        """Matrix of a product of letters, read left to right."""
        out = identity(self.dim)
        for name in letters:
            out = out.dot(self.matrices[name])
        return out

    def direct_sum(self, other: "MatrixRep") -> "MatrixRep":
        dim = self.dim + other.dim
        mats = {}
        for name in LETTERS:
            m = zeros(dim)
            m[: self.dim, : self.dim] = self.matrices[name]
            m[self.dim:, self.dim:] = other.matrices[name]
            mats[name] = m
        return MatrixRep(dim, mats)


def validate_rep(rep: MatrixRep) -> Report:
    """Every defining relation holds as a matrix identity."""
    report = Report("validate-rep")
    for rel in double.RELATIONS:
        diff = double.relation_image(rel, rep.word)
        report.add(rel[0], not np.any(diff != 0))
    return report


def build_Ln(n: int) -> MatrixRep:
    """The simple module of dimension ``n + 1`` (columns are images of ``t_i``)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    dim = n + 1
    y, v, zeta = zeros(dim), zeros(dim), zeros(dim)
    for i in range(dim):
        if i + 1 < dim:
            y[i + 1, i] = Fraction(1)
        if i > 0:
            v[i - 1, i] = Fraction(i, 2) * (n - i + 1)
        zeta[i, i] = -HALF * (n - 2 * i)
    return MatrixRep(dim, {
        "x": zeros(dim), "u": zeros(dim), "g": identity(dim), "g^-1": identity(dim),
        "y": y, "v": v, "zeta": zeta,
    })


def trivial_rep() -> MatrixRep:
    return build_Ln(0)


def one_dim_rep(a, c) -> MatrixRep:
    """The one-dimensional module: g acts by ``a``, zeta by ``-c/2``, the rest by 0."""
    a, c = as_scalar(a), as_scalar(c)
    mats = {name: zeros(1) for name in LETTERS}
    mats["g"][0, 0] = a
    mats["g^-1"][0, 0] = 1 / a
    mats["zeta"][0, 0] = -HALF * c
    return MatrixRep(1, mats)


def _flat(m: np.ndarray) -> Dict[int, Fraction]:
    return {k: c for k, c in enumerate(m.ravel()) if c != 0}


class BurnsideCapError(RuntimeError):
    pass


def burnside_span(rep: MatrixRep, cap: int | None = None) -> int:
    """Dimension of the algebra generated by the generator matrices.

    Words are grown breadth first; a layer that adds nothing means the span
    has stabilized.
    """
    dim = rep.dim
    cap = 2 * dim * dim if cap is None else cap
    basis = EchelonBasis()
    gens = [rep.matrices[name] for name in LETTERS]
    layer = [identity(dim)]
    basis.add(_flat(layer[0]))
    for _ in range(cap):
        new_layer = []
        for m in layer:
            for G in gens:
                prod = G.dot(m)
                if basis.add(_flat(prod)):
                    new_layer.append(prod)
        if not new_layer or len(basis) == dim * dim:
            return len(basis)
        layer = new_layer
    raise BurnsideCapError(f"span did not stabilize within {cap} layers")


def is_simple(rep: MatrixRep, cap: int | None = None) -> bool:
    return burnside_span(rep, cap) == rep.dim ** 2


def nilpotency_order(m: np.ndarray) -> int:
    dim = m.shape[0]
    power = identity(dim)
    for k in range(dim + 1):
        if not np.any(power != 0):
            return k
        power = power.dot(m)
    raise NotNilpotentError("matrix is not nilpotent")


def nilpotency_orders(rep: MatrixRep) -> Dict[str, int]:
    """Least k with ``rho(a)^k = 0`` for a in x, u, g - 1."""
    return {
        "x": nilpotency_order(rep.matrices["x"]),
        "u": nilpotency_order(rep.matrices["u"]),
        "g-1": nilpotency_order(rep.matrices["g"] - identity(rep.dim)),
    }


def trace(m: np.ndarray) -> Fraction:
    return sum((m[i, i] for i in range(m.shape[0])), Fraction(0))


def traces_vanish(m: np.ndarray) -> bool:
    """``Tr(m^k) = 0`` for ``1 <= k <= dim``; equivalent to nilpotency in characteristic 0."""
    power = identity(m.shape[0])
    for _ in range(m.shape[0]):
        power = power.dot(m)
        if trace(power) != 0:
            return False
    return True


# -- induced modules ----------------------------------------------------------------


@dataclass(frozen=True)
class WModuleSpec:
    a: Fraction
    b: Fraction
    depth: int

    def __post_init__(self):
        object.__setattr__(self, "a", as_scalar(self.a))
        object.__setattr__(self, "b", as_scalar(self.b))
        if self.a == 0:
            raise ValueError("a must be nonzero")


@dataclass(frozen=True)
class VermaSpec:
    a: Fraction
    c: Fraction
    depth: int

    def __post_init__(self):
        object.__setattr__(self, "a", as_scalar(self.a))
        object.__setattr__(self, "c", as_scalar(self.c))
        if self.a == 0:
            raise ValueError("a must be nonzero")


@dataclass
class InducedVector:
    """Sparse coordinates over the basis ``x(n)`` of W or ``z(i, j)`` of a Verma module."""

    coords: Dict[object, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        self.coords = {k: as_scalar(c) for k, c in self.coords.items() if as_scalar(c) != 0}

    @classmethod
    def basis(cls, index) -> "InducedVector":
        return cls({index: Fraction(1)})

    def __add__(self, other: "InducedVector") -> "InducedVector":
        out = dict(self.coords)
        for k, c in other.coords.items():
            out[k] = out.get(k, Fraction(0)) + c
        return InducedVector(out)

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, c) -> "InducedVector":
        c = as_scalar(c)
        return InducedVector({k: v * c for k, v in self.coords.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, InducedVector) and self.coords == other.coords

    def __bool__(self):
        return bool(self.coords)

    def format(self, prefix: str) -> str:
        if not self.coords:
            return "0"
        parts = []
        for k in sorted(self.coords, reverse=True):
            label = f"{prefix}({k})" if not isinstance(k, tuple) else f"{prefix}({k[0]},{k[1]})"
            c = self.coords[k]
            sign = "-" if c < 0 else "+"
            text = f"{abs(c)}·{label}"
            parts.append(("-" + text) if not parts and sign == "-" else text if not parts else f" {sign} {text}")
        return "".join(parts)


def _check_subalgebra(E: Element, allowed: Tuple[str, ...]) -> None:
    P = E.pres
    for m in E.terms:
        for i, e in enumerate(m):
            if e and P.names[i] not in allowed:
                raise ValueError(f"{P.names[i]} does not act on this module")


def act_W(E: Element, spec: WModuleSpec, vec: InducedVector) -> InducedVector:
    """Action of an element of the positive Borel part on ``W_{a,b}``."""
    _check_subalgebra(E, ("g", "zeta", "u", "v"))
    P = E.pres
    zeta_i, g_i, u_i, v_i = (P.index[n] for n in ("zeta", "g", "u", "v"))
    out: Dict[int, Fraction] = {}
    for n, coeff in vec.coords.items():
        if n > spec.depth:
            raise DepthError(f"x({n}) beyond depth {spec.depth}")
        product = E * P.monomial({"zeta": n})
        for m, c in product.terms.items():
            if m[u_i]:
                continue
            k = m[zeta_i]
            if k > spec.depth:
                raise DepthError(f"x({k}) beyond depth {spec.depth}")
            out[k] = out.get(k, Fraction(0)) + coeff * c * spec.a ** m[g_i] * spec.b ** m[v_i]
    return InducedVector(out)


@lru_cache(maxsize=None)
def jordan_yfirst() -> Presentation:
    """The Jordan plane with the opposite PBW order ``y < x``."""
    return Presentation(
        ("y", "x"),
        {("x", "y"): {("y", "x"): 1, ("x", "x"): HALF}},
        heavy=("y",),
        label="J (y first)",
    )


@lru_cache(maxsize=None)
def xy_to_yfirst(n: int, r: int) -> Tuple[Tuple[Tuple[int, int], Fraction], ...]:
    """``x^n y^r`` in the basis ``y^i x^j``."""
    J = jordan_yfirst()
    el = J.monomial({"x": n}) * J.monomial({"y": r})
    return tuple(((m[0], m[1]), c) for m, c in el.terms.items())


@lru_cache(maxsize=None)
def _yx_word(P: Presentation, i: int, j: int) -> Element:
    # y^i x^j as a product; the PBW order of the double puts x first
    return P.monomial({"y": i}) * P.monomial({"x": j})


def act_verma(E: Element, spec: VermaSpec, vec: InducedVector) -> InducedVector:
    """Action of an element of the double on the Verma module ``M_{a,c}``."""
    P = E.pres
    gx, gy, gg, gz, gu, gv = (P.index[n] for n in ("x", "y", "g", "zeta", "u", "v"))
    zeta_value = -HALF * spec.c
    out: Dict[Tuple[int, int], Fraction] = {}
    for (i, j), coeff in vec.coords.items():
        if i + j > spec.depth:
            raise DepthError(f"z({i},{j}) beyond depth {spec.depth}")
        product = E * _yx_word(P, i, j)
        for m, c in product.terms.items():
            if m[gu] or m[gv]:
                continue
            scalar = coeff * c * spec.a ** m[gg] * zeta_value ** m[gz]
            if not scalar:
                continue
            for (yi, xj), c2 in xy_to_yfirst(m[gx], m[gy]):
                if yi + xj > spec.depth:
                    raise DepthError(f"z({yi},{xj}) beyond depth {spec.depth}")
                out[(yi, xj)] = out.get((yi, xj), Fraction(0)) + scalar * c2
    return InducedVector(out)


def _power_act(act, E: Element, k: int, spec, vec: InducedVector) -> InducedVector:
    for _ in range(k):
        vec = act(E, spec, vec)
    return vec


SAMPLE_A = (Fraction(2), Fraction(3), Fraction(5), Fraction(-1), HALF)
SAMPLE_B = (Fraction(1), Fraction(2), Fraction(-3))
SAMPLE_C = (Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(7))


def default_verma_samples() -> List[Tuple[Fraction, Fraction]]:
    """Five ``(a, c)`` pairs drawn from the sample sets; the last is the edge case ``a = 1``."""
    return [(Fraction(2), Fraction(0)), (Fraction(3), Fraction(1)), (Fraction(-1), Fraction(2)),
            (HALF, Fraction(7)), (Fraction(1), Fraction(-1))]


def verma_identity_suite(max_ij: int = 6, samples=None) -> Report:
    samples = default_verma_samples() if samples is None else samples
    D = double.dj_presentation()
    u, v = D.gen("u"), D.gen("v")
    report = Report("verma")
    for a, c in samples:
        a, c = as_scalar(a), as_scalar(c)
        spec = VermaSpec(a, c, 2 * max_ij + 1)
        tag = f"a={a} c={c}"
        for i in range(max_ij + 1):
            for j in range(max_ij + 1):
                start = InducedVector.basis((i, j))
                after_u = _power_act(act_verma, u, i, spec, start)
                expected = InducedVector.basis((0, j)) * ((1 - a) ** i * factorial(i))
                report.add(f"{tag} u^{i} z({i},{j})", after_u == expected, after_u.format("z"))
                after_v = _power_act(act_verma, v, j, spec, after_u)
                expected = InducedVector.basis((0, 0)) * ((1 - a) ** (i + j) * factorial(i) * factorial(j))
                report.add(f"{tag} v^{j} u^{i} z({i},{j})", after_v == expected, after_v.format("z"))
        for j in range(max_ij + 1):
            image = act_verma(u, spec, InducedVector.basis((0, j)))
            report.add(f"{tag} u z(0,{j}) = 0", not image)
            image = act_verma(v, spec, InducedVector.basis((0, j)))
            expected = InducedVector.basis((0, j - 1)) * (j * (1 - a)) if j else InducedVector()
            report.add(f"{tag} v z(0,{j})", image == expected, image.format("z"))
    return report


def w_identity_suite(max_n: int = 6, a_values=SAMPLE_A[:1], b_values=SAMPLE_B) -> Report:
    D = double.dj_presentation()
    v, g, u = D.gen("v"), D.gen("g"), D.gen("u")
    report = Report("w-modules")
    for a in a_values:
        for b in b_values:
            spec = WModuleSpec(a, b, max_n)
            tag = f"a={a} b={b}"
            for n in range(max_n + 1):
                xn = InducedVector.basis(n)
                image = act_W((v - b) ** n, spec, xn)
                expected = InducedVector.basis(0) * (spec.b ** n * factorial(n))
                report.add(f"{tag} (v-b)^{n} x({n})", image == expected, image.format("x"))
                report.add(f"{tag} u x({n}) = 0", not act_W(u, spec, xn))
                report.add(f"{tag} g x({n}) = a x({n})", act_W(g, spec, xn) == xn * spec.a)
    return report


def nilpotency_bound(i: int, j: int, memo=None) -> int:
    """The recursive bound: ``n(0, j) = 1`` and ``n(i, j) = max_{k<i} n(k, i+j-k) + 1``."""
    memo = {} if memo is None else memo
    if (i, j) not in memo:
        if i == 0:
            memo[(i, j)] = 1
        else:
            memo[(i, j)] = max(nilpotency_bound(k, i + j - k, memo) for k in range(i)) + 1
    return memo[(i, j)]


def g_minus_1_image(i: int, j: int) -> InducedVector:
    """``(g-1) z(i,j) = sum_{k=1..i} C(i,k) (k+1)!/2^k z(i-k, j+k)`` in the y-first basis."""
    return InducedVector({
        (i - k, j + k): Fraction(comb(i, k) * factorial(k + 1), 2 ** k)
        for k in range(1, i + 1)
    })


def g_minus_1_nilpotency(c, depth: int = 8) -> Report:
    """Local nilpotency of ``g - 1`` on ``M_{1,c}`` against the recursive bound."""
    D = double.dj_presentation()
    spec = VermaSpec(1, c, depth)
    g1 = D.gen("g") - 1
    report = Report(f"g1-nilpotency c={spec.c}")
    memo: dict = {}
    for i in range(depth + 1):
        for j in range(depth - 2 * i + 1):
            vec = InducedVector.basis((i, j))
            k = 0
            while vec:
                image = act_verma(g1, spec, vec)
                if k == 0:
                    lower = all(ii < i for ii, _ in image.coords)
                    report.add(f"(g-1) z({i},{j}) lowers the y-index", lower, image.format("z"))
                    expected = g_minus_1_image(i, j)
                    report.add(f"(g-1) z({i},{j}) closed form", image == expected,
                               f"{image.format('z')} vs {expected.format('z')}")
                vec = image
                k += 1
                if k > depth + 1:
                    break
            bound = nilpotency_bound(i, j, memo)
            report.add(f"(g-1)^k z({i},{j}) = 0 with k={k} <= {bound}", not vec and k <= bound)
    return report


def _mod_xm(vec: InducedVector) -> InducedVector:
    """Image in the quotient by ``x M``: drop basis vectors with an x-factor."""
    return InducedVector({k: c for k, c in vec.coords.items() if k[1] == 0})


def kn_check(n: int, depth: int = 6) -> Report:
    """The quotient ``M_{1,n} / x M_{1,n}`` behaves as the sl2 Verma module of weight n."""
    if depth < 2:
        raise ValueError("depth must be at least 2")
    D = double.dj_presentation()
    spec = VermaSpec(1, n, depth)
    report = Report(f"kn n={n}")
    gens = {name: D.gen(name) for name in ("x", "y", "g", "zeta", "u", "v")}
    for i in range(depth):
        for j in range(1, depth - i):
            for name, X in gens.items():
                image = act_verma(X, spec, InducedVector.basis((i, j)))
                report.add(f"x M stable under {name} at z({i},{j})", not _mod_xm(image), image.format("z"))
    for i in range(depth):
        base = InducedVector.basis((i, 0))
        act = {name: _mod_xm(act_verma(X, spec, base)) for name, X in gens.items()}
        report.add(f"x kills zbar({i},0)", not act["x"])
        report.add(f"u kills zbar({i},0)", not act["u"])
        report.add(f"g fixes zbar({i},0)", act["g"] == base)
        report.add(f"y zbar({i},0) = zbar({i + 1},0)", act["y"] == InducedVector.basis((i + 1, 0)))
        report.add(f"zeta zbar({i},0)", act["zeta"] == base * (-HALF * (n - 2 * i)), act["zeta"].format("z"))
        expected = InducedVector.basis((i - 1, 0)) * (HALF * i * (n - i + 1)) if i else InducedVector()
        report.add(f"v zbar({i},0)", act["v"] == expected, act["v"].format("z"))
    return report


def ln_report(max_n: int = 6) -> Report:
    report = Report("ln")
    for n in range(max_n + 1):
        rep = build_Ln(n)
        report.add(f"L_{n} valid", validate_rep(rep).ok)
        span = burnside_span(rep)
        report.add(f"L_{n} simple (span {span} of {(n + 1) ** 2})", span == (n + 1) ** 2)
        orders = nilpotency_orders(rep)
        report.add(f"L_{n} x, u, g-1 act by 0", orders == {"x": 1, "u": 1, "g-1": 1})
        report.add(f"L_{n} y nilpotent of order {n + 1}", nilpotency_order(rep.matrices["y"]) == n + 1)
        report.add(f"L_{n} Tr g = Tr g^-1 = {n + 1}",
                   trace(rep.matrices["g"]) == trace(rep.matrices["g^-1"]) == n + 1)
        report.add(f"L_{n} Tr x^k = 0 for k <= {rep.dim}", traces_vanish(rep.matrices["x"]))
    return report
