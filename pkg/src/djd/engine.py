"""
PBW straightening engine for iterated Ore extensions.

An algebra is described by an ordered list of generators (some invertible)
and one straightening rule for every disordered pair of letters
``X_j^s * X_i^t`` with ``j > i``.  Every element is stored as a sparse map
from exponent vectors (ordered PBW monomials) to exact rationals.

Products of monomials are computed by moving the letters of the right
factor, one at a time, leftwards through the left factor.  Intermediate
products are memoized per presentation, so repeated work in long
computations (powers, tensor squares, module actions) is shared.

Example::

    >>> P = Presentation(["a", "b"], rules={("b", "a"): {("a", "b"): 1, (): 1}})
    >>> a, b = P.gens()
    >>> b * a
    a*b + 1
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Mapping, Sequence, Tuple

Monomial = Tuple[int, ...]
Terms = Dict[Monomial, Fraction]

INHOMOGENEOUS = "inhomogeneous"
DEFAULT_STEP_CAP = 10**6


class PresentationError(ValueError):
    """The rule table is incomplete, inhomogeneous or not terminating."""


class NonTerminationError(RuntimeError):
    """A product needed more rewrite steps than allowed."""


def as_scalar(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"not an exact rational: {c!r}")


def _sign(e: int) -> int:
    return 1 if e > 0 else -1


@dataclass(frozen=True)
class Rule:
    """Rewrite ``X_j^sj * X_i^si`` (``j > i``) to a normal-form element."""

    left: Tuple[Tuple[int, int], Tuple[int, int]]
    right: Mapping[Monomial, Fraction]
    descends: bool = True


class Presentation:
    """An algebra given by ordered generators and straightening rules.

    ``rules`` maps a pair of letters ``(later, earlier)`` to the normal form
    of their product.  Letters are generator names, with ``"g^-1"`` style
    names for inverse letters of invertible generators.  Right-hand sides are
    dicts from words (tuples of letters, already in PBW order) to
    coefficients.  ``commuting`` lists pairs of generators that commute; all
    sign variants are generated for them.

    ``heavy`` lists generators in priority order for the termination measure
    ``(count(heavy[0]), count(heavy[1]), ..., word length, inversions)``.
    """

    def __init__(
        self,
        names: Sequence[str],
        rules: Mapping[Tuple[str, str], Mapping[Tuple[str, ...], object]] = None,
        *,
        invertible: Iterable[str] = (),
        commuting: Iterable[Tuple[str, str]] = (),
        degrees: Mapping[str, int] = None,
        heavy: Sequence[str] = (),
        label: str = "",
        validate: bool = True,
    ):
        self.names = tuple(names)
        self.n = len(self.names)
        self.index = {name: i for i, name in enumerate(self.names)}
        self.invertible = tuple(name in set(invertible) for name in self.names)
        degrees = degrees or {}
        self.degrees = tuple(int(degrees.get(name, 0)) for name in self.names)
        self.heavy = tuple(self.index[h] for h in heavy)
        self.label = label
        self._cache: Dict[Tuple[Monomial, Monomial], Terms] = {}
        self._steps = 0
        self._step_cap = DEFAULT_STEP_CAP

        self.rules: Dict[Tuple[int, int, int, int], Rule] = {}
        for later, earlier in commuting:
            j, i = self.index[later], self.index[earlier]
            if j < i:
                j, i = i, j
            for sj in self._signs(j):
                for si in self._signs(i):
                    mono = [0] * self.n
                    mono[j] += sj
                    mono[i] += si
                    self._add_rule((j, sj), (i, si), {tuple(mono): Fraction(1)}, validate)
        for (left_j, left_i), right in (rules or {}).items():
            lj, li = self.letter(left_j), self.letter(left_i)
            terms: Terms = {}
            for word, c in right.items():
                mono = self._word_monomial(word)
                terms[mono] = terms.get(mono, Fraction(0)) + as_scalar(c)
            self._add_rule(lj, li, {m: c for m, c in terms.items() if c}, validate)

        missing = [
            (self.letter_name(j, sj), self.letter_name(i, si))
            for j in range(self.n)
            for i in range(j)
            for sj in self._signs(j)
            for si in self._signs(i)
            if (j, sj, i, si) not in self.rules
        ]
        if missing:
            raise PresentationError(f"no straightening rule for {missing}")

    # -- letters and words ---------------------------------------------------

    def _signs(self, i: int) -> Tuple[int, ...]:
        return (1, -1) if self.invertible[i] else (1,)

    def letter(self, name: str) -> Tuple[int, int]:
        """Parse ``"g"`` or ``"g^-1"`` into ``(index, sign)``."""
        if name.endswith("^-1"):
            i = self.index[name[:-3]]
            if not self.invertible[i]:
                raise PresentationError(f"{name[:-3]} is not invertible")
            return i, -1
        return self.index[name], 1

    def letter_name(self, i: int, s: int) -> str:
        return self.names[i] if s > 0 else self.names[i] + "^-1"

    def letters(self) -> Tuple[Tuple[int, int], ...]:
        """All letters, inverse letters included, in generator order."""
        return tuple((i, s) for i in range(self.n) for s in self._signs(i))

    def _word_monomial(self, word: Sequence[str]) -> Monomial:
        mono = [0] * self.n
        last = -1
        for name in word:
            i, s = self.letter(name)
            if i < last:
                raise PresentationError(f"right-hand side {word} is not PBW ordered")
            last = i
            mono[i] += s
        return tuple(mono)

    def unit(self, i: int, s: int = 1) -> Monomial:
        mono = [0] * self.n
        mono[i] = s
        return tuple(mono)

    # -- termination measure -------------------------------------------------

    def _word_of(self, mono: Monomial) -> Tuple[Tuple[int, int], ...]:
        return tuple((i, _sign(e)) for i, e in enumerate(mono) for _ in range(abs(e)))

    def measure(self, word: Sequence[Tuple[int, int]]) -> tuple:
        counts = tuple(sum(1 for i, _ in word if i == h) for h in self.heavy)
        inversions = sum(
            1 for a, b in itertools.combinations(range(len(word)), 2) if word[a][0] > word[b][0]
        )
        return counts + (len(word), inversions)

    def _add_rule(self, lj, li, right: Terms, validate: bool) -> None:
        j, sj = lj
        i, si = li
        if j <= i:
            raise PresentationError(f"rule {self.letter_name(*lj)}*{self.letter_name(*li)} is not disordered")
        for mono in right:
            for k, e in enumerate(mono):
                if e < 0 and not self.invertible[k]:
                    raise PresentationError(f"negative power of {self.names[k]} in a rule")
        left_word = ((j, sj), (i, si))
        left_measure = self.measure(left_word)
        left_counts = sorted(left_word)
        descends = True
        for mono in right:
            word = self._word_of(mono)
            m = self.measure(word)
            if not m < left_measure:
                descends = False
            # equal counts and length must be a pure reordering, so that the
            # inversion drop survives any surrounding context
            elif m[:-1] == left_measure[:-1] and sorted(word) != left_counts:
                descends = False
        degree = self.degrees[j] * sj + self.degrees[i] * si
        for mono in right:
            if self.monomial_degree(mono) != degree:
                raise PresentationError(
                    f"rule {self.letter_name(*lj)}*{self.letter_name(*li)} is not homogeneous"
                )
        if validate and not descends:
            raise PresentationError(
                f"rule {self.letter_name(*lj)}*{self.letter_name(*li)} violates the termination measure"
            )
        self.rules[(j, sj, i, si)] = Rule((lj, li), right, descends)

    def rule(self, later: str, earlier: str) -> "Element":
        """The right-hand side of the rule for ``later * earlier``."""
        (j, sj), (i, si) = self.letter(later), self.letter(earlier)
        return Element(self, dict(self.rules[(j, sj, i, si)].right))

    # -- elements ------------------------------------------------------------

    def one(self) -> "Element":
        return Element(self, {(0,) * self.n: Fraction(1)})

    def zero(self) -> "Element":
        return Element(self, {})

    def scalar(self, c) -> "Element":
        return Element(self, {(0,) * self.n: as_scalar(c)})

    def gen(self, name: str) -> "Element":
        i, s = self.letter(name)
        return Element(self, {self.unit(i, s): Fraction(1)})

    def gens(self) -> Tuple["Element", ...]:
        return tuple(self.gen(name) for name in self.names)

    def monomial(self, exps: Mapping[str, int] | Sequence[int], coeff=1) -> "Element":
        if isinstance(exps, Mapping):
            mono = [0] * self.n
            for name, e in exps.items():
                mono[self.index[name]] = int(e)
        else:
            mono = list(exps)
        for k, e in enumerate(mono):
            if e < 0 and not self.invertible[k]:
                raise ValueError(f"negative power of non-invertible generator {self.names[k]}")
        return Element(self, {tuple(mono): as_scalar(coeff)})

    def monomial_degree(self, mono: Monomial) -> int:
        return sum(d * e for d, e in zip(self.degrees, mono))

    # -- multiplication ------------------------------------------------------

    def normal_form(self, word: Sequence[Tuple[object, int]], coeff=1) -> "Element":
        """Normal form of ``coeff * w_1^p_1 * w_2^p_2 * ...`` (letters by index or name)."""
        result = self.scalar(coeff)
        for gen, power in word:
            i = self.index[gen] if isinstance(gen, str) else int(gen)
            if power < 0 and not self.invertible[i]:
                raise ValueError(f"negative power of non-invertible generator {self.names[i]}")
            result = result * Element._raw(self, {self.unit(i, power): Fraction(1)})
        return result

    def multiply_terms(self, a: Terms, b: Terms, step_cap: int = DEFAULT_STEP_CAP) -> Terms:
        out: Terms = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                self._steps = 0
                self._step_cap = step_cap
                accumulate(out, self._mul_mono(ma, mb), ca * cb)
        return out

    def _mul_mono(self, a: Monomial, b: Monomial) -> Terms:
        key = (a, b)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        first = next((k for k, e in enumerate(b) if e), None)
        if first is None:
            result = {a: Fraction(1)}
        else:
            last = next((k for k in range(self.n - 1, -1, -1) if a[k]), -1)
            if last <= first:
                result = {tuple(x + y for x, y in zip(a, b)): Fraction(1)}
            else:
                s = _sign(b[first])
                rest = list(b)
                rest[first] -= s
                rest = tuple(rest)
                left = self._mul_letter(a, first, s)
                if not any(rest):
                    result = left
                else:
                    result = {}
                    for m, c in left.items():
                        for m2, c2 in self._mul_mono(m, rest).items():
                            result[m2] = result.get(m2, Fraction(0)) + c * c2
                    result = {m: c for m, c in result.items() if c}
        self._cache[key] = result
        return result

    def _mul_letter(self, a: Monomial, i: int, s: int) -> Terms:
        last = next((k for k in range(self.n - 1, -1, -1) if a[k]), -1)
        if last <= i:
            mono = list(a)
            mono[i] += s
            return {tuple(mono): Fraction(1)}
        sk = _sign(a[last])
        rule = self.rules[(last, sk, i, s)]
        self._steps += 1
        if self._steps > self._step_cap:
            raise NonTerminationError(
                f"more than {self._step_cap} rewrite steps in one product term"
            )
        if not rule.descends:
            raise NonTerminationError(
                f"rule {self.letter_name(last, sk)}*{self.letter_name(i, s)} does not "
                "descend in the termination measure"
            )
        prefix = list(a)
        prefix[last] -= sk
        prefix = tuple(prefix)
        result: Terms = {}
        for m, c in rule.right.items():
            for m2, c2 in self._mul_mono(prefix, m).items():
                result[m2] = result.get(m2, Fraction(0)) + c * c2
        return {m: c for m, c in result.items() if c}

    def clear_cache(self) -> None:
        self._cache.clear()

    def __repr__(self) -> str:
        return f"Presentation({self.label or ', '.join(self.names)})"


def accumulate(target: dict, terms: Mapping, scale: Fraction = None) -> None:
    """``target += scale * terms`` in place, dropping zeros."""
    for k, c in terms.items():
        if scale is not None:
            c = c * scale
        value = target.get(k)
        if value is None:
            target[k] = c
        else:
            value += c
            if value:
                target[k] = value
            else:
                del target[k]


def monomial_key(mono: Monomial) -> tuple:
    """Graded-lex sort key; larger keys print first."""
    return (sum(abs(e) for e in mono), mono)


def format_coeff_term(c: Fraction, body: str, first: bool, sep: str = "*") -> str:
    sign = "-" if c < 0 else "+"
    mag = abs(c)
    if body == "1":
        text = str(mag)
    elif mag == 1:
        text = body
    else:
        text = f"{mag}{sep}{body}"
    if first:
        return ("-" if sign == "-" else "") + text
    return f" {sign} {text}"


class Element:
    """A finite linear combination of PBW monomials with rational coefficients."""

    __slots__ = ("pres", "terms")

    def __init__(self, pres: Presentation, terms: Mapping[Monomial, object] = None):
        self.pres = pres
        self.terms: Terms = {}
        for m, c in (terms or {}).items():
            c = as_scalar(c)
            if c:
                self.terms[tuple(m)] = c

    @classmethod
    def _raw(cls, pres: Presentation, terms: Terms) -> "Element":
        """Wrap an already canonical dict (Fraction values, no zeros)."""
        el = cls.__new__(cls)
        el.pres = pres
        el.terms = terms
        return el

    def _coerce(self, other) -> "Element":
        if isinstance(other, Element):
            if other.pres is not self.pres:
                raise ValueError(f"presentation mismatch: {self.pres!r} vs {other.pres!r}")
            return other
        return self.pres.scalar(other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        accumulate(terms, other.terms)
        return Element._raw(self.pres, terms)

    __radd__ = __add__

    def __neg__(self):
        return Element._raw(self.pres, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, Element):
            other = self._coerce(other)
            return Element._raw(self.pres, self.pres.multiply_terms(self.terms, other.terms))
        return self._scaled(as_scalar(other))

    def __rmul__(self, other):
        return self._scaled(as_scalar(other))

    def _scaled(self, c: Fraction) -> "Element":
        if not c:
            return Element._raw(self.pres, {})
        return Element._raw(self.pres, {m: c * v for m, v in self.terms.items()})

    def __truediv__(self, other):
        c = as_scalar(other)
        return Element(self.pres, {m: v / c for m, v in self.terms.items()})

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) == 1:
                (m, c), = self.terms.items()
                inverse = Element(self.pres, {tuple(-e for e in m): 1 / c})
                if all(e == 0 or self.pres.invertible[i] for i, e in enumerate(m)):
                    return inverse ** (-k)
            raise ValueError("only monomials in invertible generators have negative powers")
        result = self.pres.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.pres is other.pres and self.terms == other.terms
        try:
            return self == self.pres.scalar(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        return iter(self.sorted_terms())

    def __len__(self):
        return len(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: monomial_key(t[0]), reverse=True)

    def coefficient(self, mono) -> Fraction:
        if isinstance(mono, Mapping):
            mono = self.pres.monomial(mono).support()[0]
        return self.terms.get(tuple(mono), Fraction(0))

    def support(self):
        return [m for m, _ in self.sorted_terms()]

    def exponent_dict(self, mono: Monomial) -> Dict[str, int]:
        return {self.pres.names[i]: e for i, e in enumerate(mono) if e}

    def format_monomial(self, mono: Monomial) -> str:
        parts = []
        for i, e in enumerate(mono):
            if e == 1:
                parts.append(self.pres.names[i])
            elif e:
                parts.append(f"{self.pres.names[i]}^{e}")
        return "*".join(parts) or "1"

    def __str__(self):
        if not self.terms:
            return "0"
        return "".join(
            format_coeff_term(c, self.format_monomial(m), k == 0)
            for k, (m, c) in enumerate(self.sorted_terms())
        )

    __repr__ = __str__


def commutator(a: Element, b: Element) -> Element:
    return a * b - b * a


def degree_of(a: Element):
    """Common degree of all terms, ``None`` for zero, or ``INHOMOGENEOUS``."""
    degrees = {a.pres.monomial_degree(m) for m in a.terms}
    if not degrees:
        return None
    if len(degrees) > 1:
        return INHOMOGENEOUS
    return degrees.pop()


def normal_form(pres: Presentation, word, coeff=1) -> Element:
    return pres.normal_form(word, coeff)


@dataclass
class ConfluenceReport:
    presentation: str
    triples_checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_local_confluence(pres: Presentation, cap: int = DEFAULT_STEP_CAP) -> ConfluenceReport:
    """Compare ``(ab)c`` with ``a(bc)`` for every triple of letters.

    Letters include the inverse letters of invertible generators, so the
    derived inverse rules are validated here instead of being trusted.
    """
    report = ConfluenceReport(repr(pres))
    letters = pres.letters()
    elements = {l: Element(pres, {pres.unit(*l): 1}) for l in letters}
    for k, j, i in itertools.product(letters, repeat=3):
        a, b, c = elements[k], elements[j], elements[i]
        left = Element(pres, pres.multiply_terms(
            pres.multiply_terms(a.terms, b.terms, cap), c.terms, cap))
        right = Element(pres, pres.multiply_terms(
            a.terms, pres.multiply_terms(b.terms, c.terms, cap), cap))
        report.triples_checked += 1
        if left != right:
            names = tuple(pres.letter_name(*l) for l in (k, j, i))
            report.failures.append((names, str(left), str(right)))
    return report


class Tensor:
    """Element of a tensor power ``A ⊗ ... ⊗ A`` with the legwise product."""

    __slots__ = ("pres", "arity", "terms")

    def __init__(self, pres: Presentation, arity: int, terms: Mapping[tuple, object] = None):
        self.pres = pres
        self.arity = arity
        self.terms: Dict[Tuple[Monomial, ...], Fraction] = {}
        for key, c in (terms or {}).items():
            c = as_scalar(c)
            if c:
                self.terms[tuple(key)] = c

    @classmethod
    def _raw(cls, pres: Presentation, arity: int, terms) -> "Tensor":
        t = cls.__new__(cls)
        t.pres, t.arity, t.terms = pres, arity, terms
        return t

    @classmethod
    def pure(cls, *legs: Element) -> "Tensor":
        pres = legs[0].pres
        terms: Dict[tuple, Fraction] = {}
        for combo in itertools.product(*(leg.terms.items() for leg in legs)):
            key = tuple(m for m, _ in combo)
            c = Fraction(1)
            for _, v in combo:
                c *= v
            terms[key] = terms.get(key, Fraction(0)) + c
        return cls(pres, len(legs), terms)

    @classmethod
    def one(cls, pres: Presentation, arity: int = 2) -> "Tensor":
        return cls(pres, arity, {((0,) * pres.n,) * arity: 1})

    def __add__(self, other: "Tensor") -> "Tensor":
        terms = dict(self.terms)
        accumulate(terms, other.terms)
        return Tensor._raw(self.pres, self.arity, terms)

    def __neg__(self):
        return Tensor._raw(self.pres, self.arity, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Tensor):
            c = as_scalar(other)
            if not c:
                return Tensor._raw(self.pres, self.arity, {})
            return Tensor._raw(self.pres, self.arity, {k: c * v for k, v in self.terms.items()})
        pres = self.pres
        out: Dict[tuple, Fraction] = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                legs = [pres._mul_mono(ma, mb) for ma, mb in zip(ka, kb)]
                product: Dict[tuple, Fraction] = {(): ca * cb}
                for leg in legs:
                    product = {k + (m,): c * v for k, c in product.items() for m, v in leg.items()}
                accumulate(out, product)
        return Tensor._raw(pres, self.arity, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.pres is other.pres and self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self):
        return sorted(
            self.terms.items(),
            key=lambda t: tuple(monomial_key(m) for m in t[0]),
            reverse=True,
        )

    def __str__(self):
        if not self.terms:
            return "0"
        fmt = Element(self.pres).format_monomial
        return "".join(
            format_coeff_term(c, "⊗".join(fmt(m) for m in key), k == 0)
            for k, (key, c) in enumerate(self.sorted_terms())
        )

    __repr__ = __str__


class AlgebraMap:
    """Multiplicative extension of generator images.

    ``images`` maps each letter name of the source (``"g^-1"`` included) to an
    Element or Tensor of the target.  With ``anti=True`` the extension reverses
    products, as an antipode does.
    """

    def __init__(self, source: Presentation, images: Mapping[str, object], one, *, anti: bool = False):
        self.source = source
        self.images = {source.letter(name): img for name, img in images.items()}
        self.target_one = one
        self.anti = anti
        self._cache: dict = {}
        for letter in source.letters():
            if letter not in self.images:
                raise ValueError(f"no image for {source.letter_name(*letter)}")

    def _of_monomial(self, mono: Monomial):
        cached = self._cache.get(mono)
        if cached is not None:
            return cached
        last = next((k for k in range(len(mono) - 1, -1, -1) if mono[k]), None)
        if last is None:
            result = self.target_one
        else:
            s = _sign(mono[last])
            rest = list(mono)
            rest[last] -= s
            head = self._of_monomial(tuple(rest))
            img = self.images[(last, s)]
            result = img * head if self.anti else head * img
        self._cache[mono] = result
        return result

    def of_word(self, word: Sequence[str]):
        """Image of a product of letters, left to right."""
        result = self.target_one
        for name in word:
            img = self.images[self.source.letter(name)]
            result = img * result if self.anti else result * img
        return result

    def __call__(self, a: Element):
        terms: dict = {}
        for m, c in a.terms.items():
            accumulate(terms, self._of_monomial(m).terms, c)
        one = self.target_one
        if isinstance(one, Tensor):
            return Tensor._raw(one.pres, one.arity, terms)
        return Element._raw(one.pres, terms)
