"""Expression parser for the three algebras.

Grammar (whitespace-insensitive)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' ['-'] INT)?
    atom   := RATIONAL | NAME | '(' expr ')'

Parsing produces a small AST; :func:`evaluate` turns it into a normal-form
:class:`~djd.engine.Element`.  Macro names expand to their defining
elements before anything is multiplied.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Tuple, Union

from .engine import Element, Presentation

ALGEBRAS = ("dj", "sl2", "a2s")


class ParseError(ValueError):
    def __init__(self, message: str, pos: int | None = None):
        self.pos = pos
        super().__init__(message if pos is None else f"{message} (at column {pos + 1})")


# -- AST ----------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Name:
    name: str
    pos: int


@dataclass(frozen=True)
class Power:
    base: "Node"
    exponent: int
    pos: int


@dataclass(frozen=True)
class Product:
    factors: Tuple["Node", ...]


@dataclass(frozen=True)
class Sum:
    terms: Tuple[Tuple[int, "Node"], ...]  # (sign, node)


Node = Union[Num, Name, Power, Product, Sum]


# -- tokens -------------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_ζ][A-Za-z0-9_]*)|(?P<op>[-+*^()]))"
)


def tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[col]!r}", col)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.take()
        if val != value:
            found = "end of input" if kind == "end" else repr(val)
            raise ParseError(f"expected {value!r}, found {found}", pos)

    def expr(self) -> Node:
        terms = []
        sign = 1
        if self.peek[0] == "op" and self.peek[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
        terms.append((sign, self.term()))
        while self.peek[0] == "op" and self.peek[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
            terms.append((sign, self.term()))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Sum(tuple(terms))

    def term(self) -> Node:
        factors = [self.factor()]
        while self.peek[1] == "*" and self.peek[0] == "op":
            self.take()
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def factor(self) -> Node:
        base = self.atom()
        if self.peek[1] == "^" and self.peek[0] == "op":
            _, _, pos = self.take()
            sign = 1
            if self.peek[1] == "-":
                self.take()
                sign = -1
            kind, val, vpos = self.take()
            if kind != "num" or "/" in val:
                raise ParseError("exponent must be an integer", vpos)
            return Power(base, sign * int(val), pos)
        return base

    def atom(self) -> Node:
        kind, val, pos = self.take()
        if kind == "num":
            return Num(Fraction(val))
        if kind == "name":
            return Name(val, pos)
        if val == "(":
            node = self.expr()
            self.expect(")")
            return node
        found = "end of input" if kind == "end" else repr(val)
        raise ParseError(f"unexpected {found}", pos)


def parse(text: str) -> Node:
    """Parse ``text`` into an AST; names are resolved later by :func:`evaluate`."""
    p = _Parser(text)
    node = p.expr()
    kind, val, pos = p.peek
    if kind != "end":
        raise ParseError(f"unexpected {val!r}", pos)
    return node


# -- name tables --------------------------------------------------------------


def _dj_names() -> Dict[str, Callable[[], Element]]:
    from . import double

    D = double.dj_presentation
    table = {name: (lambda n=name: D().gen(n)) for name in double.GENERATORS}
    table["zeta"] = table["ζ"] = lambda: D().gen("zeta")
    table["gi"] = lambda: D().gen("g^-1")
    for macro in ("q", "z", "s", "theta", "omega"):
        table[macro] = lambda m=macro: getattr(double.distinguished(), m)
    return table


def _sl2_names() -> Dict[str, Callable[[], Element]]:
    from .sl2 import sl2_presentation

    return {name: (lambda n=name: sl2_presentation().gen(n)) for name in ("e", "f", "h")}


def _a2s_names() -> Dict[str, Callable[[], Element]]:
    from .weyl import a2s_presentation

    W = a2s_presentation
    table = {name: (lambda n=name: W().gen(n)) for name in W().names}
    for name in ("z", "q", "t"):
        table[name + "i"] = lambda n=name: W().gen(n + "^-1")
    return table


_TABLES = {"dj": _dj_names, "sl2": _sl2_names, "a2s": _a2s_names}


def presentation(algebra: str) -> Presentation:
    if algebra == "dj":
        from .double import dj_presentation

        return dj_presentation()
    if algebra == "sl2":
        from .sl2 import sl2_presentation

        return sl2_presentation()
    if algebra == "a2s":
        from .weyl import a2s_presentation

        return a2s_presentation()
    raise ParseError(f"unknown algebra {algebra!r}")


def evaluate(node: Node, algebra: str = "dj") -> Element:
    table = _TABLES[algebra]() if algebra in _TABLES else None
    if table is None:
        raise ParseError(f"unknown algebra {algebra!r}")
    P = presentation(algebra)

    def ev(n: Node) -> Element:
        if isinstance(n, Num):
            return P.scalar(n.value)
        if isinstance(n, Name):
            if n.name not in table:
                raise ParseError(f"unknown name {n.name!r} in {algebra}", n.pos)
            return table[n.name]()
        if isinstance(n, Power):
            base = ev(n.base)
            try:
                return base ** n.exponent
            except (ValueError, ZeroDivisionError):
                what = n.base.name if isinstance(n.base, Name) else "this factor"
                raise ParseError(f"negative power: {what} is not invertible", n.pos) from None
        if isinstance(n, Product):
            out = ev(n.factors[0])
            for f in n.factors[1:]:
                out = out * ev(f)
            return out
        out = P.zero()
        for sign, t in n.terms:
            out = out + ev(t) if sign > 0 else out - ev(t)
        return out

    return ev(node)


def parse_element(text: str, algebra: str = "dj") -> Element:
    return evaluate(parse(text), algebra)


# -- module vectors -----------------------------------------------------------

_VEC_TERM = re.compile(
    r"\s*(?P<sign>[-+])?\s*(?:(?P<coeff>\d+(?:/\d+)?)\s*[*·]\s*)?"
    r"(?P<prefix>[a-z])\((?P<idx>\s*\d+\s*(?:,\s*\d+\s*)?)\)\s*"
)


def parse_vector(text: str, prefix: str, arity: int) -> Dict[Tuple[int, ...], Fraction]:
    """Parse ``"z(1,0)"``, ``"2·x(3) - 1/2*x(0)"`` into coordinates."""
    coords: Dict[Tuple[int, ...], Fraction] = {}
    pos = 0
    first = True
    while pos < len(text) and text[pos:].strip():
        m = _VEC_TERM.match(text, pos)
        if not m or (not first and not m.group("sign")):
            raise ParseError("malformed vector", pos)
        if m.group("prefix") != prefix:
            raise ParseError(f"expected basis vectors {prefix}(...)", m.start("prefix"))
        idx = tuple(int(k) for k in m.group("idx").split(","))
        if len(idx) != arity:
            raise ParseError(f"{prefix}(...) takes {arity} indices", m.start("idx"))
        c = Fraction(m.group("coeff") or 1)
        if m.group("sign") == "-":
            c = -c
        coords[idx] = coords.get(idx, Fraction(0)) + c
        pos = m.end()
        first = False
    if first:
        raise ParseError("empty vector", 0)
    return {k: c for k, c in coords.items() if c}
