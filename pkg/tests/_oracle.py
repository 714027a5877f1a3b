"""Naive word-rewriting oracle for the double, independent of the engine.

Elements are dicts from words (tuples of letters) to Fractions.  The
leftmost disordered adjacent pair is rewritten until every word is sorted.
Only positive powers of g are supported; the rules are transcribed directly
from the defining relations rather than taken from the package.
"""

from fractions import Fraction

ORDER = {"x": 0, "y": 1, "g": 2, "zeta": 3, "u": 4, "v": 5}
H = Fraction(1, 2)

# (later, earlier) -> list of (coeff, word)
RULES = {
    ("y", "x"): [(1, ("x", "y")), (-H, ("x", "x"))],
    ("g", "x"): [(1, ("x", "g"))],
    ("g", "y"): [(1, ("y", "g")), (1, ("x", "g"))],
    ("zeta", "x"): [(1, ("x", "zeta")), (1, ("x",))],
    ("zeta", "y"): [(1, ("y", "zeta")), (1, ("y",))],
    ("zeta", "g"): [(1, ("g", "zeta"))],
    ("u", "x"): [(1, ("x", "u"))],
    ("u", "y"): [(1, ("y", "u")), (1, ()), (-1, ("g",))],
    ("u", "g"): [(1, ("g", "u"))],
    ("u", "zeta"): [(1, ("zeta", "u")), (1, ("u",))],
    ("v", "x"): [(1, ("x", "v")), (1, ()), (-1, ("g",)), (1, ("x", "u"))],
    ("v", "y"): [(1, ("y", "v")), (-1, ("g", "zeta")), (1, ("y", "u"))],
    ("v", "g"): [(1, ("g", "v")), (1, ("g", "u"))],
    ("v", "zeta"): [(1, ("zeta", "v")), (1, ("v",))],
    ("v", "u"): [(1, ("u", "v")), (-H, ("u", "u"))],
}


def _first_disorder(word):
    for k in range(len(word) - 1):
        if ORDER[word[k]] > ORDER[word[k + 1]]:
            return k
    return None


def reduce(terms):
    """Rewrite ``{word: coeff}`` until all words are sorted."""
    todo = dict(terms)
    done = {}
    while todo:
        word, c = todo.popitem()
        k = _first_disorder(word)
        if k is None:
            done[word] = done.get(word, Fraction(0)) + c
            continue
        for rc, rw in RULES[(word[k], word[k + 1])]:
            new = word[:k] + rw + word[k + 2:]
            todo[new] = todo.get(new, Fraction(0)) + c * rc
    return {w: c for w, c in done.items() if c}


def multiply(a, b):
    out = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            out[wa + wb] = out.get(wa + wb, Fraction(0)) + ca * cb
    return reduce(out)


def to_exponents(terms):
    """Sorted words -> {exponent dict (nonzero entries): coeff}."""
    out = {}
    for w, c in terms.items():
        exps = {}
        for letter in w:
            exps[letter] = exps.get(letter, 0) + 1
        out[tuple(sorted(exps.items(), key=lambda kv: ORDER[kv[0]]))] = c
    return out
