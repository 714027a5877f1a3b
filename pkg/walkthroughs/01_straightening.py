# Straightening products in the double of the Jordan plane.
#
# Every element is a finite sum of ordered monomials x^n y^r g^m zeta^k u^i v^j
# with rational coefficients.  Multiplying two of them means pushing letters
# past each other with the defining relations until the order is restored.

from fractions import Fraction

from djd.double import dj_presentation
from djd.engine import check_local_confluence, commutator
from djd.parser import parse_element

D = dj_presentation()
x, y, g, zeta, u, v = D.gens()

# the Jordan plane relation
print("y*x          =", y * x)

# a relation with three terms on the right
print("v*y          =", v * y)

# g is invertible; inverse letters straighten too
gi = D.gen("g^-1")
print("g^-1*y       =", gi * y)
print("g^2*y*g^-2   =", g ** 2 * y * g ** -2)

# longer products reuse memoized pieces
print("u*y^3        =", u * y ** 3)

# the parser accepts the same syntax the printer emits
a = parse_element("v*y*x - 1/2*zeta")
print("parsed       =", a)
print("round trip   :", parse_element(str(a)) == a)

# commutators
print("[zeta, x]    =", commutator(zeta, x))
print("[v, u]       =", commutator(v, u))

# the rewriting system is locally confluent on all 7^3 letter triples
report = check_local_confluence(D)
print("confluent    :", report.ok, f"({report.triples_checked} triples)")

# coefficients stay exact
print("coefficient of x^2 in y*x:", (y * x).coefficient({"x": 2}) == Fraction(-1, 2))
