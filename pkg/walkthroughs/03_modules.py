# Modules: the simple L_n, Verma modules and the sl2 picture.
#
# L_n is (n+1)-dimensional; x, u act by zero and g by the identity, so it is
# pulled back from the sl2 module of highest weight n.  Verma modules are
# infinite dimensional and are truncated by total degree.

import numpy as np

from djd import double, reps, sl2
from djd.reps import InducedVector, VermaSpec

L2 = reps.build_Ln(2)
print("L_2 matrix of v:")
print(np.array([[str(c) for c in row] for row in L2.matrices["v"]]))
print("relations hold :", reps.validate_rep(L2).ok)
print("Burnside span  :", reps.burnside_span(L2), "of", L2.dim ** 2)
print("matches sl2    :", sl2.ln_pullback_check(2).ok)

# a reducible module for contrast
M = L2.direct_sum(reps.trivial_rep())
print("L_2 + L_0 simple:", reps.is_simple(M))

D = double.dj_presentation()
u, v, g = D.gen("u"), D.gen("v"), D.gen("g")

# in M_{a,c} with a != 1, u^i v^j bring z(i,j) back to the generator
spec = VermaSpec(2, 0, depth=10)
vec = InducedVector.basis((2, 2))
for E in (u, u, v, v):
    vec = reps.act_verma(E, spec, vec)
print("v^2 u^2 z(2,2) in M_{2,0}:", vec.format("z"))

# at a = 1, g - 1 is locally nilpotent
spec = VermaSpec(1, 3, depth=10)
vec = InducedVector.basis((3, 0))
steps = 0
while vec:
    vec = reps.act_verma(g - 1, spec, vec)
    steps += 1
print("(g-1)^k z(3,0) = 0 for k =", steps, "; recursive bound", reps.nilpotency_bound(3, 0))
