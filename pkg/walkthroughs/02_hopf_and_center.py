# Hopf structure and the center.
#
# The coproduct is an algebra map into the tensor square, the antipode an
# anti-algebra map.  Both are defined on letters and extended; the check that
# they respect every defining relation is what makes them well defined.

from djd import double, weyl

D = double.dj_presentation()
x, y, g, zeta, u, v = D.gens()

print("Delta(v)    =", double.coproduct(v))
print("Delta(y*x)  =", double.coproduct(y * x))
print("S(v)        =", double.antipode(v))
print("S(S(y))     =", double.antipode(double.antipode(y)))
print("g^-1 y g    =", D.gen("g^-1") * y * g)

# q = ux + 2(1+g) is normal; z = q^2 g^-1 is central
dist = double.distinguished()
print("q           =", dist.q)
print("z central   :", double.is_central(dist.z))
print("q central   :", double.is_central(dist.q))

# theta and omega are central too, tied together by z*theta = omega^2
print("theta terms :", len(dist.theta))
print("omega terms :", len(dist.omega))
print("z theta = omega^2:", double.center_relation_holds())

# in the localized Weyl algebra these become monomials in z and z'
for name in ("z", "s", "omega", "theta"):
    print(f"phi({name})".ljust(12), "=", weyl.phi(getattr(dist, name)))

# low-degree monomials z^i theta^k omega^e (e <= 1) are independent
ranks = double.center_independence(4)
print("standard basis rank:", ranks.standard_rank, "of", ranks.standard_count)
