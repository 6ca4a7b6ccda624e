"""q-polynomials as F_q-linear maps: evaluation, composition, adjoints,
rank and kernels, and solving f(x) = b.

Run:  python3 demos/02_linearized_polynomials.py
"""

from rankmetric import LinPoly, field_for

F = field_for(3, 6)
x = LinPoly.identity(F)
xq = LinPoly.monomial(F, 1)

# x^q - x vanishes exactly on F_q.
f = xq - x
print("f = x^q - x")
print("f(1) =", f(1), "  kernel basis:", f.kernel(), "  rank:", f.rank())

# Composition works modulo x^(q^6) - x: Frobenius exponents add mod 6.
print("\nx^(q^5) o x^(q^3) =", LinPoly.monomial(F, 5) @ LinPoly.monomial(F, 3))

# The adjoint is the transpose for the trace form Tr(x*y):
g = LinPoly(F, [7, 1, 0, 300])
ga = g.adjoint()
xv, yv = 19, 500
print("\nTr(x * g^(y)) =", F.trace(F.mul(xv, ga(yv))),
      "= Tr(g(x) * y) =", F.trace(F.mul(g(xv), yv)))
print("adjoint is an involution:", ga.adjoint() == g)

# Ranks, kernels and affine equations through the matrix view.
print("\ng as a 6x6 matrix over F_3:")
print(g.to_matrix())
print("rank:", g.rank(), " kernel dim:", len(g.kernel()))
b = 42
sols = g.solve_affine(b)
print(f"solutions of g(x) = {b}:", sols[:5], f"({len(sols)} total)")

# Compositional inverses exist exactly for full-rank maps.
h = LinPoly(F, [3, 1])
hi = h.inverse()
print("\nh invertible:", hi is not None, " h o h^-1 == x:", h @ hi == x)
