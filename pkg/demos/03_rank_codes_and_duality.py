"""Rank-metric codes: minimum distance, the MRD property, Delsarte duals,
adjoints and idealisers, shown on the Gabidulin code and the trinomial code.

Run:  python3 demos/03_rank_codes_and_duality.py
"""

from rankmetric import (LinPoly, RankCode, field_for, golden_roots,
                        trinomial_map)

F = field_for(3, 6)
x = LinPoly.identity(F)

# The classical benchmark: <x, x^q> is MRD for every q.
gab = RankCode.from_semilinear(F, [x, LinPoly.monomial(F, 1)])
print("Gabidulin-type code:", gab)
print("  min distance:", gab.min_distance(), " MRD:", gab.is_mrd().is_mrd)

# The trinomial code <x, x^q + x^(q^3) + c x^(q^5)>, c^2 + c = 1.
c = golden_roots(F)[0]
C = RankCode.from_semilinear(F, [x, trinomial_map(F, c)])
print("\ntrinomial code:", C, "with c =", c)
d, w = C.min_rank_word()
print("  min distance:", d, " MRD:", C.is_mrd().is_mrd)

# Idealisers are equivalence invariants: here F_{q^6} on the left and
# F_{q^2} on the right.
L, R = C.left_idealiser(), C.right_idealiser()
print("  left idealiser:  dim", L.dimension, " field of order", L.field_order)
print("  right idealiser: dim", R.dimension, " field of order", R.field_order)

# The Delsarte dual has complementary dimension 36 - 12 = 24 and distance 3;
# duality preserves the MRD property and is an involution.
D = C.delsarte_dual()
print("\ndual code:", D)
print("  min distance:", D.min_distance(), " MRD:", D.is_mrd().is_mrd,
      " dual(dual) == C:", D.delsarte_dual() == C)

# The adjoint code has the same distance, and swaps the idealisers.
A = C.adjoint_code()
print("\nadjoint code min distance:", A.min_distance())
print("  L(C) == R(adjoint):",
      (L.span_rref(C) == A.right_idealiser().span_rref(A)).all())

# At q = 2 the same trinomial stops being MRD; a low-rank word witnesses it.
F2 = field_for(2, 6)
C2 = RankCode.from_semilinear(
    F2, [LinPoly.identity(F2), trinomial_map(F2, golden_roots(F2)[0])])
res = C2.is_mrd()
print("\nsame code at q = 2: MRD:", res.is_mrd,
      " witness rank:", res.witness.rank(), "->", res.witness)
