"""The geometric side: graph subspaces U_f, slope fibers, weight spectra,
maximum scattered linear sets, and GL(2, q^6)-stabiliser orders.

Run:  python3 demos/04_scattered_linear_sets.py
"""

import warnings

from rankmetric import (code_of, family_u1, family_u2, family_u3,
                        family_u4, field_for, golden_roots, linear_set,
                        slopes, stabiliser_order)

F = field_for(3, 6)

# Pseudoregulus type: every slope fiber has q - 1 = 2 elements, so every
# point of the linear set has weight 1: maximum scattered.
U1 = family_u1(F, 1)
rep = linear_set(U1)
print("U1 (f = x^q):", rep.size, "points, weights", rep.weight_spectrum,
      "-> maximum scattered:", rep.is_maximum_scattered)

# The trinomial subspace at q = 3 is also maximum scattered ...
U4 = family_u4(F, golden_roots(F)[0])
print("U4 at q=3:   ", linear_set(U4).weight_spectrum)

# ... but at q = 4 the slopes collapse and weights >= 2 appear.
F4 = field_for(4, 6)
rep4 = linear_set(family_u4(F4, golden_roots(F4)[0]))
print("U4 at q=4:   ", rep4.size, "of", rep4.max_size, "points, weights",
      rep4.weight_spectrum)

# Scatteredness of U_f is exactly the MRD property of <x, f>.
print("\nbridge: code_of(U4) MRD:", code_of(U4).is_mrd().is_mrd,
      "== maximum scattered:", linear_set(U4).is_maximum_scattered)

# Stabiliser orders in GL(2, q^6) separate most of the known families:
# q^6-1 for U1, q^3-1 for U3, q^2-1 for both U2 and U4.
delta2 = next(d for d in range(2, F.Q) if F.norm(d, 1) not in (0, 1))
delta3 = next(d for d in range(2, F.Q) if F.norm(d, 3) not in (0, 1))
with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    U2, U3 = family_u2(F, 1, delta2), family_u3(F, 1, delta3)
for name, U in [("U1", U1), ("U2", U2), ("U3", U3), ("U4", U4)]:
    print(f"stabiliser of {name}: order {stabiliser_order(U).order}")
print("(U2 and U4 share the order q^2-1 = 8: this invariant alone does not"
      " separate them)")

# The raw slope map is available too.
s = slopes(U4)
print("\ndistinct slopes of U4:", len(s))
