"""Tour of the finite-field layer: building F_{q^n}, arithmetic, subfields.

Run:  python3 demos/01_field_arithmetic.py
"""

import numpy as np

from rankmetric import FieldSpec, build_field, field_for

# The canonical route: F_{3^6} with the built-in modulus for (p, d) = (3, 6).
F = field_for(3, 6)
print(F)
print("modulus:", list(F.spec.modulus), "generator:", F.generator,
      "=", F.element_str(F.generator))

# Elements are plain integers: base-3 digits = coefficients over F_3.
a, b = 100, 613
print(f"\n{a} + {b} =", F.add(a, b))
print(f"{a} * {b} =", F.mul(a, b))
print(f"{a}^-1    =", F.inv(a), " check:", F.mul(a, F.inv(a)))
print(f"{a}^(q^2) =", F.frobenius(a, 2))

# Trace and norm down to F_q, and the subfield lattice.
print("\ntrace of a over F_3:", F.trace(a, 1))
print("norm of a over F_3: ", F.norm(a, 1))
for s in (1, 2, 3):
    sub = F.enumerate_subfield(s)
    print(f"F_(3^{s}) inside F_729: {len(sub)} elements, first few {list(sub[:5])}")

# User-supplied moduli are validated; reducible ones are rejected.
F9 = build_field(FieldSpec(3, 1, 2, (1, 0, 1)))       # F_3[t]/(t^2 + 1)
print("\nF_9 with modulus t^2+1: t * t =", F9.mul(3, 3), "(= -1)")
try:
    FieldSpec(3, 1, 2, (1, 2, 1))                      # (t + 1)^2
except ValueError as exc:
    print("reducible modulus rejected:", exc)

# Power equations x^m = a via discrete logs.
sols = F.solve_power(13, 1)
print("\nx^13 = 1 has", len(sols), "solutions:", sols[:6], "...")

# Everything has a vectorised twin for bulk scans.
xs = np.arange(1, F.Q, dtype=np.int64)
cubes = F.vpow(xs, 3)
print("number of distinct cubes in F_729^*:", len(np.unique(cubes)))
