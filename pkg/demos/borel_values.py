"""
h on the simple roots for Frobenius Borel subalgebras
=====================================================

For a Frobenius Borel the Kostant cascade is a basis, so h(beta) = 1 on
the cascade fixes h. Below we print h(alpha_i) type by type.
"""

from cascade_kit.biparabolic import make_biparabolic, subset_cascade
from cascade_kit.frobenius import borel_determined_values, frobenius_h
from cascade_kit.rootsys import build_root_system
from cascade_kit.weights import render_alpha

for letter, rank in [("B", 3), ("B", 4), ("C", 4), ("D", 4), ("G2", None), ("F4", None), ("E7", None)]:
    rs = build_root_system(letter, rank)
    fh = frobenius_h(make_biparabolic(rs, [], range(1, rs.rank + 1)))
    print(f"{rs.label:4s}", " ".join(f"{int(v):3d}" for v in fh.values))

# E6 has a short cascade, so h is only partly pinned down by it.
# alpha4 is the last cascade element, hence h(alpha4) = 1.
e6 = build_root_system("E6")
for beta in subset_cascade(e6, range(1, 7)).ordered_roots:
    print("  cascade:", render_alpha(beta))
bv = borel_determined_values(e6)
print("E6   fixed values:", {i: int(v) for i, v in bv.determined.items()})
print("     orbit sums  :", {k: int(v) for k, v in bv.orbit_sums.items()})
