"""
A small parabolic of C3 that really has adapted pairs
=====================================================

pi1 = {1, 2}. First solve h on two candidate supports, then run the
exclusion stages on the only reduced half set.
"""

from cascade_kit.checker import check_half_set, integrality_sweep
from cascade_kit.frobenius import SupportSet, solve_h_on_support
from cascade_kit.rootsys import build_root_system
from cascade_kit.weights import render_beta_alpha, typeC_parabolic_generators

rs = build_root_system("C", 3)
span = (rs.alpha(1), rs.alpha(2))

# h(a1+a2+a3) = 1 and h(2a2+a3) = 1 inside span(a1^, a2^): inconsistent
print(solve_h_on_support(rs, SupportSet(((1, 1, 1), (0, 2, 1)), span)).kind)

# with -alpha2 instead the solution is unique and integral
sol = solve_h_on_support(rs, SupportSet(((1, 1, 1), (0, 1, 0)), span))
print(sol.kind, "h =", " + ".join(f"{c}a{i}^" for i, c in enumerate(sol.h.coroot_coeffs, 1) if c))

# the three half sets inside pi1 collapse to one class
rep = integrality_sweep(rs, [1, 2])
print("classes:", rep.classes)

for g in typeC_parabolic_generators(rs, [1, 2], [1]).generators:
    print(f"  {g.label}  {render_beta_alpha(rs, g):8s} {g.pairing_vector}")

v = check_half_set(rs, [1, 2], [1])
print(v.stage)
for p in v.witness["partitions"]:
    print("  Q =", p["Q"], "->", p["element"], p["reason"])
print("certified:", rep.certified)
