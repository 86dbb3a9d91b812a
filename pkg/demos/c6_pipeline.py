"""
Excluding one half set for a parabolic of C6
============================================

Levi pi1 = {1,2,4,5}, half-integral on {alpha1, alpha3, alpha5}.
"""

from cascade_kit.checker import check_half_set, count_check
from cascade_kit.diophantine import MonoidProblem, hilbert_basis, is_free_monoid, monomial
from cascade_kit.integral_pairs import compute_pi1_z
from cascade_kit.rootsys import build_root_system
from cascade_kit.weights import render_alpha, render_beta_alpha, typeC_parabolic_generators

rs = build_root_system("C", 6)
pi1, half = [1, 2, 4, 5], [1, 3, 5]

data = compute_pi1_z(rs, pi1, half)
print("pi^Z   :", [render_alpha(g) for g in data.pi_z.elements])
print("pi1^Z  :", [render_alpha(g) for g in data.pi1_z.elements])

# generator weights and their values on the coroots spanning h_Gamma
tc = typeC_parabolic_generators(rs, pi1, half)
print("h_Gamma: coroots", tc.coroot_indices)
for g in tc.generators:
    print(f"  {g.label}  {render_beta_alpha(rs, g):12s} {g.pairing_vector}")

cr = count_check(rs, pi1, half)
print(f"rl(q) = {cr.rl}, rl(q_Z) = {cr.rl_z}, dim h_Gamma = {cr.dim_h_gamma}")

problem = MonoidProblem(tuple(g.pairing_vector for g in tc.generators))
basis = hilbert_basis(problem)
labels = [g.label for g in tc.generators]
print("invariant monomials:", ", ".join(monomial(labels, b) for b in basis))
rep = is_free_monoid(problem, basis)
print("free:", rep.free, "relation:", rep.relation)

v = check_half_set(rs, pi1, half)
print("verdict:", v.status, v.stage)
