"""Algebraic Garnier solutions and their numeric verification (M = 2).

A triangular 2x2 Schlesinger solution with poles (a_1, a_2, 0, 1) determines
P_2(z, a) whose roots u_1, u_2, with momenta v_j built from a sign vector,
solve the bivariate Garnier system. The b-layer is exact; the Hamilton
equations are checked by central differences with root tracking.
"""

import itertools
from fractions import Fraction as F

from isolab import (thm10_solution, thm11_family, residue_basis_vector,
                    u_roots, v_momenta, garnier_residual_m2, theta_from_eps)

print("polynomial solutions (n = 1; m must divide M + 2 = 4)")
for m in (2, 4):
    sol = thm10_solution(2, m, 1)
    print(f"\n  m = {m}: b =")
    for bi in sol.b:
        print(f"    {bi}")
    spec = sol.spec_for((1, 1, 1, 1))
    print(f"  Garnier parameters: theta = {tuple(str(t) for t in spec.theta)}, "
          f"theta_inf = {spec.theta_inf}")

sol = thm10_solution(2, 2, 1)
pm = sol.pm_coefficients()
print("\n  P_2(z, a) coefficients (ascending in z):")
for k, ck in enumerate(pm):
    print(f"    z^{k}: {ck}")

a_pt = (2.0, 3.5)
rr = u_roots(pm, a_pt)
v = v_momenta(rr.roots, sol.betas, (1, 1, 1, 1), a_pt)
print(f"\n  at a = {a_pt}: u = {[f'{z:.6f}' for z in rr.roots]}")
print(f"              v = {[f'{z:.6f}' for z in v]}")
worst = max(garnier_residual_m2(sol, a_pt, eps)
            for eps in itertools.product((1, -1), repeat=4))
print(f"  worst Hamilton-equation residual over all 16 sign vectors: {worst:.2e}")

print("\nrational families (n = -1, m = 1): a 2-parameter family")
for j in (1, 3):
    vec = residue_basis_vector(2, -1, j)
    print(f"  residue basis vector at pole {j}:")
    for i, bi in enumerate(vec, 1):
        print(f"    b_{i} = {bi}")
fam = thm11_family(2, -1, [F(2), F(-1)])
r = garnier_residual_m2(fam, (2.0, 3.5), (1, -1, -1, 1))
print(f"\n  c = (2, -1): residual at a = (2, 3.5), eps = (+,-,-,+): {r:.2e}")
spec = theta_from_eps(fam.betas, (1, -1, -1, 1), fam.beta_inf)
print(f"  solves G_2(theta = {tuple(str(t) for t in spec.theta)}, "
      f"theta_inf = {spec.theta_inf})")
