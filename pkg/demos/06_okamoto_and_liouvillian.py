"""Two more solution mechanisms: birational maps and one quadrature.

First, the degenerate solution y = 0 of PVI(1/2, 0, 2, -3/2) carries a whole
Riccati family of momenta; pushing it through the birational transformation
w1 w2 w1 lands on the printed one-parameter rational family of
PVI(2, -1/2, 1/2, 0). Second, the hypergeometric equations with a polynomial
solution also have a Liouvillian second solution b1P * int(W / b1P^2); the
package checks it numerically through the Wronskian identity and the ODE
residual.
"""

from fractions import Fraction as F

from isolab import (MultiPoly, RatFunc, OkamotoCoords, apply_word,
                    degenerate_prolongation, riccati_residual, pvi_params,
                    pvi_residual, liouvillian_eval)

x = MultiPoly.var("x")
c = MultiPoly.var("c")

print("birational route to a one-parameter family")
b = OkamotoCoords.of(-1, 1, 0, 1)
print(f"  start: b = {b.as_tuple()}, PVI{pvi_params(b.theta())}")
p = RatFunc(2 * x * (x - 1), x ** 2 + c)
print(f"  Riccati momentum family of y = 0: p = {p}")
print(f"  Riccati residual (symbolic in c): {riccati_residual(p, b)}")
yw, pw = degenerate_prolongation(p, b.b1, b.b3)
bw = apply_word("w1w2w1", b)
print(f"  image: y_w = {yw}")
print(f"         p_w = {pw}")
image_params = pvi_params(bw.theta())
print(f"  image equation PVI{image_params}")
print(f"  exact PVI residual of the whole family: {pvi_residual(yw, image_params)}")

print("\nLiouvillian second solutions, checked by quadrature")
for (n, bb, cc) in [(1, F(-1, 3), F(1, 3)), (2, F(-2, 3), F(-1, 3))]:
    rep = liouvillian_eval(n, bb, cc, [2, 3, 5])
    print(f"  (n, b, c) = ({n}, {bb}, {cc}):")
    for s in rep.samples:
        print(f"    x = {s.x}: b1L = {s.b1L:+.6f}, b3L = {s.b3L:+.6f}, "
              f"wronskian err {s.wronskian_rel_err:.1e}, "
              f"ODE residual {s.ode_residual:+.1e}")
