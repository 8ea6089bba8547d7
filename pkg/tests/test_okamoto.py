from fractions import Fraction as F

import pytest

from isolab.algebra import MultiPoly, RatFunc
from isolab.okamoto import (DegenerateTransform, OkamotoCoords, apply_word,
                            degenerate_prolongation, h_polynomial,
                            okamoto_apply, riccati_residual)
from isolab.painleve import (PVIParams, conjugate_momentum, pvi_params,
                             pvi_residual, thm5_solution)

x = MultiPoly.var("x")
c = MultiPoly.var("c")


class TestCoordinates:
    def test_round_trip(self):
        b = OkamotoCoords.of(-1, 1, 0, 1)
        th = b.theta()
        assert (th.beta1, th.beta2, th.beta3, th.beta_inf) == (F(0), F(-1),
                                                               F(1), F(0))
        assert OkamotoCoords.from_theta(th) == b

    def test_words(self):
        b = OkamotoCoords.of(1, 2, 3, 4)
        assert apply_word("w1w2w1", b) == OkamotoCoords.of(3, 2, 1, 4)
        assert apply_word("w3", b) == OkamotoCoords.of(1, 2, 4, 3)
        assert apply_word("w0", b) == OkamotoCoords.of(1, 2, -5, -4)
        assert apply_word("w4", b) == OkamotoCoords.of(-2, -1, 3, 4)
        with pytest.raises(ValueError):
            apply_word("w5", b)


class TestGeneratorsOnTrajectories:
    def setup_method(self):
        self.fam = thm5_solution(2)
        self.y = self.fam.y
        self.p = conjugate_momentum(self.y, self.fam.theta)
        self.b = OkamotoCoords.from_theta(self.fam.theta)

    def test_w3_is_identity(self):
        yw, pw, _ = okamoto_apply("w3", self.y, self.p, self.b)
        assert yw == self.y and pw == self.p

    def test_w1_fixes_y(self):
        yw, pw, _ = okamoto_apply("w1", self.y, self.p, self.b)
        assert yw == self.y
        assert pw == self.p + (self.b.b2 - self.b.b1) / (self.y - 1)

    def test_w4_fixes_y(self):
        yw, pw, _ = okamoto_apply("w4", self.y, self.p, self.b)
        assert yw == self.y
        assert pw == self.p - (self.b.b1 + self.b.b2) / self.y


class TestSandwichOnFormalVariables:
    def test_matches_prolongation_at_y0(self):
        Y, P = RatFunc.var("Y"), RatFunc.var("P")
        b = OkamotoCoords.of(-2, 2, F(1, 2), 3)   # b1 = -b2
        yw, pw, _ = okamoto_apply("w1w2w1", Y, P, b)
        # general closed form from the derivation
        assert yw == Y + (b.b3 - b.b1) * (Y - 1) / (-(Y - 1) * P + 2 * b.b1)
        y0 = yw.substitute("Y", F(0))
        p0 = pw.substitute("Y", F(0))
        ywf, pwf = degenerate_prolongation(RatFunc.var("P"), b.b1, b.b3)
        assert y0 == ywf and p0 == pwf

    def test_degenerate_route_detected(self):
        b = OkamotoCoords.of(-2, 2, F(1, 2), 3)
        p = RatFunc.var("P")
        with pytest.raises(DegenerateTransform):
            okamoto_apply("w1w2w1", RatFunc.zero(), p, b)


class TestWorkedPipeline:
    """The degenerate y = 0 solution maps to the printed one-parameter family."""

    def setup_method(self):
        self.b = OkamotoCoords.of(-1, 1, 0, 1)
        self.p = RatFunc(2 * x * (x - 1), x ** 2 + c)

    def test_source_parameters(self):
        params = pvi_params(self.b.theta())
        assert params == PVIParams(F(1, 2), F(0), F(2), F(-3, 2))
        assert params.beta == 0   # y = 0 is a valid degenerate solution

    def test_riccati(self):
        assert riccati_residual(self.p, self.b).is_zero()
        assert riccati_residual(RatFunc.zero(),
                                OkamotoCoords.of(1, 2, -1, 3)).is_zero()
        assert not riccati_residual(RatFunc.one(),
                                    OkamotoCoords.of(1, 2, 3, 4)).is_zero()

    def test_prolongation_and_momentum(self):
        yw, pw = degenerate_prolongation(self.p, self.b.b1, self.b.b3)
        assert yw == RatFunc((x ** 2 + c) * F(1, 2), x + c)
        assert pw == (self.p - 2) / (self.p - 1)

    def test_image_family_solves_pvi(self):
        yw, _ = degenerate_prolongation(self.p, self.b.b1, self.b.b3)
        bw = apply_word("w1w2w1", self.b)
        params = pvi_params(bw.theta())
        assert params == PVIParams(F(2), F(-1, 2), F(1, 2), F(0))
        assert pvi_residual(yw, params).is_zero()

    def test_zero_numerator_case(self):
        # b1 = b3 makes y_w identically zero
        p = RatFunc.from_poly(x) + 5
        yw, pw = degenerate_prolongation(p, F(1, 2), F(1, 2))
        assert yw.is_zero()

    def test_prolongation_pole_guard(self):
        with pytest.raises(ZeroDivisionError):
            degenerate_prolongation(RatFunc.const(-2), F(1), F(0))

    def test_image_momentum_consistency(self):
        # the image family's Hamiltonian momentum equals the prolongation's p_w
        yw, pw = degenerate_prolongation(self.p, self.b.b1, self.b.b3)
        bw = apply_word("w1w2w1", self.b)
        assert conjugate_momentum(yw, bw.theta()) == pw

    def test_second_prolongation_instance(self):
        # b = (-1, 1, 1, 0) obeys the same Riccati equation; its image solves
        # the transformed equation as well
        b = OkamotoCoords.of(-1, 1, 1, 0)
        assert riccati_residual(self.p, b).is_zero()
        yw, _ = degenerate_prolongation(self.p, b.b1, b.b3)
        params = pvi_params(apply_word("w1w2w1", b).theta())
        assert pvi_residual(yw, params).is_zero()

    def test_h_polynomial_invariance_under_w4(self):
        Y, P = RatFunc.var("Y"), RatFunc.var("P")
        b = OkamotoCoords.of(F(2, 3), F(1, 5), F(-5, 3), F(4, 3))
        bw = apply_word("w4", b)
        shifted = P - (b.b1 + b.b2) / Y
        assert h_polynomial(Y, P, b) == h_polynomial(Y, shifted, bw)
