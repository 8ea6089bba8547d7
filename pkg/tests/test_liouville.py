from fractions import Fraction as F

import pytest

from isolab.liouville import LiouvillianFamily, liouvillian_eval


class TestIntegrand:
    def test_case1_matches_display(self):
        # x^{-c}(x-1)^{c-b+n-1}/b1P^2 = 9 (x-1)^{2/3} / (x^{1/3}(x+1)^2)
        fam = LiouvillianFamily(1, F(-1, 3), F(1, 3))
        for xv in (2.0, 3.0, 5.5):
            display = (xv - 1) ** (2 / 3) / (xv ** (1 / 3) * (xv + 1) ** 2)
            assert abs(fam.integrand(xv) / display - 9) < 1e-12

    def test_case2_matches_display(self):
        # 81 * x^{1/3}(x-1)^{4/3}/(x^2-4x+1)^2 (b1P carries 1/9 here)
        fam = LiouvillianFamily(2, F(-2, 3), F(-1, 3))
        for xv in (2.0, 5.0):
            display = xv ** (1 / 3) * (xv - 1) ** (4 / 3) / (xv ** 2 - 4 * xv + 1) ** 2
            assert abs(fam.integrand(xv) / display - 81) < 1e-10


class TestChecks:
    def test_case1(self):
        rep = liouvillian_eval(1, F(-1, 3), F(1, 3), [2, 3, 5])
        assert rep.max_wronskian_err() < 1e-8
        assert rep.max_ode_residual() < 1e-6

    def test_case2(self):
        rep = liouvillian_eval(2, F(-2, 3), F(-1, 3), [2, 3, 5])
        assert rep.max_wronskian_err() < 1e-8
        assert rep.max_ode_residual() < 1e-6

    def test_generic_parameters(self):
        rep = liouvillian_eval(3, F(1, 4), F(5, 7), [2.5, 4.0])
        assert rep.max_wronskian_err() < 1e-8
        assert rep.max_ode_residual() < 1e-6

    def test_base_points_avoid_singularities(self):
        fam = LiouvillianFamily(2, F(-2, 3), F(-1, 3))
        # b1P has a real root at 2 + sqrt(3) ~ 3.73 between samples 3 and 5
        assert fam.base_point(5.0) > 3.74
        assert fam.base_point(3.0) < 3.73


class TestGuards:
    def test_sample_in_unit_interval_rejected(self):
        with pytest.raises(ValueError):
            liouvillian_eval(1, F(-1, 3), F(1, 3), [0.5])

    def test_sample_at_polynomial_zero_rejected(self):
        import math
        root = 2 + math.sqrt(3)   # zero of b1P for the (2, -2/3, -1/3) case
        with pytest.raises(ValueError):
            liouvillian_eval(2, F(-2, 3), F(-1, 3), [root])
