import cmath
import math
from fractions import Fraction as F

import numpy as np
import pytest

from isolab.curves import SuperellipticCurve, residue_series_oracle
from isolab.periods import (ArcSegment, BranchTracker, LineSegment, PathSpec,
                            build_cycle_basis, clearance_radius, continue_w,
                            double_loop, infinity_loop, integrate_omega,
                            isomonodromy_fd_check, period_matrix, puncture_loop,
                            rank_check)

CURVE_23 = SuperellipticCurve(2, [0.0, 1.0, 2.0 + 1.0j], 1)
CURVE_33 = SuperellipticCurve(3, [0.0, 1.0, 2.0 + 1.0j], 1)


class TestContinuation:
    def test_single_loop_monodromy(self):
        path = PathSpec((ArcSegment(0j, 0.3, 0.0, 2 * math.pi),), 0)
        samples = continue_w(CURVE_23, path, steps=64)
        w0, w1 = samples[0][1], samples[-1][1]
        assert abs(w1 + w0) < 1e-10 * abs(w0)

    def test_full_loop_monodromy(self):
        path = PathSpec((ArcSegment(0j, 20.0, 0.0, 2 * math.pi),), 0)
        samples = continue_w(CURVE_23, path, steps=256)
        w0, w1 = samples[0][1], samples[-1][1]
        assert abs(w1 - w0 * cmath.exp(2j * math.pi * 3 / 2)) < 1e-9 * abs(w0)

    def test_empty_loop_returns_exactly(self):
        path = PathSpec((ArcSegment(5 + 5j, 0.5, 0.0, 2 * math.pi),), 0)
        samples = continue_w(CURVE_23, path, steps=64)
        assert abs(samples[-1][1] - samples[0][1]) < 1e-12 * abs(samples[0][1])

    def test_monodromy_composition(self):
        # consecutive counterclockwise loops around a_1 then a_2 compose:
        # total phase e^{2 pi i * 2/m}
        tr = BranchTracker(CURVE_33, -2.0 + 0j, 0)
        w_start = tr.w
        for center in (0j, 1 + 0j):
            radius = abs(-2.0 - center)
            base_ang = cmath.phase(-2.0 - center)
            for k in range(1, 65):
                ang = base_ang + 2 * math.pi * k / 64
                tr.advance(center + radius * cmath.exp(1j * ang))
            tr.advance(-2.0 + 0j)
        assert abs(tr.w - w_start * cmath.exp(2j * math.pi * 2 / 3)) < 1e-8


class TestCycles:
    def test_counts(self):
        assert len(build_cycle_basis(CURVE_23)) == 2
        assert len(build_cycle_basis(CURVE_33)) == 4
        neg = SuperellipticCurve(1, [0.0, 1.0, 2.0 + 1.0j], -1)
        assert len(build_cycle_basis(neg)) == 2
        neg2 = SuperellipticCurve(2, [0.0, 1.0, 2.0 + 1.0j], -1)
        assert len(build_cycle_basis(neg2)) == 4

    def test_cycles_are_closed(self):
        for cyc in build_cycle_basis(CURVE_33):
            assert cyc.is_closed()

    def test_clearance_check(self):
        seg = LineSegment(-1 + 0j, 3 + 0j)  # runs straight through 0 and 1
        path = PathSpec((seg,), 0)
        with pytest.raises(ValueError):
            path.check_clearance(CURVE_23, clearance_radius(CURVE_23))
        for cyc in build_cycle_basis(CURVE_23):
            cyc.check_clearance(CURVE_23, 1e-6)


class TestIntegration:
    def test_infinity_loop_residue_bridge(self):
        val, _ = residue_series_oracle(CURVE_33, 1, 1, 1)
        per = integrate_omega(CURVE_33, 1, 1, infinity_loop(CURVE_33, 1))
        assert abs(per - (-2j * math.pi * val)) < 1e-8 * abs(val)

    def test_puncture_loop_residue_bridge(self):
        cneg = SuperellipticCurve(2, [0.0, 1.0, 2.0 + 1.0j], -1)
        val, _ = residue_series_oracle(cneg, 2, 2, 1)
        per = integrate_omega(cneg, 2, 2, puncture_loop(cneg, 1))
        assert abs(per - 2j * math.pi * val) < 1e-8 * abs(val)

    def test_zero_sum_over_i(self):
        loop = infinity_loop(CURVE_33, 1)
        tot = sum(integrate_omega(CURVE_33, i, 1, loop) for i in (1, 2, 3))
        assert abs(tot) < 1e-9

    def test_cycle_enclosing_no_singularity(self):
        path = PathSpec((ArcSegment(5 + 5j, 0.5, 0.0, 2 * math.pi),), 0)
        assert abs(integrate_omega(CURVE_23, 1, 1, path)) < 1e-10


class TestPeriodMatrix:
    def test_rank_n_minus_one_coprime(self):
        B = period_matrix(CURVE_23, 1, build_cycle_basis(CURVE_23))
        assert rank_check(B) == 2
        assert np.abs(B.entries.sum(axis=0)).max() < 1e-9

    def test_rank_n_minus_one_case_b(self):
        B = period_matrix(CURVE_33, 1, build_cycle_basis(CURVE_33))
        assert rank_check(B) == 2

    def test_rank_negative_n(self):
        cneg = SuperellipticCurve(1, [0.0, 1.0, 2.0 + 1.0j], -1)
        B = period_matrix(cneg, 1, build_cycle_basis(cneg))
        assert rank_check(B) == 2

    def test_exact_differential_columns_vanish(self):
        B = period_matrix(CURVE_33, 3, build_cycle_basis(CURVE_33)[:2])
        assert np.abs(B.entries).max() < 1e-8

    def test_zero_matrix_rank(self):
        assert rank_check(np.zeros((3, 4), dtype=complex)) == 0

    def test_rank_stable_under_recombination(self):
        B = period_matrix(CURVE_33, 1, build_cycle_basis(CURVE_33))
        rng = np.random.default_rng(11)
        for _ in range(3):
            T = rng.integers(-3, 4, size=(B.cols, B.cols)).astype(complex)
            while abs(np.linalg.det(T)) < 0.5:
                T = rng.integers(-3, 4, size=(B.cols, B.cols)).astype(complex)
            assert rank_check(B.entries @ T) == 2

    def test_residue_columns_match_closed_forms(self):
        # small loops around (0,0) and (1,0) for m=1, n=-1 reproduce the
        # printed rational solutions at the numeric x
        xval = 2.0 + 1.0j
        cneg = SuperellipticCurve(1, [0.0, 1.0, xval], -1)
        twopii = 2j * math.pi
        per = integrate_omega(cneg, 1, 1, puncture_loop(cneg, 1))
        want = twopii * (1 + xval) / xval ** 2          # b1 = (1+x)/x^2
        assert abs(per - want) < 1e-8 * abs(want)
        per2 = integrate_omega(cneg, 2, 1, puncture_loop(cneg, 2))
        want2 = twopii * (xval - 2) / (1 - xval) ** 2   # tb2 = (x-2)/(1-x)^2
        assert abs(per2 - want2) < 1e-8 * abs(want2)


class TestPainleveBridge:
    def test_period_entries_reproduce_pvi_solution(self):
        # periods of w^n dz/(z - a_i) over a residue cycle at numeric x give
        # the same y = x b1/(b1 + (1-x) b3) as the exact polynomial family
        from isolab.painleve import thm5_solution
        xval = 2.0 + 1.0j
        curve = SuperellipticCurve(3, [0.0, 1.0, xval], 1)
        loop = infinity_loop(curve, 1)
        b = [integrate_omega(curve, i, 1, loop) for i in (1, 2, 3)]
        y_num = xval * b[0] / (b[0] + (1 - xval) * b[2])
        y_exact = thm5_solution(1).y.evaluate({"x": xval})
        assert abs(y_num - complex(y_exact)) < 1e-9


class TestIsomonodromy:
    def test_double_loop_flow(self):
        cyc = build_cycle_basis(CURVE_23)[0]
        err = isomonodromy_fd_check(CURVE_23, 1, 1, cyc, vary=3, h=1e-4)
        assert err < 1e-6

    def test_residue_cycle_matches_symbolic_derivative(self):
        # d b_1 / d a_3 for the polynomial solution via periods around P_1
        xv = 2.0 + 1.0j
        h = 1e-4
        vals = {}
        for delta in (h, -h):
            c = SuperellipticCurve(3, [0.0, 1.0, xv + delta], 1)
            vals[delta] = integrate_omega(c, 1, 1, infinity_loop(
                SuperellipticCurve(3, [0.0, 1.0, xv], 1), 1))
        fd = (vals[h] - vals[-h]) / (2 * h)
        # b1 = -2 pi i (x+1)/3 along this cycle, so d/dx = -2 pi i /3
        want = -2j * math.pi / 3
        assert abs(fd - want) < 1e-6

    def test_exact_class_both_sides_zero(self):
        cyc = build_cycle_basis(CURVE_33)[0]
        err = isomonodromy_fd_check(CURVE_33, 1, 3, cyc, vary=2, h=1e-4)
        assert err < 1e-8
