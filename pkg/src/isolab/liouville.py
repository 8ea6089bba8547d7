"""Numeric evaluation of the Liouvillian second solutions.

The hypergeometric equation with a degree-n polynomial solution b1P has a
second basic solution obtained by one quadrature,

    b1L(x) = b1P(x) * I(x),   I(x) = int x^{-c} (x-1)^{c-b+n-1} / b1P(x)^2 dx,

with b3L derived by the same first-order relation as in the polynomial case.
Everything here is numeric on the real interval (1, inf): adaptive
Gauss-Kronrod quadrature for I, finite differences for the ODE residual.
The base point of I is chosen per sample point on the same side of every
singularity (zeros of b1P are removable for the product b1P * I but not for
the bare integral).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.integrate import quad

from .algebra import to_rational
from .painleve import thm7_b1, coefficient_list

QUAD_TOL = 1e-10
FD1_STEP = 1e-5
FD2_STEP = 4e-4  # 5-point stencil: rounding ~eps|f|/h^2 and h^4 truncation both < 1e-7


@dataclass
class LiouvillianSample:
    x: float
    b1L: float
    b3L: float
    wronskian_rel_err: float
    ode_residual: float


@dataclass
class LiouvillianReport:
    n: int
    b: Fraction
    c: Fraction
    samples: list

    def max_wronskian_err(self) -> float:
        return max(s.wronskian_rel_err for s in self.samples)

    def max_ode_residual(self) -> float:
        return max(abs(s.ode_residual) for s in self.samples)


class LiouvillianFamily:
    """Callable b1L/b3L for given (n, b, c), built on the polynomial b1P."""

    def __init__(self, n: int, b, c, quad_tol: float = QUAD_TOL):
        self.n = n
        self.b = to_rational(b)
        self.c = to_rational(c)
        self.quad_tol = quad_tol
        self.b1p_poly = thm7_b1(n, self.b, self.c)
        coeffs = coefficient_list(self.b1p_poly)
        self._b1p = np.array([float(v) for v in reversed(coeffs)])
        self._b1p_d = np.polyder(self._b1p)
        self.exp_x = float(-self.c)
        self.exp_xm1 = float(self.c - self.b + n - 1)
        roots = np.roots(self._b1p) if len(self._b1p) > 1 else np.array([])
        self._real_roots = sorted(float(r.real) for r in roots
                                  if abs(r.imag) < 1e-9 and r.real > 1.0)

    # -- pieces -------------------------------------------------------------

    def b1p(self, x: float) -> float:
        return float(np.polyval(self._b1p, x))

    def integrand(self, x: float) -> float:
        """x^{-c} (x-1)^{c-b+n-1} / b1P(x)^2; this is the Wronskian over b1P^2."""
        return (x ** self.exp_x) * ((x - 1.0) ** self.exp_xm1) / self.b1p(x) ** 2

    def base_point(self, x: float) -> float:
        """A quadrature base on the same side of every singularity as x."""
        sings = [1.0] + self._real_roots
        left = max((s for s in sings if s < x), default=1.0)
        right = min((s for s in sings if s > x), default=None)
        lo = x - 0.45 * (x - left)
        if right is not None:
            lo = max(lo, x - 0.45 * (right - x))
        return lo

    def integral(self, x: float, base: float = None) -> float:
        if abs(self.b1p(x)) < 1e-9:
            raise ValueError(f"sample point {x} is a zero of the polynomial solution")
        base = self.base_point(x) if base is None else base
        val, err = quad(self.integrand, base, x,
                        epsabs=self.quad_tol, epsrel=self.quad_tol, limit=400)
        if not np.isfinite(val) or err > max(1e-6, 100 * self.quad_tol * abs(val)):
            raise ArithmeticError(f"quadrature did not converge at x = {x}")
        return val

    def _stencil(self, x: float, h: float, width: int = 1):
        """b1L on the grid x + k*h, |k| <= width, with one long quadrature
        plus tiny increments, so the dominant quadrature error cancels in
        finite differences."""
        iv = {0: self.integral(x)}
        for k in range(1, width + 1):
            iv[k] = iv[k - 1] + quad(self.integrand, x + (k - 1) * h, x + k * h,
                                     epsabs=1e-14, epsrel=1e-13, limit=60)[0]
            iv[-k] = iv[-(k - 1)] - quad(self.integrand, x - k * h, x - (k - 1) * h,
                                         epsabs=1e-14, epsrel=1e-13, limit=60)[0]
        return [self.b1p(x + k * h) * iv[k] for k in range(-width, width + 1)]

    def b1l(self, x: float, base: float = None) -> float:
        return self.b1p(x) * self.integral(x, base)

    def b3l(self, x: float, h: float = FD1_STEP) -> float:
        """b3L = -(x b1L' + b b1L)/(1 + b - c), derivative by central FD."""
        fm, f0, fp = self._stencil(x, h)
        d = (fp - fm) / (2 * h)
        denom = float(1 + self.b - self.c)
        return -(x * d + float(self.b) * f0) / denom

    def _derivatives_5pt(self, x: float, h: float):
        f2m, fm, f0, fp, f2p = self._stencil(x, h, width=2)
        d1 = (-f2p + 8 * fp - 8 * fm + f2m) / (12 * h)
        d2 = (-f2p + 16 * fp - 30 * f0 + 16 * fm - f2m) / (12 * h * h)
        return f0, d1, d2

    # -- checks -------------------------------------------------------------

    def wronskian_rel_err(self, x: float, h: float = FD1_STEP) -> float:
        """|b1P b1L' - b1P' b1L - x^{-c}(x-1)^{c-b+n-1}| / |target|."""
        fm, f0, fp = self._stencil(x, h)
        d = (fp - fm) / (2 * h)
        w = self.b1p(x) * d - float(np.polyval(self._b1p_d, x)) * f0
        target = (x ** self.exp_x) * ((x - 1.0) ** self.exp_xm1)
        return abs(w - target) / abs(target)

    def ode_residual(self, x: float, h: float = FD2_STEP) -> float:
        """Central finite-difference residual of
        b'' + ((b-n+1)x - c)/(x(x-1)) b' - n b /(x(x-1)) b1L = 0."""
        f0, d1, d2 = self._derivatives_5pt(x, h)
        xx = x * (x - 1.0)
        lin = (float(self.b - self.n + 1) * x - float(self.c)) / xx
        const = -float(self.n * self.b) / xx
        return d2 + lin * d1 + const * f0


def liouvillian_eval(n: int, b, c, sample_points, quad_tol: float = QUAD_TOL,
                     h: float = FD1_STEP) -> LiouvillianReport:
    """Evaluate b1L, b3L at the sample points and report the Wronskian and
    ODE residual checks. Points must avoid zeros of b1P and x = 0, 1."""
    fam = LiouvillianFamily(n, b, c, quad_tol=quad_tol)
    samples = []
    for x in sample_points:
        x = float(x)
        if x <= 1.0:
            raise ValueError("sample points must lie in (1, inf)")
        samples.append(LiouvillianSample(
            x=x,
            b1L=fam.b1l(x),
            b3L=fam.b3l(x, h=h),
            wronskian_rel_err=fam.wronskian_rel_err(x, h=h),
            ode_residual=fam.ode_residual(x),
        ))
    return LiouvillianReport(n=n, b=fam.b, c=fam.c, samples=samples)
