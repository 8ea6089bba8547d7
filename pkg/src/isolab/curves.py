"""Superelliptic curves w^m = (z-a_1)...(z-a_N): invariants and local charts.

The charts implement the two parametrizations the period/residue machinery
needs: at the s = gcd(m, N) points above z = infinity and at the finite
ramification points (a_nu, 0). Fractional powers only ever enter through
binomial series of (1 + u)^(e/m) in the principal branch; root-of-unity
prefactors at infinity are carried as exact phase tags (k, s) meaning
exp(2*pi*i*k/s) and are only materialized as complex numbers in numeric mode.

residue_series_oracle computes residues purely by truncated-series
multiplication; it is the independent cross-check for the closed-form residue
expressions used by the Schlesinger solution builders.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
import cmath

from .algebra import MultiPoly, FactoredFrac, binom


class TruncationError(Exception):
    """A required series coefficient lies beyond the computed range."""


def _czero(c) -> bool:
    if hasattr(c, "is_zero"):
        return c.is_zero()
    return c == 0


class TruncatedSeries:
    """Laurent series sum_{k>=v} c_{k} t^k known for exponents < order."""

    __slots__ = ("leading", "coeffs", "order", "phase")

    def __init__(self, leading: int, coeffs, order: int, phase=(0, 1)):
        while coeffs and _czero(coeffs[0]):
            coeffs = coeffs[1:]
            leading += 1
        self.leading = leading
        self.coeffs = list(coeffs[:max(0, order - leading)])
        self.order = order
        self.phase = _phase_norm(phase)

    @classmethod
    def zero(cls, order):
        return cls(order, [], order)

    @classmethod
    def monomial(cls, coeff, exponent, order, phase=(0, 1)):
        return cls(exponent, [coeff], order, phase)

    def coefficient(self, k: int):
        """Coefficient of t^k; raises TruncationError past the known range."""
        if k >= self.order:
            raise TruncationError(
                f"coefficient of t^{k} requested, series known below t^{self.order}")
        if k < self.leading or k - self.leading >= len(self.coeffs):
            return 0
        return self.coeffs[k - self.leading]

    def __add__(self, other):
        if self.phase != other.phase:
            raise ValueError("cannot add series with different phase tags")
        order = min(self.order, other.order)
        lead = min(self.leading, other.leading)
        out = [0] * max(0, order - lead)
        for src in (self, other):
            for i, c in enumerate(src.coeffs):
                k = src.leading + i - lead
                if 0 <= k < len(out):
                    out[k] = out[k] + c
        return TruncatedSeries(lead, out, order, self.phase)

    def __neg__(self):
        return TruncatedSeries(self.leading, [-c for c in self.coeffs],
                               self.order, self.phase)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            order = min(self.leading + other.order, other.leading + self.order)
            lead = self.leading + other.leading
            out = [0] * max(0, order - lead)
            for i, ci in enumerate(self.coeffs):
                if _czero(ci):
                    continue
                for j, cj in enumerate(other.coeffs):
                    k = i + j
                    if k >= len(out):
                        break
                    if _czero(cj):
                        continue
                    out[k] = out[k] + ci * cj
            return TruncatedSeries(lead, out, order,
                                   _phase_add(self.phase, other.phase))
        # scalar
        return TruncatedSeries(self.leading, [c * other for c in self.coeffs],
                               self.order, self.phase)

    __rmul__ = __mul__

    def shift(self, k: int):
        """Multiply by t^k."""
        return TruncatedSeries(self.leading + k, self.coeffs,
                               self.order + k, self.phase)

    def derivative(self):
        out = []
        for i, c in enumerate(self.coeffs):
            k = self.leading + i
            out.append(c * k)
        return TruncatedSeries(self.leading - 1, out, self.order - 1, self.phase)

    def residue(self):
        return self.coefficient(-1)

    def is_zero(self) -> bool:
        return all(_czero(c) for c in self.coeffs)

    def materialize(self):
        """Fold the phase tag into complex coefficients (numeric mode only)."""
        num, den = self.phase
        if num % den == 0:
            return self
        w = cmath.exp(2j * cmath.pi * num / den)
        return TruncatedSeries(self.leading, [complex(c) * w for c in self.coeffs],
                               self.order, (0, 1))

    def to_text(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if _czero(c):
                continue
            parts.append(f"({c})*t^{self.leading + i}")
        body = " + ".join(parts) if parts else "0"
        tag = ""
        if self.phase != (0, 1):
            tag = f" * e(2*pi*i*{self.phase[0]}/{self.phase[1]})"
        return f"{body}{tag} + O(t^{self.order})"

    def __repr__(self):
        return f"TruncatedSeries({self.to_text()})"


def _phase_norm(p):
    num, den = p
    num %= den
    if num == 0:
        return (0, 1)
    g = gcd(num, den)
    return (num // g, den // g)


def _phase_add(p, q):
    if p == (0, 1):
        return q
    if q == (0, 1):
        return p
    den = p[1] * q[1] // gcd(p[1], q[1])
    num = p[0] * (den // p[1]) + q[0] * (den // q[1])
    return _phase_norm((num, den))


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CurveInvariants:
    s: int
    N1: int
    m1: int
    genus: int
    infinity_points: int
    finite_poles: int


def curve_invariants(m: int, N: int) -> CurveInvariants:
    """s = gcd(m,N), N1, m1, genus and pole counts of w^m = prod(z - a_i)."""
    if m < 1 or N < 2:
        raise ValueError("need m >= 1 and N >= 2")
    s = gcd(m, N)
    genus2 = (m - 1) * (N - 1) - s + 1
    return CurveInvariants(s=s, N1=N // s, m1=m // s, genus=genus2 // 2,
                           infinity_points=s, finite_poles=N)


def cycle_count(m: int, N: int, n: int) -> int:
    """Number of independent integration contours for the sign of n."""
    inv = curve_invariants(m, N)
    if n > 0:
        return (m - 1) * (N - 1)
    return 2 * inv.genus + N - 1


class SuperellipticCurve:
    """Curve data (m, branch points a_1..a_N, differential exponent n).

    Branch points may be exact rationals, complex numbers, or variable names
    (strings); any variable makes the curve symbolic. In symbolic mode the
    charts produce exact MultiPoly/FactoredFrac coefficients.
    """

    def __init__(self, m: int, branch_points, n: int):
        if m < 1:
            raise ValueError("m must be >= 1")
        if n == 0:
            raise ValueError("n must be nonzero")
        if gcd(abs(n), m) != 1:
            raise ValueError("n and m must be coprime")
        if n > 0 and m == 1:
            raise ValueError("m = 1 with n > 0 gives constant diagonal matrices")
        pts = tuple(branch_points)
        if len(pts) < 2:
            raise ValueError("need at least two branch points")
        self.m = m
        self.n = n
        self.branch_points = pts
        self.symbolic = any(isinstance(a, (str, MultiPoly)) for a in pts)
        if not self.symbolic:
            vals = [complex(a) for a in pts]
            for i in range(len(vals)):
                for j in range(i + 1, len(vals)):
                    if abs(vals[i] - vals[j]) < 1e-12:
                        raise ValueError(f"branch points {i+1} and {j+1} coincide")
        self.numeric_exact = not self.symbolic and all(
            isinstance(a, (int, Fraction)) for a in pts)

    @property
    def N(self) -> int:
        return len(self.branch_points)

    def invariants(self) -> CurveInvariants:
        return curve_invariants(self.m, self.N)

    def cycle_count(self) -> int:
        return cycle_count(self.m, self.N, self.n)

    def point(self, i: int):
        """Branch point a_i (1-based) as MultiPoly (exact) or complex."""
        a = self.branch_points[i - 1]
        if isinstance(a, MultiPoly):
            return a
        if isinstance(a, str):
            return MultiPoly.var(a)
        if isinstance(a, (int, Fraction)):
            return MultiPoly.const(a) if (self.symbolic or self.numeric_exact) else complex(a)
        return complex(a)

    def point_numeric(self, i: int) -> complex:
        a = self.branch_points[i - 1]
        if isinstance(a, (str, MultiPoly)):
            raise ValueError("symbolic branch point has no numeric value")
        return complex(a)

    def poly_at(self, z: complex) -> complex:
        out = 1.0 + 0j
        for i in range(1, self.N + 1):
            out *= z - self.point_numeric(i)
        return out

    def __repr__(self):
        return f"SuperellipticCurve(m={self.m}, n={self.n}, a={self.branch_points})"


# ---------------------------------------------------------------------------
# local charts


def _binomial_factor_series(base_const, exponent: Fraction, step: int,
                            order: int, exact: bool):
    """(1 + base_const * t^step)^exponent as a truncated series.

    base_const is an exact MultiPoly/Fraction or a complex number.
    """
    kmax = (order - 1) // step if order > 0 else 0
    coeffs = []
    for k in range(0, kmax + 1):
        b = binom(exponent, k)
        if exact:
            c = MultiPoly.const(b)
            for _ in range(k):
                c = c * base_const
        else:
            c = complex(b) * base_const ** k
        coeffs.append(c)
        if k < kmax:
            coeffs.extend([0] * (step - 1))
    return TruncatedSeries(0, coeffs, order)


class InfinityChart:
    """Chart at the k-th point over z = infinity: z = 1/t^{m1}."""

    def __init__(self, curve: SuperellipticCurve, k: int, order: int):
        inv = curve.invariants()
        if not (1 <= k <= inv.s):
            raise ValueError(f"infinity point index must be in 1..{inv.s}")
        if order < 1:
            raise ValueError("order must be >= 1")
        if order > 4000:
            raise TruncationError("truncation order beyond the internal cap")
        self.curve = curve
        self.k = k
        self.order = order
        self.inv = inv
        self.exact = curve.symbolic or curve.numeric_exact

    def z_series(self) -> TruncatedSeries:
        one = MultiPoly.const(1) if self.exact else 1.0 + 0j
        return TruncatedSeries.monomial(one, -self.inv.m1,
                                        self.order - self.inv.m1)

    def dz_series(self) -> TruncatedSeries:
        m1 = self.inv.m1
        c = Fraction(-m1) if self.exact else complex(-m1)
        one = MultiPoly.const(c) if self.exact else c
        return TruncatedSeries.monomial(one, -m1 - 1, self.order - m1 - 1)

    def w_power(self, e: int) -> TruncatedSeries:
        """Series of w^e; phase tag e^{2 pi i (k-1) e / s} carried separately."""
        inv = self.inv
        rel = max(self.order + e * inv.N1, 1)  # fixed relative depth
        out = TruncatedSeries.monomial(
            MultiPoly.const(1) if self.exact else 1.0 + 0j, 0, rel)
        for i in range(1, self.curve.N + 1):
            a = self.curve.point(i)
            base = -a if self.exact else -complex(a)
            out = out * _binomial_factor_series(
                base, Fraction(e, self.curve.m), inv.m1, rel, self.exact)
        out = out.shift(-e * inv.N1)
        phase = ((self.k - 1) * e, inv.s)
        return TruncatedSeries(out.leading, out.coeffs, out.order, phase)

    def one_over_z_minus(self, i: int) -> TruncatedSeries:
        """1/(z - a_i) = t^{m1} * sum_q (a_i t^{m1})^q."""
        m1 = self.inv.m1
        a = self.curve.point(i)
        rel = self.order
        coeffs = []
        apow = MultiPoly.const(1) if self.exact else 1.0 + 0j
        q = 0
        while q * m1 < rel:
            coeffs.append(apow)
            apow = apow * a
            if (q + 1) * m1 < rel:
                coeffs.extend([0] * (m1 - 1))
            q += 1
        return TruncatedSeries(m1, coeffs, rel + m1)

    def omega_series(self, i: int, j: int) -> TruncatedSeries:
        """Omega_i^{(j)} = w^{jn} dz / (z - a_i), as a series in dt."""
        e = j * self.curve.n
        return self.w_power(e) * self.dz_series() * self.one_over_z_minus(i)


class BranchChart:
    """Chart at the finite ramification point (a_nu, 0): z = a_nu + t^m."""

    def __init__(self, curve: SuperellipticCurve, nu: int, order: int):
        if not (1 <= nu <= curve.N):
            raise ValueError("branch point index out of range")
        if order < 1:
            raise ValueError("order must be >= 1")
        if order > 4000:
            raise TruncationError("truncation order beyond the internal cap")
        self.curve = curve
        self.nu = nu
        self.order = order
        self.exact = curve.symbolic or curve.numeric_exact

    def gap(self, h: int):
        """a_nu - a_h, exact or complex."""
        anu = self.curve.point(self.nu)
        ah = self.curve.point(h)
        return anu - ah

    def z_series(self) -> TruncatedSeries:
        m = self.curve.m
        one = MultiPoly.const(1) if self.exact else 1.0 + 0j
        anu = self.curve.point(self.nu)
        coeffs = [anu * one if self.exact else complex(anu)] + [0] * (m - 1) + [one]
        return TruncatedSeries(0, coeffs, max(self.order, m + 1))

    def dz_series(self) -> TruncatedSeries:
        m = self.curve.m
        c = MultiPoly.const(m) if self.exact else complex(m)
        return TruncatedSeries.monomial(c, m - 1, self.order + m - 1)

    def w_power(self, e: int) -> TruncatedSeries:
        """Series of w^e = t^e prod_{h != nu} (a_nu - a_h + t^m)^{e/m}.

        Exact only when m divides e (integer powers of the factors);
        otherwise requires numeric branch points and uses principal branches.
        """
        m = self.curve.m
        rel = self.order + abs(e) + m
        exact = self.exact and e % m == 0
        if self.curve.symbolic and e % m != 0:
            raise ValueError(
                "fractional w-power at a branch point needs numeric branch points")
        out = TruncatedSeries.monomial(
            MultiPoly.const(1) if exact else 1.0 + 0j, 0, rel)
        for h in range(1, self.curve.N + 1):
            if h == self.nu:
                continue
            if exact:
                gap = self.gap(h)
                inv_gap = FactoredFrac.quotient(MultiPoly.const(1), gap, 1)
                lead = (FactoredFrac.from_poly(gap) ** (e // m) if e >= 0
                        else FactoredFrac.quotient(MultiPoly.const(1), gap, -e // m))
                fac = _factor_series_exact(inv_gap, Fraction(e, m), m, rel)
            else:
                gap = complex(self.curve.point_numeric(self.nu)
                              - self.curve.point_numeric(h))
                lead = gap ** (e / m)
                fac = _binomial_factor_series(1.0 / gap, Fraction(e, m), m, rel, False)
            out = out * fac * TruncatedSeries.monomial(lead, 0, rel)
        return out.shift(e)

    def one_over_z_minus(self, i: int) -> TruncatedSeries:
        """1/(z - a_i) around (a_nu, 0)."""
        m = self.curve.m
        rel = self.order + m
        if i == self.nu:
            one = MultiPoly.const(1) if self.exact else 1.0 + 0j
            return TruncatedSeries.monomial(one, -m, rel - m)
        if self.exact:
            gap = self.gap(i)
            inv_gap = FactoredFrac.quotient(MultiPoly.const(1), gap, 1)
            ser = _factor_series_exact(inv_gap, Fraction(-1), m, rel)
            return ser * TruncatedSeries.monomial(inv_gap, 0, rel)
        gap = complex(self.curve.point_numeric(self.nu) - self.curve.point_numeric(i))
        ser = _binomial_factor_series(1.0 / gap, Fraction(-1), m, rel, False)
        return ser * TruncatedSeries.monomial(1.0 / gap, 0, rel)

    def omega_series(self, i: int, j: int) -> TruncatedSeries:
        e = j * self.curve.n
        return self.w_power(e) * self.dz_series() * self.one_over_z_minus(i)


def _factor_series_exact(base_frac, exponent: Fraction, step: int, order: int):
    """(1 + base_frac * t^step)^exponent with FactoredFrac coefficients."""
    kmax = (order - 1) // step if order > 0 else 0
    coeffs = []
    for k in range(kmax + 1):
        c = FactoredFrac.const(binom(exponent, k))
        for _ in range(k):
            c = c * base_frac
        coeffs.append(c)
        if k < kmax:
            coeffs.extend([0] * (step - 1))
    return TruncatedSeries(0, coeffs, order)


# ---------------------------------------------------------------------------
# public chart API


def expand_at_infinity(curve: SuperellipticCurve, k: int, order: int):
    """(z(t), w(t)) at the k-th infinity point, truncated to `order` terms
    past the leading exponent of w."""
    inv = curve.invariants()
    chart = InfinityChart(curve, k, order)
    z = chart.z_series()
    w = chart.w_power(1)
    w = TruncatedSeries(w.leading, w.coeffs[:order], w.leading + order, w.phase)
    if not chart.exact:
        w = w.materialize()
    return z, w


def expand_at_branch_point(curve: SuperellipticCurve, nu: int, order: int):
    """(z(t), w(t)) at (a_nu, 0), truncated to `order` terms past leading.

    w itself involves m-th roots of the branch point gaps, so this expansion
    requires numeric branch points; integer powers of w (as used by the
    residue oracle) stay exact in symbolic mode.
    """
    if curve.symbolic:
        raise ValueError("w-expansion at a branch point needs numeric branch points")
    numeric = SuperellipticCurve(curve.m, [complex(a) for a in curve.branch_points],
                                 curve.n)
    chart = BranchChart(numeric, nu, order)
    z = chart.z_series()
    w = chart.w_power(1)
    w = TruncatedSeries(w.leading, w.coeffs[:order], w.leading + order, w.phase)
    return z, w


def residue_series_oracle(curve: SuperellipticCurve, i: int, j: int, pole: int,
                          order: int = None):
    """Residue of Omega_i^{(j)} = w^{jn} dz/(z - a_i) at the given pole,
    computed purely from truncated local series.

    For n > 0 the pole is the infinity-point index (1..s) and the value is a
    polynomial in the branch points (returned as (value, phase) where phase
    tags the exact root-of-unity factor e^{2 pi i jn(k-1)/s}). For n < 0 the
    pole is a branch-point index and the value is a rational function.
    Truncation starts at the default prescription and doubles on detected
    insufficiency.
    """
    n = curve.n
    inv = curve.invariants()
    if n > 0:
        need = j * n * inv.N1 + 2 * inv.m1
    else:
        need = j * abs(n) + 2 * curve.m
    order = order or need

    for attempt in range(6):
        try:
            if n > 0:
                chart = InfinityChart(curve, pole, order)
                om = chart.omega_series(i, j)
            else:
                if (j * abs(n)) % curve.m != 0:
                    return _oracle_zero(curve), (0, 1)
                chart = BranchChart(curve, pole, order)
                om = chart.omega_series(i, j)
            val = om.residue()
            if isinstance(val, int) and val == 0:
                val = _oracle_zero(curve)
            return val, om.phase
        except TruncationError:
            order *= 2
    raise TruncationError("residue oracle failed to converge on an order")


def _oracle_zero(curve):
    return MultiPoly.zero() if (curve.symbolic or curve.numeric_exact) else 0j
