"""Numeric periods of w^{jn} dz/(z - a_i) on superelliptic curves.

Paths live in the z-plane as line/arc segments with a chosen starting sheet;
the w-branch is tracked by nearest-root continuation with adaptive
sub-stepping (steps are halved whenever the two closest m-th roots come
within a factor-2 ambiguity margin). Cycles are concrete contours:

* double loops: around a_i counterclockwise then a_{i+1} clockwise, closed on
  the curve for every starting sheet,
* puncture loops: an m-fold circle around a branch point (one chart loop),
* infinity loops: an m1-fold large circle, the starting sheet selecting which
  of the s points above z = infinity is encircled.

Orientation bookkeeping: a puncture loop equals +2*pi*i times the residue in
the local chart; an infinity loop (counterclockwise in z) equals -2*pi*i
times the chart residue, because z = 1/t^{m1} reverses orientation.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .curves import SuperellipticCurve

DEFAULT_TOL = 1e-10
RANK_TOL = 1e-8
CLEARANCE_FACTOR = 0.05


class ContinuationError(RuntimeError):
    """Branch tracking became ambiguous (step too coarse near a branch point)."""


# ---------------------------------------------------------------------------
# paths


@dataclass(frozen=True)
class LineSegment:
    z0: complex
    z1: complex

    def at(self, t: float) -> complex:
        return self.z0 + (self.z1 - self.z0) * t

    def velocity(self, t: float) -> complex:
        return self.z1 - self.z0


@dataclass(frozen=True)
class ArcSegment:
    center: complex
    radius: float
    angle0: float
    angle1: float  # may span many turns

    def at(self, t: float) -> complex:
        ang = self.angle0 + (self.angle1 - self.angle0) * t
        return self.center + self.radius * cmath.exp(1j * ang)

    def velocity(self, t: float) -> complex:
        ang = self.angle0 + (self.angle1 - self.angle0) * t
        return (self.angle1 - self.angle0) * 1j * self.radius * cmath.exp(1j * ang)


@dataclass(frozen=True)
class PathSpec:
    segments: tuple
    start_branch: int = 0
    label: str = ""

    def start(self) -> complex:
        return self.segments[0].at(0.0)

    def end(self) -> complex:
        return self.segments[-1].at(1.0)

    def is_closed(self, tol: float = 1e-9) -> bool:
        return abs(self.start() - self.end()) < tol

    def check_clearance(self, curve: SuperellipticCurve, radius: float):
        """Every segment must keep `radius` distance from branch points it
        does not deliberately encircle."""
        for seg in self.segments:
            for i in range(1, curve.N + 1):
                a = curve.point_numeric(i)
                if isinstance(seg, ArcSegment) and abs(seg.center - a) < 1e-12:
                    continue  # the circle around a itself
                d = _segment_distance(seg, a)
                if d < radius:
                    raise ValueError(
                        f"path comes within {d:.3g} of branch point {i} "
                        f"(clearance {radius:.3g})")


def _segment_distance(seg, a: complex) -> float:
    if isinstance(seg, LineSegment):
        dz = seg.z1 - seg.z0
        L2 = abs(dz) ** 2
        if L2 == 0:
            return abs(seg.z0 - a)
        rel = a - seg.z0
        t = max(0.0, min(1.0, (rel.real * dz.real + rel.imag * dz.imag) / L2))
        return abs(seg.at(t) - a)
    d_center = abs(a - seg.center)
    return abs(d_center - seg.radius)


# ---------------------------------------------------------------------------
# branch tracking


def mth_roots(value: complex, m: int):
    """The m complex m-th roots, index ell = principal * e^{2 pi i ell/m}."""
    if value == 0:
        return [0j] * m
    r = abs(value) ** (1.0 / m)
    base = cmath.phase(value) / m
    return [r * cmath.exp(1j * (base + 2 * math.pi * ell / m))
            for ell in range(m)]


class BranchTracker:
    """Carries (z, w) with w^m = P(z) along a path by nearest-root steps."""

    def __init__(self, curve: SuperellipticCurve, z0: complex, branch: int):
        self.curve = curve
        self.z = complex(z0)
        roots = mth_roots(curve.poly_at(self.z), curve.m)
        self.w = roots[branch % curve.m]

    def state(self):
        return (self.z, self.w)

    def restore(self, state):
        self.z, self.w = state

    def advance(self, z1: complex, depth: int = 0):
        """Move to z1, halving the step while root selection is ambiguous."""
        if depth > 48:
            raise ContinuationError(
                f"branch tracking failed between {self.z} and {z1}")
        m = self.curve.m
        if m == 1:
            self.z = z1
            self.w = self.curve.poly_at(z1)
            return self.w
        roots = mth_roots(self.curve.poly_at(z1), m)
        dists = sorted(range(m), key=lambda k: abs(roots[k] - self.w))
        d0 = abs(roots[dists[0]] - self.w)
        d1 = abs(roots[dists[1]] - self.w) if m > 1 else math.inf
        if d0 * 2.0 > d1:
            mid = 0.5 * (self.z + z1)
            self.advance(mid, depth + 1)
            return self.advance(z1, depth + 1)
        self.z = z1
        self.w = roots[dists[0]]
        return self.w


def continue_w(curve: SuperellipticCurve, path: PathSpec, steps: int = 256):
    """Sample w along the path (nearest-root continuation); returns the list
    of (z, w) including both endpoints."""
    tracker = BranchTracker(curve, path.start(), path.start_branch)
    out = [tracker.state()]
    for seg in path.segments:
        # scale sampling with arc length in turns
        n = steps
        if isinstance(seg, ArcSegment):
            turns = abs(seg.angle1 - seg.angle0) / (2 * math.pi)
            n = max(steps, int(steps * turns))
        for k in range(1, n + 1):
            tracker.advance(seg.at(k / n))
            out.append(tracker.state())
    return out


# ---------------------------------------------------------------------------
# cycle construction


def _min_separation(curve) -> float:
    pts = [curve.point_numeric(i) for i in range(1, curve.N + 1)]
    return min(abs(p - q) for i, p in enumerate(pts)
               for q in pts[i + 1:])


def clearance_radius(curve) -> float:
    return CLEARANCE_FACTOR * _min_separation(curve)


def puncture_loop(curve: SuperellipticCurve, nu: int,
                  radius: float = None) -> PathSpec:
    """Closed loop on the curve around the ramification point (a_nu, 0):
    the z-circle traversed m times, counterclockwise."""
    a = curve.point_numeric(nu)
    if radius is None:
        dist = min(abs(a - curve.point_numeric(j))
                   for j in range(1, curve.N + 1) if j != nu)
        radius = 0.25 * dist
    arc = ArcSegment(a, radius, 0.0, 2 * math.pi * curve.m)
    return PathSpec((arc,), 0, label=f"puncture:{nu}")


def infinity_loop(curve: SuperellipticCurve, k: int,
                  radius: float = None) -> PathSpec:
    """Closed loop around the k-th point over z = infinity: an m1-fold large
    circle whose starting sheet selects the point."""
    inv = curve.invariants()
    if radius is None:
        radius = 10 * max(abs(curve.point_numeric(i))
                          for i in range(1, curve.N + 1)) + 10
    arc = ArcSegment(0j, radius, 0.0, 2 * math.pi * inv.m1)
    branch = ((k - 1) * inv.m1) % curve.m
    return PathSpec((arc,), branch, label=f"infinity:{k}")


def double_loop(curve: SuperellipticCurve, i: int, j: int, shift: int,
                radius_factor: float = 0.25) -> PathSpec:
    """Pochhammer-style cycle: circle a_i counterclockwise, then a_j
    clockwise, connected through the midpoint, starting on sheet `shift`.
    The net monodromy is trivial, so the path closes on the curve."""
    ai = curve.point_numeric(i)
    aj = curve.point_numeric(j)
    sep = abs(ai - aj)
    r = radius_factor * sep
    u = (aj - ai) / sep  # unit vector i -> j
    base = 0.5 * (ai + aj)
    pi_ = math.pi
    ang_i = cmath.phase(base - ai)
    ang_j = cmath.phase(base - aj)
    segs = (
        LineSegment(base, ai + r * u),
        ArcSegment(ai, r, ang_i, ang_i + 2 * pi_),
        LineSegment(ai + r * u, base),
        LineSegment(base, aj - r * u),
        ArcSegment(aj, r, ang_j, ang_j - 2 * pi_),
        LineSegment(aj - r * u, base),
    )
    return PathSpec(segs, shift, label=f"double:{i},{j};{shift}")


def build_cycle_basis(curve: SuperellipticCurve):
    """A concrete generating family of integration cycles.

    n > 0: (m-1)(N-1) double loops over consecutive branch-point pairs with
    sheet shifts. n < 0: the same double loops plus N - s puncture loops,
    2g + N - 1 cycles in total.
    """
    order = sorted(range(1, curve.N + 1),
                   key=lambda i: (curve.point_numeric(i).real,
                                  curve.point_numeric(i).imag))
    cycles = []
    for idx in range(len(order) - 1):
        for shift in range(curve.m - 1):
            cycles.append(double_loop(curve, order[idx], order[idx + 1], shift))
    if curve.n < 0:
        s = curve.invariants().s
        for nu in order[:curve.N - s]:
            cycles.append(puncture_loop(curve, nu))
    return cycles


# ---------------------------------------------------------------------------
# quadrature along paths


_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(16)


def integrate_omega(curve: SuperellipticCurve, i: int, j: int, cycle: PathSpec,
                    tol: float = DEFAULT_TOL) -> complex:
    """Integral of w^{jn}/(z - a_i) dz along the cycle, adaptive panels."""
    e = j * curve.n
    ai = curve.point_numeric(i)
    tracker = BranchTracker(curve, cycle.start(), cycle.start_branch)
    total = 0j

    def integrand(z, w):
        return w ** e / (z - ai)

    def panel(seg, t0, t1, depth):
        nonlocal total
        start_state = tracker.state()
        val1 = _gl_panel(seg, t0, t1, tracker, integrand)
        end_state = tracker.state()
        tracker.restore(start_state)
        tm = 0.5 * (t0 + t1)
        val2 = _gl_panel(seg, t0, tm, tracker, integrand)
        val2 += _gl_panel(seg, tm, t1, tracker, integrand)
        if abs(val1 - val2) <= max(tol, tol * abs(val2)) or depth >= 24:
            if depth >= 24 and abs(val1 - val2) > 1e-6 * max(1.0, abs(val2)):
                raise ArithmeticError("quadrature failed to converge on a panel")
            total += val2
            return
        tracker.restore(start_state)
        panel(seg, t0, tm, depth + 1)
        panel(seg, tm, t1, depth + 1)

    for seg in cycle.segments:
        npanels = 4
        if isinstance(seg, ArcSegment):
            turns = abs(seg.angle1 - seg.angle0) / (2 * math.pi)
            npanels = max(4, int(8 * turns))
        for k in range(npanels):
            panel(seg, k / npanels, (k + 1) / npanels, 0)
    return total


def _gl_panel(seg, t0, t1, tracker, integrand):
    half = 0.5 * (t1 - t0)
    mid = 0.5 * (t0 + t1)
    val = 0j
    for node, weight in zip(_GL_NODES, _GL_WEIGHTS):
        t = mid + half * node
        z = seg.at(t)
        w = tracker.advance(z)
        val += weight * integrand(z, w) * seg.velocity(t)
    tracker.advance(seg.at(t1))
    return val * half


# ---------------------------------------------------------------------------
# period matrices


@dataclass
class PeriodMatrix:
    rows: int
    cols: int
    entries: np.ndarray
    cycles: list = field(default_factory=list)

    def to_csv_rows(self):
        out = [["i", "cycle", "label", "re", "im"]]
        for i in range(self.rows):
            for k in range(self.cols):
                label = self.cycles[k].label if self.cycles else ""
                v = self.entries[i, k]
                out.append([i + 1, k + 1, label, repr(v.real), repr(v.imag)])
        return out


def continuation_trace_rows(curve: SuperellipticCurve, path: PathSpec,
                            steps: int = 256):
    """CSV rows (header + samples) of a w-continuation along the path,
    for debugging branch tracking."""
    rows = [["index", "z_re", "z_im", "w_re", "w_im"]]
    for k, (z, w) in enumerate(continue_w(curve, path, steps)):
        rows.append([k, repr(z.real), repr(z.imag), repr(w.real), repr(w.imag)])
    return rows


def period_matrix(curve: SuperellipticCurve, j: int, cycles,
                  tol: float = DEFAULT_TOL) -> PeriodMatrix:
    """B[i][k] = integral of Omega_i^{(j)} over cycle k."""
    ents = np.zeros((curve.N, len(cycles)), dtype=complex)
    for k, cyc in enumerate(cycles):
        for i in range(1, curve.N + 1):
            ents[i - 1, k] = integrate_omega(curve, i, j, cyc, tol)
    return PeriodMatrix(curve.N, len(cycles), ents, list(cycles))


def rank_check(B, rank_tol: float = RANK_TOL) -> int:
    """Numerical rank: singular values above rank_tol * largest."""
    ents = B.entries if isinstance(B, PeriodMatrix) else np.asarray(B)
    if ents.size == 0:
        return 0
    sv = np.linalg.svd(ents, compute_uv=False)
    if sv[0] == 0:
        return 0
    return int(np.sum(sv > rank_tol * sv[0]))


def isomonodromy_fd_check(curve: SuperellipticCurve, i: int, j: int,
                          cycle: PathSpec, vary: int, h: float = 1e-4,
                          tol: float = DEFAULT_TOL) -> float:
    """Central-difference check of the reduced flow on a fixed cycle:

        d b_i / d a_k  =  -(j n / m) (b_i - b_k)/(a_i - a_k),   k != i,

    moving only the branch point a_k and keeping the z-plane contour fixed.
    Returns |lhs - rhs|."""
    if vary == i:
        raise ValueError("vary must differ from i")
    pts = list(curve.branch_points)

    def shifted(delta):
        moved = list(pts)
        moved[vary - 1] = complex(moved[vary - 1]) + delta
        return SuperellipticCurve(curve.m, moved, curve.n)

    bp = integrate_omega(shifted(+h), i, j, cycle, tol)
    bm = integrate_omega(shifted(-h), i, j, cycle, tol)
    lhs = (bp - bm) / (2 * h)
    bi = integrate_omega(curve, i, j, cycle, tol)
    bk = integrate_omega(curve, vary, j, cycle, tol)
    gap = curve.point_numeric(i) - curve.point_numeric(vary)
    rhs = -(j * curve.n / curve.m) * (bi - bk) / gap
    return abs(lhs - rhs)
