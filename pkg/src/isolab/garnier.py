"""Algebraic Garnier solutions from triangular 2x2 Schlesinger data.

A traceless triangular solution with M + 2 poles (a_1..a_M, 0, 1) determines

    P_M(z, a) = prod_i (z - a_i) * sum_i b_i(a)/(z - a_i),

a degree-M polynomial in z whose roots u_1..u_M, together with the momenta
v_j built from a sign vector eps, solve the M-variable Garnier system. The
b_i layer is exact (polynomials/rational functions of a); the (u, v) layer
and the Hamiltonian verification are numeric, since the roots are algebraic
in a. The M = 2 Hamiltonians are implemented explicitly; for larger M only
the exact layers are built and checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import numpy as np

from .algebra import MultiPoly, RatFunc, binom, to_rational
from .schlesinger import (HypothesisError, build_rational_solution,
                          default_variables, _check)

__all__ = ["GarnierSpec", "GarnierAlgebraicSolution", "HypothesisError",
           "pm_polynomial", "thm10_solution", "thm11_family",
           "residue_basis_vector", "u_roots", "v_momenta", "theta_from_eps",
           "garnier_hamiltonians_m2", "garnier_residual_m2"]


@dataclass(frozen=True)
class GarnierSpec:
    """Garnier system label G_M(theta_1..theta_{M+2}, theta_inf)."""
    M: int
    theta: tuple
    theta_inf: Fraction
    eps: tuple

    def __post_init__(self):
        if len(self.theta) != self.M + 2 or len(self.eps) != self.M + 2:
            raise ValueError("need M + 2 thetas and signs")
        if any(e not in (1, -1) for e in self.eps):
            raise ValueError("eps entries must be +-1")


def theta_from_eps(betas, eps, beta_inf) -> GarnierSpec:
    """theta_i = 2 eps_i beta_i, theta_inf = 2 beta_inf - 1."""
    betas = [to_rational(b) for b in betas]
    eps = tuple(int(e) for e in eps)
    theta = tuple(2 * e * b for e, b in zip(eps, betas))
    return GarnierSpec(M=len(betas) - 2, theta=theta,
                       theta_inf=2 * to_rational(beta_inf) - 1, eps=eps)


@dataclass
class GarnierAlgebraicSolution:
    """Exact b-vector plus the data needed for numeric verification."""
    M: int
    b: list                    # M + 2 entries, RatFunc in a_1..a_M
    betas: list                # the M + 2 eigenvalues beta_i
    beta_inf: Fraction
    provenance: dict = field(default_factory=dict)

    @property
    def variables(self):
        return default_variables(self.M)

    def pole(self, i: int):
        """Pole position a_i as a RatFunc: a_1..a_M symbolic, then 0, 1."""
        if i <= self.M:
            return RatFunc.var(f"a{i}")
        return RatFunc.const(0 if i == self.M + 1 else 1)

    def pole_numeric(self, i: int, a) -> complex:
        if i <= self.M:
            return complex(a[i - 1])
        return 0j if i == self.M + 1 else 1 + 0j

    def sum_b(self) -> RatFunc:
        out = RatFunc.zero()
        for bi in self.b:
            out = out + bi
        return out

    def pm_coefficients(self) -> list:
        return pm_polynomial(self.b, [self.pole(i) for i in range(1, self.M + 3)])

    def spec_for(self, eps) -> GarnierSpec:
        return theta_from_eps(self.betas, eps, self.beta_inf)

    def to_json_dict(self) -> dict:
        return {
            "schema_version": 1,
            "kind": "garnier-algebraic",
            "provenance": {k: str(v) for k, v in self.provenance.items()},
            "M": self.M,
            "betas": [str(b) for b in self.betas],
            "beta_inf": str(self.beta_inf),
            "b": [bi.to_text() for bi in self.b],
            "pm_coefficients": [c.to_text() for c in self.pm_coefficients()],
        }


def pm_polynomial(b, poles) -> list:
    """Coefficients (ascending in z) of prod_i (z - a_i) sum_i b_i/(z - a_i).

    Requires sum_i b_i = 0 exactly, otherwise the degree-(M+1) term leaks."""
    b = [RatFunc._coerce(bi) for bi in b]
    poles = [RatFunc._coerce(p) for p in poles]
    total = RatFunc.zero()
    for bi in b:
        total = total + bi
    if not total.is_zero():
        raise ValueError("sum of b_i must vanish identically")
    npoles = len(poles)
    coeffs = [RatFunc.zero()] * npoles  # degree <= npoles - 1, top cancels
    for i, bi in enumerate(b):
        if bi.is_zero():
            continue
        # prod_{j != i} (z - a_j), expanded in z
        prod = [RatFunc.one()]
        for j, aj in enumerate(poles):
            if j == i:
                continue
            new = [RatFunc.zero()] * (len(prod) + 1)
            for k, ck in enumerate(prod):
                new[k + 1] = new[k + 1] + ck
                new[k] = new[k] - ck * aj
            prod = new
        for k, ck in enumerate(prod):
            coeffs[k] = coeffs[k] + bi * ck
    assert coeffs[-1].is_zero()
    return coeffs[:-1]


# ---------------------------------------------------------------------------
# builders


def thm10_solution(M: int, m: int, n: int) -> GarnierAlgebraicSolution:
    """Polynomial b-vector for n > 0, m > 1 dividing M + 2 (residues at the
    m points over z = infinity); beta_i = n/(2m)."""
    _check(n > 0, "hypothesis n > 0 fails")
    _check(m > 1, "hypothesis m > 1 fails")
    _check(gcd(n, m) == 1, "hypothesis gcd(n, m) = 1 fails")
    _check((M + 2) % m == 0, f"hypothesis fails: m = {m} does not divide M + 2 = {M + 2}")
    M1 = (M + 2) // m
    q = Fraction(n, m)
    variables = default_variables(M)
    r = M1 * n
    avals = [MultiPoly.var(v) for v in variables] + [MultiPoly.zero(),
                                                     MultiPoly.const(1)]
    # shared product over the M + 2 factors, graded by total index
    acc = [MultiPoly.const(1)] + [MultiPoly.zero()] * r
    for av in avals:
        fac = []
        apow = MultiPoly.const(1)
        for k in range(r + 1):
            fac.append(apow * binom(q, k))
            apow = apow * av
        acc = _convolve(acc, fac, r)
    b = []
    for i in range(M + 2):
        gi = []
        apow = MultiPoly.const(1)
        for qq in range(r + 1):
            gi.append(apow * ((-1) ** qq))
            apow = apow * avals[i]
        out = _convolve(acc, gi, r)[r]
        b.append(RatFunc.from_poly(out))
    betas = [Fraction(n, 2 * m)] * (M + 2)
    beta_inf = -Fraction((M + 2) * n, 2 * m)
    return GarnierAlgebraicSolution(M=M, b=b, betas=betas, beta_inf=beta_inf,
                                    provenance={"theorem": "garnier-polynomial",
                                                "M": M, "m": m, "n": n})


def _convolve(a, fac, r):
    out = [MultiPoly.zero()] * (r + 1)
    for i, ai in enumerate(a):
        if ai.is_zero():
            continue
        for j in range(0, r + 1 - i):
            fj = fac[j]
            if not fj.is_zero():
                out[i + j] = out[i + j] + ai * fj
    return out


def residue_basis_vector(M: int, n: int, j: int) -> list:
    """The M + 2 residues of the rational family at the pole (a_j, 0) for
    m = 1, n < 0, with a_{M+1} = 0, a_{M+2} = 1 substituted."""
    _check(n < 0, "hypothesis n < 0 fails")
    _check(1 <= j <= M + 1, "basis pole index out of range")
    N = M + 2
    names = default_variables(N)
    sol = build_rational_solution(2, N, 1, n, nu=j, variables=names)
    out = []
    for i in range(1, N + 1):
        r = sol.entry_ratfunc(i, 1, 2)
        r = r.substitute(names[M], Fraction(0)).substitute(names[M + 1], Fraction(1))
        out.append(r)
    return out


def thm11_family(M: int, n: int, coefficients) -> GarnierAlgebraicSolution:
    """M-parameter rational b-vector for n < 0 (m = 1):
    b = sum_j c_j b^{(j)} + b^{(M+1)}, the b^{(j)} being the residue vectors
    at the punctures (a_1, 0)..(a_M, 0) and (0, 0)."""
    _check(n < 0, "hypothesis n < 0 fails")
    coefficients = [to_rational(c) for c in coefficients]
    _check(len(coefficients) == M, "need M coefficients")
    basis = [residue_basis_vector(M, n, j) for j in range(1, M + 2)]
    b = []
    for i in range(M + 2):
        acc = RatFunc._coerce(basis[M][i])
        for c, vec in zip(coefficients, basis[:M]):
            acc = acc + c * vec[i]
        b.append(acc)
    betas = [Fraction(n, 2)] * (M + 2)
    beta_inf = -Fraction((M + 2) * n, 2)
    return GarnierAlgebraicSolution(M=M, b=b, betas=betas, beta_inf=beta_inf,
                                    provenance={"theorem": "garnier-rational",
                                                "M": M, "n": n,
                                                "coefficients": coefficients})


# ---------------------------------------------------------------------------
# numeric layer


@dataclass
class RootResult:
    roots: list
    degree_dropped: bool
    multiple: bool


def u_roots(pm_coeffs, a_numeric, tol: float = 1e-10) -> RootResult:
    """Roots of P_M(z, a) at a numeric a-point, deterministically ordered.

    M = 2 uses the quadratic formula; higher degrees use the companion
    matrix. A vanishing leading coefficient is reported (degree drop) and the
    lower-degree roots are returned flagged."""
    vals = [complex(c.evaluate({f"a{k+1}": complex(x)
                                for k, x in enumerate(a_numeric)}))
            if isinstance(c, RatFunc) else complex(c)
            for c in pm_coeffs]
    while len(vals) > 1 and abs(vals[-1]) < tol:
        vals.pop()
    dropped = len(vals) != len(pm_coeffs)
    deg = len(vals) - 1
    if deg == 0:
        return RootResult([], dropped, False)
    if deg == 1:
        roots = [-vals[0] / vals[1]]
    elif deg == 2:
        c0, c1, c2 = vals
        disc = c1 * c1 - 4 * c2 * c0
        sq = complex(np.sqrt(complex(disc)))
        # the numerically stable split
        if abs(-c1 + sq) >= abs(-c1 - sq):
            r1 = (-c1 + sq) / (2 * c2)
        else:
            r1 = (-c1 - sq) / (2 * c2)
        roots = ([complex(r1), complex(c0 / (c2 * r1))] if abs(r1) > tol
                 else [complex(r1), complex(-c1 / c2 - r1)])
    else:
        roots = [complex(r) for r in np.roots([v for v in reversed(vals)])]
    roots.sort(key=lambda z: (round(z.real, 12), round(z.imag, 12)))
    multiple = any(abs(roots[i] - roots[i + 1]) < 1e-9
                   for i in range(len(roots) - 1))
    if multiple:
        kept = []
        for r in roots:
            if not kept or abs(r - kept[-1]) >= 1e-9:
                kept.append(r)
        roots = kept
    return RootResult(roots, dropped, multiple)


def v_momenta(u, betas, eps, a_numeric) -> list:
    """v_j = sum_i (1 + eps_i) beta_i / (u_j - a_i) over the M + 2 poles
    (a_1..a_M, 0, 1)."""
    M = len(a_numeric)
    poles = [complex(x) for x in a_numeric] + [0j, 1 + 0j]
    out = []
    for uj in u:
        val = 0j
        for pi, beta, e in zip(poles, betas, eps):
            gap = uj - pi
            if abs(gap) < 1e-12:
                raise ZeroDivisionError(f"root {uj} collides with pole {pi}")
            val += (1 + e) * float(beta) / gap
        out.append(val)
    return out


# -- the M = 2 Hamiltonians (explicit) --------------------------------------


def _lam(x, u):
    return (x - u[0]) * (x - u[1])


def _lam_prime_at(uj, other):
    return uj - other


def _T(x, a):
    return x * (x - 1) * (x - a[0]) * (x - a[1])


def _T_prime(x, a):
    # derivative of x(x-1)(x-a1)(x-a2)
    a1, a2 = a
    # T = x^4 - (1+a1+a2)x^3 + (a1+a2+a1a2)x^2 - a1a2 x
    c3 = -(1 + a1 + a2)
    c2 = a1 + a2 + a1 * a2
    c1 = -a1 * a2
    return 4 * x ** 3 + 3 * c3 * x ** 2 + 2 * c2 * x + c1


def garnier_hamiltonians_m2(a, u, v, spec: GarnierSpec):
    """H_1, H_2 of the bivariate system, exactly as displayed."""
    th = [float(t) for t in spec.theta]
    kappa = ((sum(th) - 1) ** 2 - float(spec.theta_inf) ** 2) / 4
    a = [complex(x) for x in a]
    u = [complex(x) for x in u]
    v = [complex(x) for x in v]
    out = []
    for which in (0, 1):
        ak = a[which]
        pref = -_lam(ak, u) / _T_prime(ak, a)
        total = 0j
        for j in (0, 1):
            uj = u[j]
            lamp = _lam_prime_at(uj, u[1 - j])
            theta_terms = ((th[0] - (1 if which == 0 else 0)) / (uj - a[0])
                           + (th[1] - (1 if which == 1 else 0)) / (uj - a[1])
                           + th[2] / uj + th[3] / (uj - 1))
            bracket = v[j] ** 2 - theta_terms * v[j] + kappa / (uj * (uj - 1))
            total += _T(uj, a) / ((uj - ak) * lamp) * bracket
        out.append(pref * total)
    return out


def garnier_residual_m2(solution: GarnierAlgebraicSolution, a_numeric,
                        eps, h: float = 1e-5) -> float:
    """Max absolute residual of the 8 Hamilton equations at an a-point.

    du_i/da_k and dv_i/da_k come from central differences with nearest-root
    tracking; dH_k/du_i and dH_k/dv_i from central differences of the
    explicit Hamiltonians."""
    if solution.M != 2:
        raise ValueError("explicit Hamiltonians are implemented for M = 2 only")
    spec = solution.spec_for(eps)
    pm = solution.pm_coefficients()

    def uv_at(a):
        rr = u_roots(pm, a)
        if rr.degree_dropped or len(rr.roots) != 2:
            raise ArithmeticError(
                f"P_2 degenerates at a = {a}; pick a generic point")
        u = rr.roots
        v = v_momenta(u, solution.betas, spec.eps, a)
        return u, v

    def tracked(base_u, a):
        rr = u_roots(pm, a)
        if len(rr.roots) != 2:
            raise ArithmeticError(f"root collision near a = {a}")
        r = rr.roots
        # nearest-root matching against the base configuration
        if (abs(r[0] - base_u[0]) + abs(r[1] - base_u[1])
                <= abs(r[1] - base_u[0]) + abs(r[0] - base_u[1])):
            u = r
        else:
            u = [r[1], r[0]]
        return u, v_momenta(u, solution.betas, spec.eps, a)

    a0 = [complex(x) for x in a_numeric]
    u0, v0 = uv_at(a0)
    worst = 0.0
    for k in (0, 1):
        ap = list(a0); ap[k] += h
        am = list(a0); am[k] -= h
        up, vp = tracked(u0, ap)
        um, vm = tracked(u0, am)
        du = [(up[i] - um[i]) / (2 * h) for i in (0, 1)]
        dv = [(vp[i] - vm[i]) / (2 * h) for i in (0, 1)]
        for i in (0, 1):
            dH_dv = _fd_partial(lambda vv, i=i, k=k: garnier_hamiltonians_m2(
                a0, u0, _replace(v0, i, vv), spec)[k], v0[i], h)
            dH_du = _fd_partial(lambda uu, i=i, k=k: garnier_hamiltonians_m2(
                a0, _replace(u0, i, uu), v0, spec)[k], u0[i], h)
            worst = max(worst, abs(du[i] - dH_dv), abs(dv[i] + dH_du))
    return worst


def _replace(seq, i, val):
    out = list(seq)
    out[i] = val
    return out


def _fd_partial(f, z0, h):
    return (f(z0 + h) - f(z0 - h)) / (2 * h)
