"""Painleve VI rational families and exact verification.

Solution families come from polynomial/rational solutions of the
hypergeometric equations attached to the traceless 2x2 triangular Schlesinger
system with three poles (0, 1, x). The verifiers substitute candidate
solutions into PVI, the first-order Hamiltonian system, the linear 2x2
system, and the hypergeometric ODEs with exact rational-function arithmetic;
a residual is identically zero iff the candidate solves the equation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import MultiPoly, RatFunc, FactoredFrac, binom, to_rational

X = "x"
C = "c"


@dataclass(frozen=True)
class ThetaTuple:
    beta1: Fraction
    beta2: Fraction
    beta3: Fraction
    beta_inf: Fraction

    @classmethod
    def of(cls, b1, b2, b3, binf):
        return cls(to_rational(b1), to_rational(b2), to_rational(b3),
                   to_rational(binf))

    def triangular_sum(self) -> Fraction:
        return self.beta1 + self.beta2 + self.beta3 + self.beta_inf


@dataclass(frozen=True)
class PVIParams:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction


def pvi_params(theta: ThetaTuple) -> PVIParams:
    """(alpha, beta, gamma, delta) from the matrix eigenvalues +-beta_i."""
    return PVIParams(
        alpha=(2 * theta.beta_inf - 1) ** 2 / 2,
        beta=-2 * theta.beta1 ** 2,
        gamma=2 * theta.beta2 ** 2,
        delta=Fraction(1, 2) - 2 * theta.beta3 ** 2,
    )


@dataclass
class PVISolutionFamily:
    y: RatFunc                 # in x, and in the parameter c if param is set
    theta: ThetaTuple
    params: PVIParams
    provenance: dict
    param: str = None          # name of the free family parameter, if any

    def specialize(self, c_value) -> RatFunc:
        if self.param is None:
            return self.y
        return self.y.substitute(self.param, to_rational(c_value))


# ---------------------------------------------------------------------------
# building blocks


def y_from_b(b1: RatFunc, b3: RatFunc) -> RatFunc:
    """y = x b1 / (b1 + (1 - x) b3), reduced.

    Built over a shared factored denominator so the common b-denominators
    cancel structurally instead of through a large gcd."""
    from .algebra.factored import _expanded_deficit
    f1 = FactoredFrac._coerce(b1)
    f3 = FactoredFrac._coerce(b3)
    xp = MultiPoly.var(X)
    g3 = FactoredFrac.from_poly(1 - xp) * f3
    keys = set(f1.den) | set(g3.den)
    common = {f: max(f1.den.get(f, 0), g3.den.get(f, 0)) for f in keys}
    n1 = f1.num * _expanded_deficit(common, f1.den)
    n3 = g3.num * _expanded_deficit(common, g3.den)
    nden = n1 + n3
    if nden.is_zero():
        raise ZeroDivisionError("b1 + (1 - x) b3 is identically zero")
    return RatFunc(xp * n1, nden)


def linear_system_residual(b1, b2, theta: ThetaTuple):
    """Residuals of the first-order system tying b1 and b2 together:
    b1' = (2/x)((beta1+beta3) b1 + beta1 b2),
    b2' = (2/(x-1))(beta2 b1 + (beta2+beta3) b2)."""
    b1 = RatFunc._coerce(b1)
    b2 = RatFunc._coerce(b2)
    x = RatFunc.var(X)
    r1 = b1.partial(X) - 2 / x * ((theta.beta1 + theta.beta3) * b1
                                  + theta.beta1 * b2)
    r2 = b2.partial(X) - 2 / (x - 1) * (theta.beta2 * b1
                                        + (theta.beta2 + theta.beta3) * b2)
    return r1, r2


def hypergeom_residual(b, which: int, theta: ThetaTuple) -> RatFunc:
    """Exact residual of the second-order hypergeometric ODE satisfied by
    b1 (which=1) or b2 (which=2)."""
    b = RatFunc._coerce(b)
    t = theta
    x = RatFunc.var(X)
    shift = -1 if which == 1 else 0
    lin = ((2 * t.beta1 + 2 * t.beta3 + shift)
           + (1 - 2 * t.beta1 - 2 * t.beta2 - 4 * t.beta3) * x)
    const = 4 * t.beta3 * (t.beta1 + t.beta2 + t.beta3)
    xx = x * (x - 1)
    return b.partial(X).partial(X) + lin / xx * b.partial(X) + const / xx * b


# ---------------------------------------------------------------------------
# the PVI residual


def _pvi_degenerate_kind(y: RatFunc):
    if y.is_zero():
        return "0"
    if y == RatFunc.one():
        return "1"
    if y == RatFunc.var(X):
        return "x"
    return None


def pvi_residual(y: RatFunc, params: PVIParams) -> RatFunc:
    """Exact residual of PVI(alpha, beta, gamma, delta) at y(x).

    y may carry extra parameter variables (a whole one-parameter family is
    checked at once). Degenerate candidates y in {0, 1, x} are rejected here;
    use degenerate_parameter_check for those.
    """
    kind = _pvi_degenerate_kind(y)
    if kind is not None:
        raise ValueError(f"degenerate candidate y = {kind}; "
                         "use degenerate_parameter_check")
    x = FactoredFrac.var(X)
    yf = FactoredFrac.from_ratfunc(y)
    y1 = yf.partial(X)
    y2 = y1.partial(X)
    ym1 = yf - 1
    ymx = yf - x
    if ym1.is_zero() or ymx.is_zero():
        raise ValueError("degenerate candidate; use degenerate_parameter_check")
    half = Fraction(1, 2)
    inv_y = yf.reciprocal()
    inv_ym1 = ym1.reciprocal()
    inv_ymx = ymx.reciprocal()
    inv_x = x.reciprocal()
    inv_xm1 = (x - 1).reciprocal()
    A = (inv_y + inv_ym1 + inv_ymx) * half
    B = inv_x + inv_xm1 + inv_ymx
    lead = yf * ym1 * ymx * (inv_x * inv_xm1) ** 2
    bracket = (FactoredFrac.const(params.alpha)
               + params.beta * x * inv_y * inv_y
               + params.gamma * (x - 1) * inv_ym1 * inv_ym1
               + params.delta * x * (x - 1) * inv_ymx * inv_ymx)
    res = y2 - A * (y1 * y1) + B * y1 - lead * bracket
    if res.is_zero():
        return RatFunc.zero()
    return res.to_ratfunc()


def degenerate_parameter_check(kind: str, params: PVIParams) -> bool:
    """Validity test for the constant/degenerate solutions:
    y=inf needs alpha=0, y=0 needs beta=0, y=1 needs gamma=0, y=x needs delta=1/2."""
    table = {
        "inf": params.alpha == 0,
        "0": params.beta == 0,
        "1": params.gamma == 0,
        "x": params.delta == Fraction(1, 2),
    }
    if kind not in table:
        raise ValueError(f"unknown degenerate kind {kind!r}")
    return table[kind]


def conjugate_momentum(y: RatFunc, theta: ThetaTuple) -> RatFunc:
    """p(x) solved from the first Hamiltonian equation.

    The (y - x)-pole terms are combined before dividing, so candidates whose
    combination cancels (e.g. y = x with beta3 = 0) still get a finite p.
    """
    y = RatFunc._coerce(y)
    x = RatFunc.var(X)
    num = x * (x - 1) * y.partial(X) + (2 * theta.beta3 - 1) * y * (y - 1)
    if num.is_zero():
        main = RatFunc.zero()
    else:
        den = 2 * y * (y - 1) * (y - x)
        if den.is_zero():
            raise ZeroDivisionError("degenerate y: momentum is a Riccati family")
        main = num / den
    if y.is_zero() or (y - 1).is_zero():
        raise ZeroDivisionError("degenerate y: momentum is a Riccati family")
    return main + theta.beta1 / y + theta.beta2 / (y - 1)


def hamiltonian_system_residual(y: RatFunc, p: RatFunc, theta: ThetaTuple):
    """Residuals of the first-order system equivalent to PVI (both equations)."""
    y = RatFunc._coerce(y)
    p = RatFunc._coerce(p)
    t = theta
    x = RatFunc.var(X)
    xx = x * (x - 1)
    r1 = y.partial(X) - (2 * p * y * (y - 1) * (y - x)
                         - (2 * t.beta3 - 1) * y * (y - 1)
                         - 2 * t.beta1 * (y - 1) * (y - x)
                         - 2 * t.beta2 * y * (y - x)) / xx
    kappa = ((t.beta1 + t.beta2 + t.beta3 - t.beta_inf)
             * (t.beta1 + t.beta2 + t.beta3 + t.beta_inf - 1))
    quad = (3 * y ** 2 - 2 * (x + 1) * y + x) * p ** 2
    lin = (((2 - 4 * t.beta1 - 4 * t.beta2 - 4 * t.beta3) * y
            + 2 * t.beta1 + 2 * t.beta3 - 1 + (2 * t.beta1 + 2 * t.beta2) * x)
           * p)
    r2 = p.partial(X) + (quad + lin + kappa) / xx
    return r1, r2


# ---------------------------------------------------------------------------
# the solution families


def polynomial_triple(n: int):
    """Degree-n polynomial solutions (b1, b2, b3) of the hypergeometric pair
    for beta_i = n/6, exactly as printed (including the (-1)^(n+1) factor)."""
    if n <= 0 or n % 3 == 0:
        raise ValueError("need a positive n not divisible by 3")
    q = Fraction(n, 3)
    x = MultiPoly.var(X)
    sign = Fraction((-1) ** (n + 1))
    b1 = MultiPoly.zero()
    b2 = MultiPoly.zero()
    b3 = MultiPoly.zero()
    for j in range(n + 1):
        xj = x ** j
        b1 = b1 + xj * (sign * binom(q, j) * binom(q, n - j))
        b2 = b2 + xj * (sign * binom(q, j) * binom(q - 1, n - j))
        b3 = b3 + xj * (sign * binom(q - 1, j) * binom(q, n - j))
    return b1, b2, b3


def pq_polynomials(n: int):
    """P_{n+1} and Q_{n+1} with y = P/Q (positive n, 3 does not divide n)."""
    if n <= 0 or n % 3 == 0:
        raise ValueError("need a positive n not divisible by 3")
    q = Fraction(n, 3)
    x = MultiPoly.var(X)
    P = MultiPoly.zero()
    Q = MultiPoly.zero()
    for j in range(n + 2):
        if j >= 1:
            P = P + x ** j * (binom(q, j - 1) * binom(q, n - j + 1))
        Q = Q + x ** j * (binom(q, j) * binom(q, n - j + 1))
    Q = Q * Fraction(-3 * (n + 1), n)
    return P, Q


def thm5_solution(n: int) -> PVISolutionFamily:
    """The isolated rational solution y = P_{n+1}/Q_{n+1} for positive n,
    3 not dividing n."""
    P, Q = pq_polynomials(n)
    theta = ThetaTuple.of(Fraction(n, 6), Fraction(n, 6), Fraction(n, 6),
                          Fraction(-n, 2))
    return PVISolutionFamily(
        y=RatFunc(P, Q), theta=theta, params=pvi_params(theta),
        provenance={"family": "polynomial", "n": n})


def rational_sextet(n: int):
    """The six rational hypergeometric solutions for negative n, as printed:
    keys b1, b2, b3 (poles at x = 0) and tb1, tb2, tb3 (poles at x = 1)."""
    if n >= 0:
        raise ValueError("need negative n")
    k = -n
    x = MultiPoly.var(X)
    sign = Fraction((-1) ** k)
    one_m_x = 1 - x

    def series(coeff_fn, jmax, base):
        out = MultiPoly.zero()
        for j in range(jmax + 1):
            out = out + base ** j * coeff_fn(j)
        return out

    b1 = RatFunc(series(lambda j: sign * binom(-k, j) * binom(-k, k - j), k, x),
                 x ** (2 * k))
    b2 = RatFunc(series(lambda j: sign * binom(-k - 1, j) * binom(-k, k - 1 - j),
                        k - 1, x), x ** (2 * k - 1))
    b3 = RatFunc(series(lambda j: sign * binom(-k, j) * binom(-k - 1, k - 1 - j),
                        k - 1, x), x ** (2 * k))
    tb1 = RatFunc(series(lambda j: binom(-k - 1, j) * binom(-k, k - 1 - j),
                         k - 1, one_m_x), one_m_x ** (2 * k - 1))
    tb2 = RatFunc(series(lambda j: binom(-k, j) * binom(-k, k - j), k, one_m_x),
                  one_m_x ** (2 * k))
    tb3 = RatFunc(series(lambda j: binom(-k, j) * binom(-k - 1, k - 1 - j),
                         k - 1, one_m_x), one_m_x ** (2 * k))
    return {"b1": b1, "b2": b2, "b3": b3, "tb1": tb1, "tb2": tb2, "tb3": tb3}


def thm6_family(n: int) -> PVISolutionFamily:
    """One-parameter rational family for negative n:
    y = x (c b1 + tb1) / (c b1 + tb1 + (1-x)(c b3 + tb3))."""
    s = rational_sextet(n)
    c = RatFunc.var(C)
    b1 = c * s["b1"] + s["tb1"]
    b3 = c * s["b3"] + s["tb3"]
    theta = ThetaTuple.of(Fraction(n, 2), Fraction(n, 2), Fraction(n, 2),
                          Fraction(-3 * n, 2))
    return PVISolutionFamily(
        y=y_from_b(b1, b3), theta=theta, params=pvi_params(theta),
        provenance={"family": "rational-one-parameter", "n": n}, param=C)


def thm7_b1(n: int, b, c) -> MultiPoly:
    """Degree-n polynomial hypergeometric solution with parameters (b, c)."""
    b = to_rational(b)
    c = to_rational(c)
    x = MultiPoly.var(X)
    out = MultiPoly.zero()
    for j in range(n + 1):
        out = out + x ** j * (binom(-b, j) * binom(c + n - 1, n - j))
    return out


def _thm7_check_params(n, b, c):
    if n <= 0:
        raise ValueError("need positive n")
    b = to_rational(b)
    c = to_rational(c)
    if c in {Fraction(k) for k in range(-n + 1, 0)}:
        raise ValueError(f"c = {c} is an excluded integer in (-n, 0)")
    if c == b + 1:
        raise ValueError("c = b + 1 makes the b3 formula singular")
    return b, c


def thm7_solution(n: int, b, c) -> PVISolutionFamily:
    """Generalized isolated rational solution with parameters (b, c)."""
    b, c = _thm7_check_params(n, b, c)
    x = MultiPoly.var(X)
    P = MultiPoly.zero()
    Q = MultiPoly.zero()
    for j in range(n + 2):
        if j >= 1:
            P = P + x ** j * (binom(-b, j - 1) * binom(c + n - 1, n - j + 1))
        Q = Q + x ** j * (binom(-b, j) * binom(c + n - 1, n - j + 1))
    Q = Q * (Fraction(-(n + 1)) / (1 + b - c))
    theta = ThetaTuple.of((1 + b - c) / 2, (n + c - 1) / 2, -b / 2,
                          Fraction(-n, 2))
    return PVISolutionFamily(
        y=RatFunc(P, Q), theta=theta, params=pvi_params(theta),
        provenance={"family": "polynomial-bc", "n": n, "b": str(b), "c": str(c)})


def thm7_b3(n: int, b, c) -> RatFunc:
    """b3 = -x b1'/(1+b-c) - b b1/(1+b-c) for the (b, c) polynomial family."""
    b, c = _thm7_check_params(n, b, c)
    b1 = RatFunc.from_poly(thm7_b1(n, b, c))
    x = RatFunc.var(X)
    return -(x * b1.partial(X) + b * b1) / (1 + b - c)


def thm8_b_functions(a: int, b: int, c: int):
    """The four rational building blocks (b1, b3, tb1, tb3) for integer
    hypergeometric data, with no admissibility gating beyond 1+b-c != 0."""
    if 1 + b - c == 0:
        raise ValueError("c = b + 1 makes the b3 formulas singular")
    x = MultiPoly.var(X)
    one_m_x = 1 - x
    # x^{1-c} F(b-c+1, a-c+1, 2-c, x) and (1-x)^{c-a-b} F(c-a, c-b, 1-a-b+c, 1-x)
    # in binomial form; the degree-(c-b-1) and degree-(a-c) sums pair
    # binom(-b, .) with the top power, matching the n < 0 special case.
    s1 = MultiPoly.zero()
    for j in range(c - b):
        s1 = s1 + x ** j * (binom(-b, c - b - 1 - j) * binom(c - a - 1, j))
    b1 = RatFunc(s1, x ** (c - 1))
    s2 = MultiPoly.zero()
    for j in range(a - c + 1):
        s2 = s2 + one_m_x ** j * (binom(-b, a - c - j) * binom(b - c, j))
    tb1 = RatFunc(s2, one_m_x ** (a + b - c))
    xr = RatFunc.var(X)
    denom = Fraction(1 + b - c)
    b3 = -(xr * b1.partial(X) + b * b1) / denom
    tb3 = -(xr * tb1.partial(X) + b * tb1) / denom
    return b1, b3, tb1, tb3


def thm8_family(a: int, b: int, c: int) -> PVISolutionFamily:
    """One-parameter rational family from integer hypergeometric data.

    Needs integers c > 1, b >= 1, a > c and c - a < b < c - 1."""
    for name, v in (("a", a), ("b", b), ("c", c)):
        if not isinstance(v, int):
            raise ValueError(f"{name} must be an integer")
    if not c > 1:
        raise ValueError("hypothesis c > 1 fails")
    if not b >= 1:
        raise ValueError("hypothesis b >= 1 fails")
    if not a > c:
        raise ValueError("hypothesis a > c fails")
    if not (c - a < b < c - 1):
        raise ValueError("hypothesis c - a < b < c - 1 fails")
    b1, b3, tb1, tb3 = thm8_b_functions(a, b, c)
    cpar = RatFunc.var(C)
    theta = ThetaTuple.of(Fraction(1 + b - c, 2), Fraction(c - a - 1, 2),
                          Fraction(-b, 2), Fraction(a, 2))
    return PVISolutionFamily(
        y=y_from_b(cpar * b1 + tb1, cpar * b3 + tb3),
        theta=theta, params=pvi_params(theta),
        provenance={"family": "rational-abc", "a": a, "b": b, "c": c}, param=C)


def admissible_thm8_triples(a_max: int):
    """All (a, b, c) satisfying the inequalities with a <= a_max."""
    out = []
    for c in range(2, a_max):
        for a in range(c + 1, a_max + 1):
            for b in range(max(1, c - a + 1), c - 1):
                out.append((a, b, c))
    return out


# ---------------------------------------------------------------------------
# zeros of the special polynomials


@dataclass
class ZerosReport:
    degree: int
    roots: list            # complex, sorted by (re, im)
    conj_paired: list      # bool per root
    inversion_paired: list # bool per root (pairs z with 1/conj(z); 0 exempt)
    palindromic: bool

    def all_conj_paired(self) -> bool:
        return all(self.conj_paired)

    def all_inversion_paired(self) -> bool:
        return all(self.inversion_paired)


def coefficient_list(p: MultiPoly, var: str = X):
    """Ascending coefficients of a univariate polynomial, exact."""
    parts = p.as_univariate(var)
    deg = max(parts) if parts else 0
    out = []
    for k in range(deg + 1):
        if k in parts:
            if not parts[k].is_constant():
                raise ValueError("polynomial is not univariate")
            out.append(parts[k].constant_value())
        else:
            out.append(Fraction(0))
    return out


def is_palindromic(coeffs) -> bool:
    return list(coeffs) == list(reversed(list(coeffs)))


def polynomial_zeros(p: MultiPoly, tol: float = 1e-8) -> ZerosReport:
    """All complex roots (companion-matrix eigenvalues + one Newton step)
    with the two symmetry reports used for the zero-distribution export."""
    import numpy as np
    coeffs = coefficient_list(p)
    if all(c == 0 for c in coeffs):
        raise ValueError("zero polynomial")
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    deg = len(coeffs) - 1
    if deg < 1:
        raise ValueError("need degree >= 1")
    arr = np.array([float(c) for c in reversed(coeffs)], dtype=float)
    roots = np.roots(arr)
    dp = np.polyder(arr)
    polished = []
    for r in roots:
        fr = np.polyval(arr, r)
        fpr = np.polyval(dp, r)
        if fpr != 0:
            r = r - fr / fpr
        polished.append(complex(r))
    polished.sort(key=lambda z: (z.real, z.imag))
    conj_ok = []
    inv_ok = []
    for z in polished:
        conj_ok.append(min(abs(w - z.conjugate()) for w in polished) < tol)
        if abs(z) < tol:
            inv_ok.append(True)
        else:
            target = 1 / z.conjugate()
            inv_ok.append(min(abs(w - target) for w in polished)
                          < tol * max(1.0, abs(target)))
    return ZerosReport(degree=deg, roots=polished, conj_paired=conj_ok,
                       inversion_paired=inv_ok,
                       palindromic=is_palindromic(coeffs))
