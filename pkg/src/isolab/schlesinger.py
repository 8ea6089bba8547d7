"""Triangular Schlesinger solutions and their exact verification.

The builders implement the closed-form residue expressions for the two
solution families (polynomial entries for n > 0 with gcd(m, N) > 1, rational
entries for n < 0), exactly as printed, scaled by caller constants per
off-diagonal class l - k. The residual checker verifies the full PDE system

    dB_i/da_j = [B_i, B_j]/(a_i - a_j)   (j != i),
    dB_i/da_i = -sum_{j != i} [B_i, B_j]/(a_i - a_j),

including the bilinear cross terms feeding the inhomogeneity of each
off-diagonal layer, as exact rational-function identities.

Solutions built around a single pole nu keep their entries in shifted
coordinates D_h = a_nu - a_h, where every denominator is a monomial; this is
only a representation choice (the map is a ring embedding), and entries are
converted back to rational functions of a_1..a_N on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import MultiPoly, RatFunc, FactoredFrac, binom, to_rational


class HypothesisError(ValueError):
    """A theorem hypothesis is violated; the message names it."""


def default_variables(N: int):
    return tuple(f"a{i}" for i in range(1, N + 1))


# ---------------------------------------------------------------------------
# exponent grids


@dataclass(frozen=True)
class ExponentGrid:
    """Eigenvalue table beta[i-1][k-1] = beta_i^k with a common rational step."""

    p: int
    N: int
    beta: tuple

    def __post_init__(self):
        if len(self.beta) != self.N or any(len(row) != self.p for row in self.beta):
            raise ValueError("beta table must be N rows of p eigenvalues")
        steps = {row[k] - row[k + 1] for row in self.beta for k in range(self.p - 1)}
        if self.p > 1 and len(steps) != 1:
            raise ValueError("eigenvalues must form arithmetic progressions "
                             "with one common difference")

    @classmethod
    def traceless(cls, p: int, N: int, m: int, n: int) -> "ExponentGrid":
        """beta_i^k = ((p+1)/2 - k) * n/m, the trace-free progression."""
        q = Fraction(n, m)
        row = tuple((Fraction(p + 1, 2) - k) * q for k in range(1, p + 1))
        return cls(p, N, tuple(row for _ in range(N)))

    def step(self) -> Fraction:
        if self.p == 1:
            return Fraction(0)
        return self.beta[0][0] - self.beta[0][1]

    def value(self, i: int, k: int) -> Fraction:
        return self.beta[i - 1][k - 1]


def tau_exponents(grid: ExponentGrid):
    """alpha_{ij} = sum_k beta_i^k beta_j^k; tau(a) = prod (a_i-a_j)^alpha_{ij}."""
    N = grid.N
    return [[sum((grid.beta[i][k] * grid.beta[j][k] for k in range(grid.p)),
                 Fraction(0))
             for j in range(N)] for i in range(N)]


# ---------------------------------------------------------------------------
# coordinate frames


class IdentityFrame:
    """Entries are rational functions of the pole positions themselves."""

    def __init__(self, variables):
        self.variables = tuple(variables)

    def diff(self, f: FactoredFrac, j: int) -> FactoredFrac:
        return f.partial(self.variables[j - 1])

    def gap(self, i: int, j: int) -> MultiPoly:
        return MultiPoly.var(self.variables[i - 1]) - MultiPoly.var(self.variables[j - 1])

    def to_a(self, f: FactoredFrac) -> RatFunc:
        return f.to_ratfunc()


class ShiftedFrame:
    """Entries are rational functions of D_h = a_nu - a_h (h != nu)."""

    def __init__(self, variables, nu: int):
        self.variables = tuple(variables)
        self.nu = nu
        self.dvars = {h + 1: f"_D{h + 1}" for h in range(len(variables)) if h + 1 != nu}

    def dvar(self, h: int) -> MultiPoly:
        return MultiPoly.var(self.dvars[h])

    def diff(self, f: FactoredFrac, j: int) -> FactoredFrac:
        if j != self.nu:
            return -f.partial(self.dvars[j])
        out = FactoredFrac.zero()
        for h in self.dvars.values():
            out = out + f.partial(h)
        return out

    def gap(self, i: int, j: int) -> MultiPoly:
        if i == self.nu:
            return self.dvar(j)
        if j == self.nu:
            return -self.dvar(i)
        return self.dvar(j) - self.dvar(i)

    def to_a(self, f: FactoredFrac) -> RatFunc:
        subs = {}
        for h, name in self.dvars.items():
            subs[name] = (MultiPoly.var(self.variables[self.nu - 1])
                          - MultiPoly.var(self.variables[h - 1]))
        num = f.num
        for name, val in subs.items():
            num = num.substitute(name, val)
        out = RatFunc.from_poly(num)
        for fac, e in f.den.items():
            for name, val in subs.items():
                fac = fac.substitute(name, val)
            out = out / RatFunc.from_poly(fac) ** e
        return out


# ---------------------------------------------------------------------------
# the solution container


class TriangularSolution:
    """N upper-triangular p x p matrices with constant diagonal exponents."""

    def __init__(self, grid: ExponentGrid, entries: dict, frame,
                 provenance: dict = None):
        self.grid = grid
        self.p = grid.p
        self.N = grid.N
        self.entries = entries  # (i, k, l) -> FactoredFrac
        self.frame = frame
        self.provenance = provenance or {}

    def entry(self, i: int, k: int, l: int) -> FactoredFrac:
        if not (1 <= k < l <= self.p):
            raise ValueError("need 1 <= k < l <= p")
        return self.entries[(i, k, l)]

    def entry_ratfunc(self, i: int, k: int, l: int) -> RatFunc:
        """Entry as a reduced rational function of a_1..a_N."""
        return self.frame.to_a(self.entry(i, k, l))

    def with_entry(self, i: int, k: int, l: int, value) -> "TriangularSolution":
        entries = dict(self.entries)
        entries[(i, k, l)] = FactoredFrac._coerce(value)
        prov = dict(self.provenance)
        prov["perturbed"] = (i, k, l)
        return TriangularSolution(self.grid, entries, self.frame, prov)

    def to_identity_frame(self) -> "TriangularSolution":
        if isinstance(self.frame, IdentityFrame):
            return self
        frame = IdentityFrame(self.frame.variables)
        entries = {key: FactoredFrac.from_ratfunc(self.frame.to_a(v))
                   for key, v in self.entries.items()}
        return TriangularSolution(self.grid, entries, frame, dict(self.provenance))

    def to_json_dict(self) -> dict:
        ident = self.to_identity_frame()
        return {
            "schema_version": 1,
            "kind": "triangular-schlesinger",
            "provenance": {k: str(v) for k, v in self.provenance.items()},
            "p": self.p,
            "N": self.N,
            "variables": list(ident.frame.variables),
            "exponents": [[str(b) for b in row] for row in self.grid.beta],
            "entries": {f"{i},{k},{l}": ident.frame.to_a(v).to_text()
                        for (i, k, l), v in sorted(ident.entries.items())},
        }

    @classmethod
    def from_json_dict(cls, doc: dict) -> "TriangularSolution":
        from .algebra import parse_ratfunc
        grid = ExponentGrid(doc["p"], doc["N"],
                            tuple(tuple(Fraction(b) for b in row)
                                  for row in doc["exponents"]))
        frame = IdentityFrame(doc["variables"])
        entries = {}
        for key, text in doc["entries"].items():
            i, k, l = (int(t) for t in key.split(","))
            entries[(i, k, l)] = FactoredFrac.from_ratfunc(parse_ratfunc(text))
        return cls(grid, entries, frame, dict(doc.get("provenance", {})))


# ---------------------------------------------------------------------------
# builders


def _check(cond: bool, message: str):
    if not cond:
        raise HypothesisError(message)


def build_polynomial_solution(p: int, N: int, m: int, n: int,
                              constants=None, variables=None) -> TriangularSolution:
    """Polynomial triangular family for n > 0 (residues at infinity points).

    Nonzero classes are those l - k with (l-k)s/m integer and (l-k)/m not;
    each entry is the printed combinatorial sum of degree (l-k)(n/m)N, scaled
    by the caller's per-class constant.
    """
    from math import gcd
    _check(n > 0, "hypothesis n > 0 fails")
    _check(m > 1, "hypothesis m > 1 fails")
    _check(gcd(n, m) == 1, "hypothesis gcd(n, m) = 1 fails")
    s = gcd(m, N)
    _check(s > 1, f"hypothesis s = gcd(m, N) > 1 fails (s = {s})")
    _check(any((s * j) % m == 0 and j % m != 0 for j in range(1, p)),
           "hypothesis fails: no class j <= p-1 with sj/m integer and j/m not")
    variables = tuple(variables or default_variables(N))
    constants = list(constants or [Fraction(1)] * (p - 1))
    _check(len(constants) == p - 1, "need one constant per off-diagonal class")
    grid = ExponentGrid.traceless(p, N, m, n)
    N1 = N // s
    frame = IdentityFrame(variables)
    entries = {}
    for L in range(1, p):
        if (s * L) % m == 0 and L % m != 0:
            d = L * n * s // m
            exponent = Fraction(L * n, m)  # = d/s
            polys = [_poly_class_entry(variables, i, d, s, N1, exponent)
                     * to_rational(constants[L - 1])
                     for i in range(1, N + 1)]
            vals = [FactoredFrac.from_poly(q) for q in polys]
        else:
            vals = [FactoredFrac.zero() for _ in range(N)]
        for k in range(1, p):
            l = k + L
            if l <= p:
                for i in range(1, N + 1):
                    entries[(i, k, l)] = vals[i - 1]
    return TriangularSolution(grid, entries, frame,
                              {"theorem": "polynomial-family", "p": p, "N": N,
                               "m": m, "n": n, "constants": constants})


def _poly_class_entry(variables, i, d, s, N1, exponent) -> MultiPoly:
    """sum_{k_1+..+k_N+q = N1*d} (-1)^q binom(d/s,k_1)...binom(d/s,k_N)
    a_1^{k_1}...a_N^{k_N} a_i^q, via truncated polynomial convolution."""
    r = N1 * d
    # factor series in an auxiliary grading variable, coefficients in a
    acc = [MultiPoly.const(1)] + [MultiPoly.zero()] * r
    for name in variables:
        av = MultiPoly.var(name)
        fac = []
        apow = MultiPoly.const(1)
        for k in range(r + 1):
            fac.append(apow * binom(exponent, k))
            apow = apow * av
        acc = _convolve(acc, fac, r)
    gi = []
    apow = MultiPoly.const(1)
    ai = MultiPoly.var(variables[i - 1])
    for q in range(r + 1):
        gi.append(apow * ((-1) ** q))
        apow = apow * ai
    acc = _convolve(acc, gi, r)
    return acc[r]


def _convolve(a, b, r):
    out = [MultiPoly.zero()] * (r + 1)
    for i, ai in enumerate(a):
        if ai.is_zero():
            continue
        for j in range(0, r + 1 - i):
            bj = b[j]
            if not bj.is_zero():
                out[i + j] = out[i + j] + ai * bj
    return out


def build_rational_solution(p: int, N: int, m: int, n: int,
                            constants=None, nu: int = 1,
                            variables=None) -> TriangularSolution:
    """Rational triangular family for n < 0 (residues at the branch point nu).

    Nonzero classes are those with m | (l-k); entries follow the printed
    residue sums and live in shifted coordinates D_h = a_nu - a_h internally.
    """
    from math import gcd
    _check(n < 0, "hypothesis n < 0 fails")
    _check(m >= 1, "hypothesis m > 0 fails")
    _check(gcd(-n, m) == 1, "hypothesis gcd(n, m) = 1 fails")
    _check(any(j % m == 0 for j in range(1, p)),
           f"hypothesis fails: no class j <= p-1 divisible by m = {m}")
    variables = tuple(variables or default_variables(N))
    _check(1 <= nu <= N, "pole choice nu out of range")
    constants = list(constants or [Fraction(1)] * (p - 1))
    _check(len(constants) == p - 1, "need one constant per off-diagonal class")
    grid = ExponentGrid.traceless(p, N, m, n)
    frame = ShiftedFrame(variables, nu)
    entries = {}
    for L in range(1, p):
        if L % m == 0:
            d = L * (-n) // m
            vals = [_rational_class_entry(frame, i, d, N, nu)
                    * to_rational(constants[L - 1])
                    for i in range(1, N + 1)]
        else:
            vals = [FactoredFrac.zero() for _ in range(N)]
        for k in range(1, p):
            l = k + L
            if l <= p:
                for i in range(1, N + 1):
                    entries[(i, k, l)] = vals[i - 1]
    return TriangularSolution(grid, entries, frame,
                              {"theorem": "rational-family", "p": p, "N": N,
                               "m": m, "n": n, "nu": nu, "constants": constants})


def _rational_class_entry(frame: ShiftedFrame, i, d, N, nu) -> FactoredFrac:
    """The printed residue sums at (a_nu, 0), as a single factored fraction."""
    others = [h for h in range(1, N + 1) if h != nu]
    if i == nu:
        # sum over k_h >= 0, sum = d, of prod binom(-d, k_h) D_h^{-(k_h + d)}
        den = {frame.dvar(h): 2 * d for h in others}
        num = MultiPoly.zero()
        for comp in _compositions(d, len(others)):
            term = MultiPoly.const(1)
            for h, kh in zip(others, comp):
                term = term * (frame.dvar(h) ** (d - kh) * binom(-d, kh))
            num = num + term
        return FactoredFrac(num, den)
    # i != nu: geometric index k_nu plus binomial indices k_h (h != nu),
    # total d - 1; the product over h != nu includes h = i, and the geometric
    # factor contributes up to d more powers of D_i.
    den = {frame.dvar(h): (d - 1) + d for h in others}
    den[frame.dvar(i)] = den[frame.dvar(i)] + d
    num = MultiPoly.zero()
    for comp in _compositions(d - 1, len(others) + 1):
        knu = comp[0]
        term = MultiPoly.const((-1) ** knu)
        term = term * frame.dvar(i) ** (d - 1 - knu)  # d - (k_nu + 1) of the D_i budget
        for h, kh in zip(others, comp[1:]):
            term = term * (frame.dvar(h) ** ((d - 1) - kh) * binom(-d, kh))
        num = num + term
    return FactoredFrac(num, den)


def _compositions(total, slots):
    if slots == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, slots - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# verification


def commutator_entry(sol: TriangularSolution, i: int, j: int, k: int, l: int,
                     _cache=None) -> FactoredFrac:
    """[B_i, B_j]_{kl} for k < l, with constant diagonals beta."""
    g = sol.grid
    bi = sol.entry(i, k, l)
    bj = sol.entry(j, k, l)
    out = (bj * (g.value(i, k) - g.value(i, l))
           - bi * (g.value(j, k) - g.value(j, l)))
    return out + cross_terms(sol, i, j, k, l, _cache)


def cross_terms(sol: TriangularSolution, i: int, j: int, k: int, l: int,
                _cache=None) -> FactoredFrac:
    """sum_{k<s<l} (b_i^{ks} b_j^{sl} - b_j^{ks} b_i^{sl}); this is the
    bilinear source of the inhomogeneity for the (k, l) layer and must vanish
    identically for families whose equal-(l-k) entries coincide."""
    out = FactoredFrac.zero()
    for s in range(k + 1, l):
        out = out + _prod(sol.entry(i, k, s), sol.entry(j, s, l), _cache)
        out = out - _prod(sol.entry(j, k, s), sol.entry(i, s, l), _cache)
    return out


def _prod(f, g, cache):
    if cache is None:
        return f * g
    key = (id(f), id(g))
    if key not in cache:
        cache[key] = f * g
    return cache[key]


def schlesinger_residual(sol: TriangularSolution, as_ratfunc: bool = True) -> dict:
    """Exact residuals of the full PDE system.

    Keys (i, j, k, l) with j != i hold d b_i^{kl}/da_j - [B_i,B_j]_{kl}/(a_i-a_j);
    keys (i, i, k, l) hold d b_i^{kl}/da_i + sum_{j != i} [B_i,B_j]_{kl}/(a_i-a_j).
    All values are identically zero exactly when the solution satisfies the
    system.
    """
    frame = sol.frame
    N, p = sol.N, sol.p
    cache = {}
    out = {}
    pairs = [(k, l) for k in range(1, p + 1) for l in range(k + 1, p + 1)]
    for i in range(1, N + 1):
        own = {kl: frame.diff(sol.entry(i, *kl), i) for kl in pairs}
        for j in range(1, N + 1):
            if j == i:
                continue
            inv_gap = FactoredFrac.quotient(MultiPoly.const(1), frame.gap(i, j), 1)
            for (k, l) in pairs:
                comm = commutator_entry(sol, i, j, k, l, cache) * inv_gap
                out[(i, j, k, l)] = frame.diff(sol.entry(i, k, l), j) - comm
                own[(k, l)] = own[(k, l)] + comm
        for (k, l) in pairs:
            out[(i, i, k, l)] = own[(k, l)]
    if as_ratfunc:
        return {key: (RatFunc.zero() if val.is_zero() else frame.to_a(val))
                for key, val in out.items()}
    return out


def residual_is_zero(sol: TriangularSolution) -> bool:
    res = schlesinger_residual(sol, as_ratfunc=False)
    return all(v.is_zero() for v in res.values())


def sum_constraint(sol: TriangularSolution) -> dict:
    """sum_i b_i^{kl} per (k, l); constant for solutions, zero for the
    residue-built families."""
    out = {}
    for k in range(1, sol.p + 1):
        for l in range(k + 1, sol.p + 1):
            tot = FactoredFrac.zero()
            for i in range(1, sol.N + 1):
                tot = tot + sol.entry(i, k, l)
            out[(k, l)] = RatFunc.zero() if tot.is_zero() else sol.frame.to_a(tot)
    return out
