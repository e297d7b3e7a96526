r"""Bessel cross products, their zero sequences, and spectrum assembly.

The singular Laplacian attached to the canonical metric on O(m) over the
projective line has eigenvalues lambda^2/4 where lambda runs over the
positive zeros of the cross products

    L_n(z) = -J_n(z) J_{n-m-1}(z) + J_{n+1}(z) J_{n-m}(z)
           = -z^m d/dz ( z^{-m} J_n(z) J_{n-m}(z) ),

with the symmetry L-zero sets Z_n = Z_{m-n} (the modified rotation
G_n(z) = I_{n+1} I_{n-m} + I_n I_{n-m-1} satisfies G_n = G_{m-n}).  Zeros
are simple, avoid the zeros of both J factors, and interlace the merged
zero set of J_n and J_{n-m}: between consecutive cross-product zeros lies
exactly one merged Bessel zero.  That interlacing supplies the root
brackets used here; each bracket is polished with Brent's method and every
gap is additionally fine-scanned so a missed sign change cannot silently
drop a zero.

Bessel zeros themselves are generated internally (McMahon guesses for
order zero, then order-to-order interlacing brackets), so the module has
no dependency on tabulated zeros.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .numerics import BracketError, brent_root
from .special import bessel_j_many

__all__ = [
    "CrossProductSpec",
    "SpectralSequence",
    "SpectrumEntry",
    "Spectrum",
    "bessel_j_zeros",
    "bessel_jp_zeros",
    "cross_L",
    "cross_L_prime",
    "cross_G_log",
    "cross_G_norm_log",
    "cross_G_uniform_log",
    "small_z_exponent",
    "small_z_coefficient",
    "zeros",
    "taylor_sum_rule",
    "taylor_sum_rule_exact",
    "canonical_orders",
    "spectrum",
    "eigen_norm_check",
    "EigenfunctionProbe",
    "eigenfunction_radial",
    "write_zeros_csv",
]


# ----------------------------------------------------------------------
# Specs and containers
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class CrossProductSpec:
    """Order n and twist degree m of a cross product L_n."""
    n: int
    m: int

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("twist degree m must be >= 0")

    def canonical(self) -> "CrossProductSpec":
        """Representative of the symmetry class {n, m - n} with n >= ceil(m/2)."""
        n = max(self.n, self.m - self.n)
        return CrossProductSpec(n, self.m)


@dataclass
class SpectralSequence:
    """Ordered positive zeros of one cross product, with certification data."""
    spec: CrossProductSpec
    zeros: np.ndarray
    residuals: np.ndarray
    local_scales: np.ndarray
    certified_count: int
    multiplicities: np.ndarray = field(default=None)

    def __post_init__(self):
        if self.multiplicities is None:
            self.multiplicities = np.ones(len(self.zeros), dtype=int)


@dataclass(frozen=True)
class SpectrumEntry:
    eigenvalue: float
    multiplicity: int
    order: int
    lam: float
    k: int
    residual: float


@dataclass
class Spectrum:
    """Sorted eigenvalues lambda^2/4 of the singular Laplacian on O(m).

    The zero eigenvalue carries the harmonic multiplicity m + 1 and is
    excluded from all zeta summation.
    """
    m: int
    entries: list
    zero_mode_multiplicity: int


# ----------------------------------------------------------------------
# Bessel zero tables (internal, cached)
# ----------------------------------------------------------------------

_J_ZEROS: dict = {}
_JP_ZEROS: dict = {}


def _j(order: int, x: float) -> float:
    return bessel_j_many((order,), x)[order]


def _jp(order: int, x: float) -> float:
    # J_n'(x) = J_{n-1}(x) - (n/x) J_n(x)
    vals = bessel_j_many((order - 1, order), x)
    return vals[order - 1] - (order / x) * vals[order]


def _mcmahon_j0(k: int) -> float:
    beta = (k - 0.25) * math.pi
    r = 1.0 / (8.0 * beta)
    return beta + r * (1.0 + r * r * (-124.0 / 3.0 + r * r * 120928.0 / 15.0))


def _extend_j_zeros(order: int, count: int) -> np.ndarray:
    have = _J_ZEROS.get(order)
    if have is not None and len(have) >= count:
        return have
    if order == 0:
        out = []
        for k in range(1, count + 1):
            g = _mcmahon_j0(k)
            lo, hi = g - 0.4, g + 0.4
            out.append(brent_root(lambda x: _j(0, x), lo, hi, tol=1e-13))
        arr = np.asarray(out)
    else:
        lower = _extend_j_zeros(order - 1, count + 1)
        out = []
        for k in range(count):
            out.append(brent_root(lambda x: _j(order, x),
                                  lower[k] * (1 + 1e-14), lower[k + 1] * (1 - 1e-14),
                                  tol=1e-13))
        arr = np.asarray(out)
    _J_ZEROS[order] = arr
    return arr


def bessel_j_zeros(order: int, count: int) -> np.ndarray:
    """First ``count`` positive zeros of J_order, order >= 0.

    Order zero starts from McMahon guesses; higher orders are bracketed by
    the interlacing property j_{n-1,k} < j_{n,k} < j_{n-1,k+1}.
    """
    if order < 0:
        order = -order  # J_{-n} = (-1)^n J_n, same zero set
    return _extend_j_zeros(order, count)[:count].copy()


def bessel_jp_zeros(order: int, count: int) -> np.ndarray:
    """First ``count`` positive zeros of J_order'.

    J_0' = -J_1, so those are the J_1 zeros; for order >= 1 the first zero
    lies in (order, j_{order,1}) and the rest follow by Rolle between
    consecutive zeros of J_order.
    """
    if order < 0:
        order = -order
    if order == 0:
        return bessel_j_zeros(1, count)
    have = _JP_ZEROS.get(order)
    if have is not None and len(have) >= count:
        return have[:count].copy()
    jz = bessel_j_zeros(order, count)
    out = [brent_root(lambda x: _jp(order, x), order * (1 + 1e-12), jz[0] * (1 - 1e-14),
                      tol=1e-13)]
    for k in range(count - 1):
        out.append(brent_root(lambda x: _jp(order, x),
                              jz[k] * (1 + 1e-14), jz[k + 1] * (1 - 1e-14), tol=1e-13))
    arr = np.asarray(out)
    _JP_ZEROS[order] = arr
    return arr[:count].copy()


# ----------------------------------------------------------------------
# Cross products
# ----------------------------------------------------------------------

def cross_L(n: int, m: int, x: float) -> float:
    """L_n(x) = -J_n J_{n-m-1} + J_{n+1} J_{n-m} at x."""
    orders = (n, n - m - 1, n + 1, n - m)
    v = bessel_j_many(orders, x)
    return -v[n] * v[n - m - 1] + v[n + 1] * v[n - m]


def cross_L_prime(n: int, m: int, x: float, h: float = None) -> float:
    """dL_n/dx by a five-point central difference."""
    if h is None:
        h = 3e-4 * max(1.0, abs(x))
    f = [cross_L(n, m, x + i * h) for i in (-2, -1, 1, 2)]
    return (f[0] - 8.0 * f[1] + 8.0 * f[2] - f[3]) / (12.0 * h)


def cross_G_log(n: int, m: int, x: float):
    """(log G_n(x), sign) with G_n = I_{n+1} I_{n-m} + I_n I_{n-m-1}, x > 0.

    All modified Bessel factors are positive for integer order, so the sign
    is +1; the two products are combined in log space.
    """
    from .special import bessel_i_log

    la = bessel_i_log(abs(n + 1), x)[0] + bessel_i_log(abs(n - m), x)[0]
    lb = bessel_i_log(abs(n), x)[0] + bessel_i_log(abs(n - m - 1), x)[0]
    hi, lo = (la, lb) if la >= lb else (lb, la)
    return hi + math.log1p(math.exp(lo - hi)), 1


def small_z_exponent(n: int, m: int) -> int:
    """Exponent e with G_n(z) ~ l z^e as z -> 0."""
    n = max(n, m - n)
    if n >= m + 1:
        return 2 * n - m - 1
    return m + 1


def small_z_coefficient(n: int, m: int) -> Fraction:
    """Leading coefficient l of G_n(z) = l z^e + o(z^e), exact."""
    n = max(n, m - n)
    if n >= m + 1:
        return Fraction(1, 2 ** (2 * n - m - 1)
                        * math.factorial(n) * math.factorial(n - m - 1))
    num = Fraction(m + 2)
    return num / (2 ** (m + 1) * math.factorial(n + 1) * math.factorial(m + 1 - n))


def cross_G_norm_log(n: int, m: int, x: float) -> float:
    """log of G_n(x) / (l x^e): the normalized product prod (1 + x^2/lambda_k^2).

    Minus this function has the asymptotic profile whose (a, b) encode
    zeta(0) and zeta'(0) of the zero sequence.
    """
    e = small_z_exponent(n, m)
    l = small_z_coefficient(n, m)
    return cross_G_log(n, m, x)[0] - math.log(float(l)) - e * math.log(x)


def cross_G_uniform_log(n: int, m: int, z: float, include_w: bool = True) -> float:
    """Uniform large-order value of log G_{n+m}(n z), n the family index.

    log of  e^{(2n+m+1) eta(z) - (m+1) z eta'(z)} / (2 pi n sqrt(1+z^2))
            * (1 + e^{-2(eta - z eta')}) * (1 + w_m(p)/n);

    the 1/n^2 remainder is bounded uniformly in z.  (Combining the Debye
    expansions of the four factors gives the prefactor above; the shape
    e^{(2n+m-1) eta} (e^{2(eta - z eta')} + 1) sometimes quoted for it is
    the m = 1 specialization, off by e^{(m-1) z eta'} otherwise.  The
    z eta' factor carries no log z or constant term at infinity, so the
    profile coefficients downstream are insensitive to the difference.)
    """
    from .special import eta_debye, eta_debye_minus_z_eta_prime, uniform_w_poly

    if n < 1 or z <= 0.0:
        raise ValueError("require family index n >= 1 and z > 0")
    t = eta_debye_minus_z_eta_prime(z)  # log(z / (1 + sqrt(1+z^2))) < 0
    z_eta_prime = math.sqrt(1.0 + z * z)
    out = ((2.0 * n + m + 1.0) * eta_debye(z) - (m + 1.0) * z_eta_prime
           - math.log(2.0 * math.pi * n) - 0.5 * math.log1p(z * z))
    if -2.0 * t > 30.0:
        out += -2.0 * t + math.log1p(math.exp(2.0 * t))
    else:
        out += math.log1p(math.exp(-2.0 * t))
    if include_w:
        p = 1.0 / math.sqrt(1.0 + z * z)
        out += math.log1p(uniform_w_poly(m, p) / n)
    return out


# ----------------------------------------------------------------------
# Zero sequences of L_n
# ----------------------------------------------------------------------

def _merged_factor_zeros(nu: int, m: int, count: int) -> np.ndarray:
    a, b = abs(nu), abs(nu - m)
    za = bessel_j_zeros(a, count)
    zb = bessel_j_zeros(b, count)
    return np.sort(np.concatenate([za, zb]))


def _scan_brackets(f, lo: float, hi: float, probes: int):
    xs = np.linspace(lo, hi, probes)
    vals = [f(float(x)) for x in xs]
    out = []
    for i in range(len(xs) - 1):
        if vals[i] == 0.0:
            # probe landed on a zero, or L underflowed near the origin;
            # accept only a genuine crossing certified by the neighbors
            if 0 < i and vals[i - 1] * vals[i + 1] < 0.0:
                out.append((xs[i], xs[i]))
        elif vals[i] * vals[i + 1] < 0.0:
            out.append((xs[i], xs[i + 1]))
    return out


def zeros(spec: CrossProductSpec, K: int, tol: float = 1e-12) -> SpectralSequence:
    """First K positive zeros of L_n, certified by interlacing brackets.

    The factorized cases (m = 0, where L_n = -2 J_n J_n', and the middle
    order n = m/2 for even m, where L reduces to +-2 J_{m/2} J_{m/2+1})
    read their zeros off the Bessel zero tables directly.  Otherwise the
    merged zeros of the two J factors bracket the roots; every gap is
    scanned for sign changes so the count is certified, and the first gap
    below the smallest factor zero is scanned as well.
    """
    if K < 1:
        raise ValueError("K must be >= 1")
    cspec = spec.canonical()
    nu, m = cspec.n, cspec.m

    if m == 0:
        ja = bessel_j_zeros(nu, K)
        jb = bessel_jp_zeros(nu, K)
        lam = np.sort(np.concatenate([ja, jb]))[:K]
    elif m % 2 == 0 and nu == m // 2:
        ja = bessel_j_zeros(m // 2, K)
        jb = bessel_j_zeros(m // 2 + 1, K)
        lam = np.sort(np.concatenate([ja, jb]))[:K]
    else:
        f = lambda x: cross_L(nu, m, x)
        grid = _merged_factor_zeros(nu, m, K + 2)
        found = []
        for lo, hi in _scan_brackets(f, 0.05 * grid[0], grid[0] * (1 - 1e-12), 33):
            found.append(brent_root(f, lo, hi, tol=tol) if lo < hi else lo)
        i = 0
        while len(found) < K and i + 1 < len(grid):
            lo, hi = grid[i] * (1 + 1e-13), grid[i + 1] * (1 - 1e-13)
            brackets = _scan_brackets(f, lo, hi, 13)
            if not brackets:
                raise BracketError(
                    f"no sign change of L_{nu} (m={m}) in factor-zero gap "
                    f"({grid[i]:.6f}, {grid[i+1]:.6f})")
            for blo, bhi in brackets:
                found.append(brent_root(f, blo, bhi, tol=tol) if blo < bhi else blo)
            i += 1
        if len(found) < K:
            raise BracketError("factor zero tables too short for requested K")
        lam = np.asarray(sorted(found)[:K])

    f = lambda x: cross_L(nu, m, x)
    res = np.array([abs(f(float(x))) for x in lam])
    mids = np.empty(len(lam))
    ext = np.concatenate([[lam[0] * 0.5], lam, [lam[-1] + (lam[-1] - lam[-2] if len(lam) > 1 else 1.0)]])
    for i in range(len(lam)):
        mids[i] = max(abs(f(float(0.5 * (ext[i] + ext[i + 1])))),
                      abs(f(float(0.5 * (ext[i + 1] + ext[i + 2])))))
    return SpectralSequence(spec=cspec, zeros=lam, residuals=res,
                            local_scales=mids, certified_count=len(lam))


# ----------------------------------------------------------------------
# Taylor-coefficient sum rules
# ----------------------------------------------------------------------

def _i_series(order: int, r_max: int) -> dict:
    order = abs(order)
    out = {}
    for r in range(r_max + 1):
        out[order + 2 * r] = Fraction(
            1, 2 ** (order + 2 * r) * math.factorial(r) * math.factorial(order + r))
    return out


def _g_series(nu: int, m: int, r_max: int = 4) -> dict:
    def mul(sa, sb):
        out = {}
        for ea, ca in sa.items():
            for eb, cb in sb.items():
                out[ea + eb] = out.get(ea + eb, Fraction(0)) + ca * cb
        return out

    t1 = mul(_i_series(nu + 1, r_max), _i_series(nu - m, r_max))
    t2 = mul(_i_series(nu, r_max), _i_series(nu - m - 1, r_max))
    out = dict(t1)
    for e, c in t2.items():
        out[e] = out.get(e, Fraction(0)) + c
    return out


def taylor_sum_rule_exact(spec: CrossProductSpec, power: int = 2) -> Fraction:
    """sum_k lambda_k^{-power} (power 2 or 4) from Taylor coefficients, exact.

    With G_n(z) = l z^e (1 + (g1/l) z^2 + (g2/l) z^4 + ...) and the
    factorization over +- i lambda_k, Newton's identities give
    sum 1/lambda^2 = g1/l and sum 1/lambda^4 = (g1/l)^2 - 2 g2/l.
    """
    if power not in (2, 4):
        raise ValueError("power must be 2 or 4")
    cspec = spec.canonical()
    series = _g_series(cspec.n, cspec.m)
    e = min(series)
    l = series[e]
    e1 = series.get(e + 2, Fraction(0)) / l
    if power == 2:
        return e1
    e2 = series.get(e + 4, Fraction(0)) / l
    return e1 * e1 - 2 * e2


def taylor_sum_rule(spec: CrossProductSpec, power: int = 2) -> float:
    return float(taylor_sum_rule_exact(spec, power))


# ----------------------------------------------------------------------
# Spectrum assembly
# ----------------------------------------------------------------------

def canonical_orders(m: int, count: int):
    """First ``count`` canonical orders with their multiplicities.

    Even m: orders 0..m/2-1 carry multiplicity 2, the self-symmetric order
    m/2 carries 1, and every order >= m+1 carries 2.  Odd m: orders
    0..(m-1)/2 and >= m+1 all carry 2 (each low eigenvalue is shared by the
    symmetric pair Z_n = Z_{m-n}).  m = 0 reduces to multiplicity 1 at
    order 0 and 2 above, matching the trivial-bundle spectrum.
    """
    out = []
    if m % 2 == 0:
        out.extend((nu, 2) for nu in range(0, m // 2))
        out.append((m // 2, 1))
    else:
        out.extend((nu, 2) for nu in range(0, (m - 1) // 2 + 1))
    nu = m + 1
    while len(out) < count:
        out.append((nu, 2))
        nu += 1
    return out[:count]


def spectrum(m: int, n_orders: int, K: int) -> Spectrum:
    """Eigenvalues lambda^2/4 from the first ``n_orders`` canonical orders,
    K zeros each, sorted ascending with multiplicities."""
    if m < 0 or n_orders < 1 or K < 1:
        raise ValueError("require m >= 0 and n_orders, K >= 1")
    entries = []
    for nu, mult in canonical_orders(m, n_orders):
        seq = zeros(CrossProductSpec(nu, m), K)
        for k, lam in enumerate(seq.zeros, start=1):
            entries.append(SpectrumEntry(
                eigenvalue=float(lam) ** 2 / 4.0, multiplicity=mult,
                order=nu, lam=float(lam), k=k, residual=float(seq.residuals[k - 1])))
    entries.sort(key=lambda e: e.eigenvalue)
    return Spectrum(m=m, entries=entries, zero_mode_multiplicity=m + 1)


# ----------------------------------------------------------------------
# Eigenfunction norm identity
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class EigenfunctionProbe:
    """Piecewise radial eigenfunction profile for lambda in Z_nu."""
    nu: int
    m: int
    lam: float

    def __call__(self, r: float) -> float:
        return eigenfunction_radial(self.nu, self.m, self.lam, r)

    def weight(self, r: float) -> float:
        """Physical norm weight r / max(1,r)^{2m+4} (metric x volume)."""
        return r / max(1.0, r) ** (2 * self.m + 4)

    def squared_norm(self, tol: float = 1e-12) -> float:
        from .numerics import adaptive_quad

        f = lambda r: self(r) ** 2 * self.weight(r)
        return (adaptive_quad(f, 0.0, 1.0, tol=tol)
                + adaptive_quad(f, 1.0, math.inf, tol=tol))


def eigenfunction_radial(nu: int, m: int, lam: float, r: float) -> float:
    """Radial profile: J_nu(lam r) inside r <= 1, matched
    (J_nu(lam)/J_{nu-m}(lam)) r^m J_{nu-m}(lam/r) branch outside.

    Its squared norm against the physical weight r dr / max(1,r)^{2m+4}
    (metric weight times canonical volume; the r^m growth cancels) is the
    closed two-term expression used in eigen_norm_check.
    """
    if r <= 1.0:
        return _j(nu, lam * r)
    return _j(nu, lam) / _j(nu - m, lam) * r ** m * _j(nu - m, lam / r)


def eigen_norm_check(nu: int, m: int, lam: float):
    """Both sides of  L_nu'(lambda) = 2 (J_{nu-m}/J_nu)(lambda) * I(lambda).

    I is the closed-form squared norm of the eigenfunction probe,

        I = (1/2) (J_nu'^2 + (1 - nu^2/lam^2) J_nu^2)
          + (J_nu^2 / (2 J_{nu-m}^2)) (J_{nu-m}'^2 + (1 - (nu-m)^2/lam^2) J_{nu-m}^2),

    everything evaluated at lambda.  Returns (lhs, rhs); at a true simple
    zero of L_nu they agree.
    """
    lhs = cross_L_prime(nu, m, lam)
    ja = _j(nu, lam)
    jb = _j(nu - m, lam)
    if ja == 0.0 or jb == 0.0:
        raise ValueError("cross-product zeros avoid the factor zeros; "
                         "got a vanishing Bessel factor")
    jap = _jp(nu, lam)
    jbp = _jp(nu - m, lam)
    norm = (0.5 * (jap ** 2 + (1.0 - nu ** 2 / lam ** 2) * ja ** 2)
            + ja ** 2 / (2.0 * jb ** 2)
            * (jbp ** 2 + (1.0 - (nu - m) ** 2 / lam ** 2) * jb ** 2))
    rhs = 2.0 * (jb / ja) * norm
    return lhs, rhs


# ----------------------------------------------------------------------
# Export
# ----------------------------------------------------------------------

def write_zeros_csv(path, sequences):
    """CSV of zero tables: columns m, n, k, lambda, multiplicity, residual."""
    import csv

    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["m", "n", "k", "lambda", "multiplicity", "residual"])
        for seq in sequences:
            for k, lam in enumerate(seq.zeros, start=1):
                w.writerow([seq.spec.m, seq.spec.n, k,
                            format(float(lam), ".17g"),
                            int(seq.multiplicities[k - 1]),
                            format(float(seq.residuals[k - 1]), ".3e")])
