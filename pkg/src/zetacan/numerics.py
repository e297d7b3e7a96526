r"""Generic numerical engines.

Bracketed root finding and adaptive quadrature are thin wrappers over
scipy (Brent's method, QUADPACK) behind this package's error contract.
The module's own machinery is what the zeta pipeline actually leans on:

* least-squares extraction of the large-argument profile
  ``d z + a log z^2 + b + c1/z + ...`` of a log-product along a real ray,
* Euler-Maclaurin completion of slowly decaying sums,
* tail completion of zero sequences ``lambda_k ~ pi (k + delta)`` with the
  slope pinned to pi and the offset fitted,
* the contour representation of a spectral zeta function along the wedge
  ``Lambda_c = { |arg(z - c)| = pi/8 }``:

  .. math::
      \zeta(s) = \frac{s}{\pi i} \oint_{\Lambda_c} \log p(z)\, z^{-2s-1} dz
               = -\frac{2s}{\pi}\,\mathrm{Im} \int_{\rm upper\ ray} \log p(z)\, z^{-2s-1} dz,

  obtained from the heat-kernel double integral by carrying out the
  t-integration in closed form.  Subtracting the ray-side asymptotics of
  ``log p`` term by term continues the representation through s = 0 and
  yields zeta(0) and zeta'(0) directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

from .special import hurwitz_zeta

__all__ = [
    "BracketError",
    "QuadratureError",
    "FitError",
    "brent_root",
    "adaptive_quad",
    "euler_maclaurin_tail",
    "AsymptoticProfile",
    "fit_asymptotic_profile",
    "zero_tail_sum",
    "ContourSpec",
    "mellin_contour_zeta",
    "mellin_zeta_critical_values",
]


class BracketError(ValueError):
    """Root bracket does not straddle a sign change."""


class QuadratureError(RuntimeError):
    """Adaptive quadrature failed to reach the requested tolerance."""


class FitError(RuntimeError):
    """Asymptotic-profile fit residual exceeds the certification threshold."""


# ----------------------------------------------------------------------
# Root finding / quadrature
# ----------------------------------------------------------------------

def brent_root(f, lo: float, hi: float, tol: float = 1e-12) -> float:
    """Root of f on [lo, hi] via Brent's method; requires a sign change.

    The returned point always lies inside the initial bracket.
    """
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0.0:
        raise BracketError(f"no sign change on [{lo}, {hi}]")
    return brentq(f, lo, hi, xtol=tol, rtol=8.9e-16)


def adaptive_quad(f, a: float, b: float, tol: float = 1e-10,
                  limit: int = 200, points=None) -> float:
    """Adaptive quadrature of f on [a, b]; b may be math.inf.

    Improper upper limits go through QUADPACK's semi-infinite
    transformation.  Raises QuadratureError when the reported error
    estimate is far above the requested tolerance.
    """
    kwargs = dict(epsabs=tol, epsrel=max(tol, 1e-13), limit=limit)
    if points is not None and not math.isinf(b):
        kwargs["points"] = points
    val, err = quad(f, a, b, **kwargs)
    if err > max(100.0 * tol, 1e-8 * max(1.0, abs(val))):
        raise QuadratureError(
            f"quadrature error estimate {err:.2e} above budget (tol={tol:.1e})")
    return val


def euler_maclaurin_tail(term, K: int, s: float = 2.0, tol: float = 1e-12):
    """Estimate sum_{k > K} term(k) for smooth, power-law-decaying terms.

    Euler-Maclaurin with the integral done adaptively and the first two
    Bernoulli corrections from finite differences.  Returns
    ``(value, error_estimate)``.  ``s`` is the expected decay exponent
    scale used only for the divergence guard (non-summable tails, i.e.
    effective exponent <= 1, are rejected).
    """
    a = K + 1.0
    f = [term(a + i) for i in (-2.0, -1.0, 0.0, 1.0, 2.0)]
    base = abs(f[2])
    if base > 0.0 and K >= 4:
        decay = term(2.0 * a)
        if abs(decay) > 0.0:
            p = -math.log(abs(decay) / base) / math.log(2.0)
            if p <= 1.0 + 1e-9:
                raise QuadratureError(
                    f"tail appears non-summable (decay exponent {p:.3f})")
    integral = adaptive_quad(term, a, math.inf, tol=tol)
    d1 = (8.0 * (f[3] - f[1]) - (f[4] - f[0])) / 12.0
    d3 = (f[4] - 2.0 * f[3] + 2.0 * f[1] - f[0]) / 2.0
    value = integral + 0.5 * f[2] - d1 / 12.0 + d3 / 720.0
    err = abs(d3) / 720.0 + tol
    return value, err


# ----------------------------------------------------------------------
# Asymptotic profiles
# ----------------------------------------------------------------------

@dataclass
class AsymptoticProfile:
    """Coefficients of g(z) ~ d z + a log(z^2) + b + c1/z + c2/z^2 (+ ...).

    When g is minus the log of a normalized zero product
    prod (1 + z^2/lambda_k^2) on the positive ray, the attached spectral
    zeta function has zeta(0) = -a and zeta'(0) = -b.
    """
    d: float
    a: float
    b: float
    c1: float = 0.0
    c2: float = 0.0
    fit_residual: float = 0.0

    def __neg__(self) -> "AsymptoticProfile":
        return AsymptoticProfile(-self.d, -self.a, -self.b, -self.c1, -self.c2,
                                 self.fit_residual)

    def __add__(self, other: "AsymptoticProfile") -> "AsymptoticProfile":
        return AsymptoticProfile(
            self.d + other.d, self.a + other.a, self.b + other.b,
            self.c1 + other.c1, self.c2 + other.c2,
            max(self.fit_residual, other.fit_residual))

    def certified(self, threshold: float = 1e-8) -> bool:
        return self.fit_residual <= threshold


def _profile_basis(z: np.ndarray, inverse_degree: int) -> np.ndarray:
    cols = [z, np.log(z * z), np.ones_like(z)]
    for p in range(1, inverse_degree + 1):
        cols.append(z ** (-float(p)))
    return np.stack(cols, axis=1)


def fit_asymptotic_profile(g, z_min: float = 30.0, z_max: float = 300.0,
                           n_nodes: int = 200, inverse_degree: int = 4,
                           residual_threshold: float | None = None) -> AsymptoticProfile:
    """Least-squares fit of g(z) against {z, log z^2, 1, 1/z, ..., z^-deg}.

    g is evaluated on a log-spaced grid of the window.  The basis carries
    inverse powers beyond the reported c1/c2 so that the O(1/z^3) model
    error of typical Bessel log-products does not bias the constant term.
    The max-abs residual over the grid is stored on the profile; if
    ``residual_threshold`` is given, a FitError is raised when exceeded.
    """
    if not (0.0 < z_min < z_max):
        raise ValueError("require 0 < z_min < z_max")
    z = np.geomspace(z_min, z_max, n_nodes)
    vals = np.asarray([g(float(x)) for x in z], dtype=float)
    basis = _profile_basis(z, inverse_degree)
    scale = np.max(np.abs(basis), axis=0)
    coef, *_ = np.linalg.lstsq(basis / scale, vals, rcond=None)
    coef = coef / scale
    resid = float(np.max(np.abs(basis @ coef - vals)))
    prof = AsymptoticProfile(
        d=float(coef[0]), a=float(coef[1]), b=float(coef[2]),
        c1=float(coef[3]) if inverse_degree >= 1 else 0.0,
        c2=float(coef[4]) if inverse_degree >= 2 else 0.0,
        fit_residual=resid)
    if residual_threshold is not None and resid > residual_threshold:
        raise FitError(f"profile fit residual {resid:.2e} > {residual_threshold:.1e}")
    return prof


def zero_tail_sum(zeros, K: int, s: float, slope: float = math.pi) -> float:
    """sum_{k > K} lambda_k^{-2s} for a sequence with lambda_k ~ slope (k + delta).

    The slope is imposed (pi for a single Bessel zero family; pi/2 for
    cross-product sequences, whose zeros interlace the merged zeros of two
    Bessel factors and are therefore twice as dense); the offset delta and
    its 1/k correction are fitted from the last computed zeros, and the
    tail is completed with Hurwitz zeta values.  Requires s > 1/2 and
    K at most len(zeros).
    """
    zeros = np.asarray(zeros, dtype=float)
    if K > len(zeros):
        raise ValueError("K exceeds the number of supplied zeros")
    if s <= 0.5:
        raise QuadratureError("zero tail diverges for s <= 1/2")
    tail_fit = min(len(zeros), 16)
    ks = np.arange(len(zeros) - tail_fit + 1, len(zeros) + 1, dtype=float)
    ys = zeros[-tail_fit:] / slope - ks
    basis = np.stack([np.ones_like(ks), 1.0 / ks, 1.0 / ks ** 2], axis=1)
    (delta, e1, f2), *_ = np.linalg.lstsq(basis, ys, rcond=None)
    # lambda_k = slope (u + e1/u + (f2 + e1 delta)/u^2 + ...), u = k + delta
    a0 = K + 1.0 + delta
    tail = (hurwitz_zeta(2.0 * s, a0)
            - 2.0 * s * e1 * hurwitz_zeta(2.0 * s + 2.0, a0)
            - 2.0 * s * (f2 + e1 * delta) * hurwitz_zeta(2.0 * s + 3.0, a0))
    return slope ** (-2.0 * s) * tail


# ----------------------------------------------------------------------
# Contour Mellin representation along Lambda_c
# ----------------------------------------------------------------------

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(16)


@dataclass
class ContourSpec:
    """The wedge contour Lambda_c = { |arg(z - c)| = pi/8 }.

    ``c`` must lie strictly between 0 and the smallest zero of the target
    product.  ``truncation_radius`` is where numeric panels stop and the
    fitted asymptotic tail takes over; ``nodes_per_unit`` controls the
    panel density near the vertex.
    """
    c: float
    half_angle: float = math.pi / 8.0
    truncation_radius: float = 400.0
    nodes_per_unit: int = 2

    def __post_init__(self):
        if not (self.c > 0.0):
            raise ValueError("contour vertex c must be positive")
        if abs(self.half_angle - math.pi / 8.0) > 1e-15:
            raise ValueError("the representation requires half_angle = pi/8")
        if self.truncation_radius <= 1.0:
            raise ValueError("truncation radius too small")

    def panels(self) -> np.ndarray:
        """Panel edges in arc length r along one ray.

        Geometric growth capped at length 4 so that the phase increment of
        a log-product between adjacent Gauss nodes stays well below pi,
        which the branch unwrapping relies on.
        """
        edges = [0.0]
        step = 1.0 / max(self.nodes_per_unit, 1)
        r = 0.0
        while r < self.truncation_radius:
            r = min(r + step, self.truncation_radius)
            edges.append(r)
            step = min(step * 1.22, 4.0)
        return np.asarray(edges)

    def ray_nodes(self):
        """Gauss-Legendre nodes/weights on the upper ray, ordered by r."""
        edges = self.panels()
        rs, ws = [], []
        for lo, hi in zip(edges[:-1], edges[1:]):
            mid, half = 0.5 * (hi + lo), 0.5 * (hi - lo)
            rs.append(mid + half * _GL_NODES)
            ws.append(half * _GL_WEIGHTS)
        r = np.concatenate(rs)
        w = np.concatenate(ws)
        phase = complex(math.cos(self.half_angle), math.sin(self.half_angle))
        return self.c + r * phase, w * phase, r


def _eval_logp(logp_nodes, z: np.ndarray, unwrap: bool) -> np.ndarray:
    vals = np.asarray(logp_nodes(z), dtype=np.complex128)
    if unwrap:
        im = np.unwrap(vals.imag)
        im -= 2.0 * math.pi * round(im[0] / (2.0 * math.pi))
        vals = vals.real + 1j * im
    return vals


def _ray_tail_integrals(z_r: complex, s: float) -> dict:
    """Closed forms of int_{z_R}^{infty} basis(z) z^{-2s-1} dz along the ray.

    Valid for s > 1/2 (the integrands then decay); log z is principal,
    which is the analytic branch on the upper ray.
    """
    def power(w):
        return z_r ** (1.0 - w) / (w - 1.0)

    out = {
        "z": power(2.0 * s),
        "one": power(2.0 * s + 1.0),
        "invz": power(2.0 * s + 2.0),
        "invz2": power(2.0 * s + 3.0),
    }
    w = 2.0 * s + 1.0
    out["logz2"] = 2.0 * z_r ** (1.0 - w) * (
        np.log(z_r) / (w - 1.0) + 1.0 / (w - 1.0) ** 2)
    return out


def _fit_ray_asymptotics(z: np.ndarray, vals: np.ndarray, r: np.ndarray,
                         r_lo: float):
    """Complex LS fit of log p ~ A z + B log z^2 + C + D/z + E/z^2 on the ray."""
    sel = r >= r_lo
    zz = z[sel]
    basis = np.stack([zz, np.log(zz * zz), np.ones_like(zz), 1.0 / zz,
                      1.0 / zz ** 2], axis=1)
    scale = np.max(np.abs(basis), axis=0)
    coef, *_ = np.linalg.lstsq(basis / scale, vals[sel], rcond=None)
    coef = coef / scale
    resid = float(np.max(np.abs(basis @ coef - vals[sel])))
    return coef, resid


def mellin_contour_zeta(logp_nodes, contour: ContourSpec, s: float,
                        unwrap: bool = False) -> float:
    """Spectral zeta value sum_k lambda_k^{-2s} from the contour representation.

    ``logp_nodes`` maps an array of points on the upper ray of Lambda_c to
    the analytic continuation of log p there (p the normalized zero
    product, real and positive at the vertex).  With ``unwrap=True`` the
    imaginary part is made continuous along the ray, which lets callers
    pass a principal-branch evaluation of a product.

    Valid for s > 1/2, s != 1 (the s-integration has been carried out in
    closed form; the tail beyond the truncation radius uses ray-side
    asymptotics fitted from the computed samples).
    """
    if s <= 0.5:
        raise ValueError("contour representation needs s > 1/2")
    z, w, r = contour.ray_nodes()
    vals = _eval_logp(logp_nodes, z, unwrap)
    integrand = vals * z ** (-2.0 * s - 1.0)
    i_num = np.sum(w * integrand)
    coef, resid = _fit_ray_asymptotics(z, vals, r, 0.6 * contour.truncation_radius)
    z_r = contour.c + contour.truncation_radius * complex(
        math.cos(contour.half_angle), math.sin(contour.half_angle))
    tails = _ray_tail_integrals(z_r, s)
    i_tail = (coef[0] * tails["z"] + coef[1] * tails["logz2"]
              + coef[2] * tails["one"] + coef[3] * tails["invz"]
              + coef[4] * tails["invz2"])
    return -(2.0 * s / math.pi) * float((i_num + i_tail).imag)


def mellin_zeta_critical_values(logp_nodes, contour: ContourSpec,
                                profile: AsymptoticProfile,
                                unwrap: bool = False):
    """(zeta(0), zeta'(0)) by analytic continuation of the contour integral.

    ``profile`` holds the real-ray coefficients of -log G, G the rotated
    product with purely imaginary zeros; they fix the ray-side asymptotics

        log p(z) = i d z - a Log(z^2) + (i pi a - b) - i c1 / z + c2 / z^2 + O(1/z^3)

    on the upper ray.  Subtracting them leaves an integrable remainder q;
    the subtracted part continues in closed form and contributes

        zeta(0)  = -a,
        zeta'(0) = 2 d c / pi + 2 a log c + 2 c1 / (pi c) - (2/pi) Im int q(z) dz / z.
    """
    z, w, r = contour.ray_nodes()
    vals = _eval_logp(logp_nodes, z, unwrap)
    phi = (1j * profile.d * z - profile.a * np.log(z * z)
           + (1j * math.pi * profile.a - profile.b)
           - 1j * profile.c1 / z + profile.c2 / z ** 2)
    q = vals - phi
    i_q = np.sum(w * q / z)
    # residual tail: q ~ q2 / z^2 + q3 / z^3 (q2 = 0 when the profile's c2
    # is exact), fitted from the outer samples and integrated in closed form
    sel = r >= 0.6 * contour.truncation_radius
    zz = z[sel]
    basis = np.stack([zz ** -2.0, zz ** -3.0], axis=1)
    (q2, q3), *_ = np.linalg.lstsq(basis, q[sel], rcond=None)
    z_r = contour.c + contour.truncation_radius * complex(
        math.cos(contour.half_angle), math.sin(contour.half_angle))
    i_q += q2 * z_r ** (-2.0) / 2.0 + q3 * z_r ** (-3.0) / 3.0
    zeta0 = -profile.a
    zeta0_prime = (2.0 * profile.d * contour.c / math.pi
                   + 2.0 * profile.a * math.log(contour.c)
                   + 2.0 * profile.c1 / (math.pi * contour.c)
                   - (2.0 / math.pi) * float(i_q.imag))
    return zeta0, zeta0_prime
