"""Scalar/matrix symbols, operator norms, spectrum curves and bounds.

A Hausdorff operator with kernel supported in (0, oo) is unitarily a
multiplication by its scalar symbol phi(s) = (M K)(1/2 - i s), so operator
norms become suprema of |phi| and spectra become closures of symbol ranges.
Everything spectral in this module is therefore a statement about concrete
curves and suprema, which is what makes it testable.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .calculus import mellin_grid, mellin_transform
from .errors import (DomainError, OnSpectrum, TailUnbounded, UnboundedAbove)
from .kernels import Kernel
from .operators import HausdorffOperator
from .quadrature import QuadratureConfig

__all__ = [
    "SymbolGrid",
    "MatrixSymbol",
    "SpectrumCurve",
    "scalar_symbol",
    "symbol_grid",
    "matrix_symbol",
    "operator_norm",
    "spectrum_circle",
    "spectrum_log_curve",
    "log_curve_from_symbol",
    "spectral_bound",
    "resolvent_norm_log",
    "stability_surrogate",
]

_LOG2 = math.log(2.0)
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class SymbolGrid:
    """Sampled scalar symbol phi on an increasing grid of real s."""

    s_values: np.ndarray
    phi_values: np.ndarray
    refinement_depth: int

    def __post_init__(self):
        if len(self.s_values) != len(self.phi_values):
            raise ValueError("s and phi lengths differ")
        if np.any(np.diff(self.s_values) <= 0):
            raise ValueError("s_values must be strictly increasing")


@dataclass(frozen=True)
class MatrixSymbol:
    """2x2 symbol; phi_minus is identically 0 for kernels in (0, oo)."""

    phi_plus: Callable
    phi_minus: Callable


@dataclass(frozen=True)
class SpectrumCurve:
    """A parametric complex curve representing a spectrum set.

    open_ends marks ranges like (-pi/2, pi/2) whose endpoints are excluded;
    samplers shrink inward by a relative epsilon there.
    """

    parametrize: Callable
    t_range: tuple
    label: str
    open_ends: bool = False

    def sample(self, n: int) -> tuple:
        lo, hi = self.t_range
        if self.open_ends:
            pad = (hi - lo) * 1e-6
            lo, hi = lo + pad, hi - pad
        ts = np.linspace(lo, hi, n)
        return ts, np.asarray(self.parametrize(ts), dtype=complex)


def _check_continuity(curve: SpectrumCurve, n: int = 257):
    """Sampled continuity: on an inset of the parameter range the largest
    gap between adjacent samples must shrink under 8x refinement (steep but
    continuous ends pass; jumps have refinement-independent gaps)."""
    lo, hi = curve.t_range
    inset = (hi - lo) * 1e-3
    lo, hi = lo + inset, hi - inset

    def max_gap(m):
        ts = np.linspace(lo, hi, m)
        vals = np.asarray(curve.parametrize(ts), dtype=complex)
        return float(np.max(np.abs(np.diff(vals)))), float(np.max(np.abs(vals)))

    g1, scale = max_gap(n)
    g2, _ = max_gap(8 * n)
    if g2 > 0.6 * g1 + 1e-9 * (scale + 1.0):
        raise ValueError("curve %r is not resolved as continuous (gap %.3g -> %.3g)"
                         % (curve.label, g1, g2))


def scalar_symbol(op: HausdorffOperator, s: float,
                  cfg: QuadratureConfig = QuadratureConfig()) -> complex:
    """phi(s) = int K(u) u^(-1/2 - i s) du = (M K)(1/2 - i s).

    Kernels that violate condition (b) have no convergent symbol integral;
    for those the kernel's closed-form (regularized) symbol is returned,
    which is what makes identities like "symbol of (log C)^-1 times
    -log(1/2 - is) equals 1" well-posed.
    """
    kernel = op.kernel
    z = 0.5 - 1j * float(s)
    if kernel.weighted_integrable:
        return mellin_transform(kernel, z, cfg)
    if kernel.closed_form_mellin is not None:
        return kernel.closed_form_mellin(z)
    raise DomainError("kernel %r has neither a convergent symbol integral "
                      "nor a closed form" % kernel.label)


def symbol_grid(op: HausdorffOperator, s_values,
                cfg: QuadratureConfig = QuadratureConfig()) -> SymbolGrid:
    """Scalar symbol sampled on a grid (batched over shared quadrature nodes)."""
    ss = np.asarray(s_values, dtype=float)
    if np.any(np.diff(ss) <= 0):
        raise ValueError("s_values must be strictly increasing")
    kernel = op.kernel
    zs = 0.5 - 1j * ss
    if kernel.weighted_integrable:
        phi = mellin_grid(kernel, zs, cfg)
    elif kernel.closed_form_mellin is not None:
        phi = np.array([kernel.closed_form_mellin(z) for z in zs])
    else:
        raise DomainError("kernel %r has no symbol route" % kernel.label)
    return SymbolGrid(ss, phi, refinement_depth=cfg.max_subdivisions)


def matrix_symbol(op: HausdorffOperator,
                  cfg: QuadratureConfig = QuadratureConfig()) -> MatrixSymbol:
    """Diagonal matrix symbol: phi_minus vanishes for supports in (0, oo)."""
    a, _ = op.kernel.support
    if a < 0:
        raise DomainError("catalog kernels are supported in (0, oo)")

    def plus(s):
        return scalar_symbol(op, s, cfg)

    def minus(s):
        return 0.0 + 0.0j

    return MatrixSymbol(plus, minus)


def operator_norm(op: HausdorffOperator,
                  cfg: QuadratureConfig = QuadratureConfig()) -> float:
    """||H_K|| = sup over real s of |phi(s)|.

    Coarse scan over [-S, S] (S = critical_line_halfwidth), golden-section
    refinement around the best point, then a decay check of the tail; no
    detected decay raises TailUnbounded.  The symbol comes from the kernel's
    closed-form Mellin transform when it has one (exact and deterministic),
    else from quadrature; the two routes agree by the Mellin oracle checks.
    """
    kernel = op.kernel
    S = cfg.critical_line_halfwidth
    closed = kernel.closed_form_mellin

    if closed is not None:
        def mag(svals):
            svals = np.atleast_1d(np.asarray(svals, dtype=float))
            return np.abs(np.array([closed(0.5 - 1j * s) for s in svals]))
    else:
        def mag(svals):
            svals = np.atleast_1d(np.asarray(svals, dtype=float))
            return np.abs(mellin_grid(kernel, 0.5 - 1j * svals, cfg))

    ss = np.linspace(-S, S, 1601)
    vals = mag(ss)
    i = int(np.argmax(vals))
    lo = ss[max(i - 1, 0)]
    hi = ss[min(i + 1, len(ss) - 1)]

    # golden-section maximization of a scalar-unimodal stretch
    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc = float(mag(c)[0])
    fd = float(mag(d)[0])
    for _ in range(60):
        if b - a < 1e-12 * max(1.0, abs(a) + abs(b)):
            break
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = float(mag(c)[0])
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = float(mag(d)[0])
    peak = max(float(np.max(vals)), fc, fd)

    tail = mag(np.array([S, 1.5 * S, 2.0 * S, 3.0 * S]))
    if tail[-1] > peak or (np.all(np.diff(tail) > 0) and tail[-1] > 0.5 * peak):
        raise TailUnbounded("no decay of |phi| detected beyond |s| = %g" % S)
    return peak


# --------------------------------------------------------------------------
# spectrum curves
# --------------------------------------------------------------------------

def spectrum_circle(F: Optional[Callable] = None) -> SpectrumCurve:
    """The circle T + 1 = spectrum of C, or its image F(T + 1)."""
    if F is None:
        def par(theta):
            theta = np.asarray(theta, dtype=float)
            return 1.0 + np.exp(1j * theta)
        label = "sigma(C) = T+1"
    else:
        def par(theta):
            theta = np.asarray(theta, dtype=float)
            return F(1.0 + np.exp(1j * theta))
        label = "F(T+1)"
    curve = SpectrumCurve(par, (-math.pi, math.pi), label)
    _check_continuity(curve)
    return curve


def log_curve_from_symbol(s):
    """The s-parametrization of sigma(log C): -log(1/2 - i s)."""
    s = np.asarray(s, dtype=float)
    return -np.log(0.5 - 1j * s)


def spectrum_log_curve() -> SpectrumCurve:
    """sigma(log C) = { log(2 cos y) + i y : |y| < pi/2 }.

    The same set in the symbol parametrization is -log(1/2 - is); their
    agreement is asserted on a sample at construction.
    """
    def par(y):
        y = np.asarray(y, dtype=float)
        return np.log(2.0 * np.cos(y)) + 1j * y

    curve = SpectrumCurve(par, (-0.5 * math.pi, 0.5 * math.pi),
                          "sigma(log C)", open_ends=True)
    ss = np.linspace(-40.0, 40.0, 41)
    pts = log_curve_from_symbol(ss)
    recon = par(pts.imag)
    if np.max(np.abs(recon - pts)) > 1e-12:
        raise AssertionError("log-curve parametrizations disagree")
    _check_continuity(curve)
    return curve


def spectral_bound(curve: SpectrumCurve, samples: int = 4001) -> float:
    """s(A) = sup of real parts along the spectrum curve."""
    ts, vals = curve.sample(samples)
    re = vals.real
    i = int(np.argmax(re))
    lo = ts[max(i - 1, 0)]
    hi = ts[min(i + 1, len(ts) - 1)]
    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc = float(np.real(curve.parametrize(np.array([c]))[0]))
    fd = float(np.real(curve.parametrize(np.array([d]))[0]))
    for _ in range(80):
        if b - a < 1e-14 * max(1.0, abs(a) + abs(b)):
            break
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = float(np.real(curve.parametrize(np.array([c]))[0]))
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = float(np.real(curve.parametrize(np.array([d]))[0]))
    best = max(float(np.max(re)), fc, fd)
    if curve.open_ends:
        # creep toward the excluded endpoints; sustained growth past the
        # interior maximum means the sup is not attained on any sample
        lo0, hi0 = curve.t_range
        width = hi0 - lo0
        probes = [curve.parametrize(np.array([hi0 - width * 10.0 ** (-k)]))[0].real
                  for k in range(7, 13)]
        probes += [curve.parametrize(np.array([lo0 + width * 10.0 ** (-k)]))[0].real
                   for k in range(7, 13)]
        if max(probes) > best and probes[-1] > probes[0]:
            raise UnboundedAbove("curve real part keeps growing toward an open end")
    return best


def resolvent_norm_log(lam: float) -> float:
    """||R(lambda, log C)|| = 1/dist(lambda, sigma(log C)) for real lambda.

    For lambda > log 2 the distance is lambda - log 2 exactly (the curve
    meets the real axis only there); below, the distance is minimized
    numerically along the curve.  At lambda = log 2 the resolvent does not
    exist.
    """
    lam = float(lam)
    if abs(lam - _LOG2) < 1e-13:
        raise OnSpectrum("lambda = log 2 is the spectral bound of log C")
    if lam > _LOG2:
        return 1.0 / (lam - _LOG2)

    # minimize over y in [0, pi/2) in the variable w = pi/2 - y, sampled
    # log-uniformly: for very negative lambda the minimizer sits within
    # e^lambda of the endpoint, far beyond linear resolution
    half_pi = 0.5 * math.pi

    def dist2_logw(lw):
        w = np.exp(lw)
        re = np.log(2.0 * np.sin(w))
        y = half_pi - w
        return (lam - re) ** 2 + y * y

    lw_lo = min(lam - 5.0, -5.0)
    lws = np.linspace(lw_lo, math.log(half_pi), 20001)
    vals = dist2_logw(lws)
    i = int(np.argmin(vals))
    a = lws[max(i - 1, 0)]
    b = lws[min(i + 1, len(lws) - 1)]
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = dist2_logw(c), dist2_logw(d)
    for _ in range(96):
        if b - a < 1e-14:
            break
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = dist2_logw(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = dist2_logw(d)
    dmin = math.sqrt(min(float(np.min(vals)), fc, fd))
    return 1.0 / dmin


def stability_surrogate(t: float, s: float) -> float:
    """|2^-t (1/2 - is)^-t| = (2 |1/2 - is|)^-t, the symbol-level decay of
    the rescaled semigroup 2^-t H_t; equals 1 at s = 0 for all t."""
    if t < 0:
        raise DomainError("stability surrogate defined for t >= 0")
    return float((2.0 * math.hypot(0.5, float(s))) ** (-t))
