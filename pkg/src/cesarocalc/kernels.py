"""Catalog of Hausdorff kernels for the Cesaro functional calculus.

Each kernel packages its pointwise evaluator, support, endpoint-singularity
metadata and (where one exists) a closed-form Mellin transform so the
numeric transforms can be cross-checked against an analytic oracle.

Evaluators are numpy-vectorized in u and return 0 outside the support.
Kernels whose endpoint behaviour cannot be resolved through the plain
u-variable (the Volterra-function kernels, and the fractional-part kernel
with its dense jumps) carry dedicated Mellin/apply strategies; see the
module functions below.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import DivergenceSuspected, DomainError
from .quadrature import (EndpointSingularity, IntegralResult, QuadratureConfig,
                         REGULAR, _adaptive_gl, _leggauss, integrate_finite,
                         integrate_semiinfinite)
from .special import (DEFAULT_NU_CONFIG, NuEvalConfig, cpow, gamma_complex,
                      log_principal, volterra_nu_batch, volterra_nu_primitive,
                      zeta_righthalf)

__all__ = [
    "Kernel",
    "cesaro_kernel",
    "hardy_kernel",
    "copson_kernel",
    "holder_kernel",
    "generalized_cesaro_kernel",
    "fractional_part_kernel",
    "log_resolvent_kernel",
    "log_inverse_kernel",
]

_LOG2 = math.log(2.0)

# Epsilon for the exact endpoint correction of the Volterra kernels: the
# kernel mass on a distance-(0,eps) sliver is nu(c*eps, 0)/c in closed form.
_NU_HEAD_EPS = 1e-10


@dataclass(frozen=True)
class Kernel:
    """A Hausdorff kernel K with its analytic metadata.

    support is (0, 1) or (1, inf).  evaluate takes u (scalar or 1-D array)
    and vanishes outside the support.  evaluate_cov, present for kernels
    supported in (0, 1), computes K(1 - v) accurately from the distance v
    to the right endpoint.  weighted_integrable records condition (b),
    i.e. K(u) u^(-1/2) in L^1; the one catalog kernel violating it (the
    log-inverse kernel) only has a regularized symbol.
    """

    label: str
    support: tuple
    evaluate: Callable
    singularity: EndpointSingularity = REGULAR
    closed_form_mellin: Optional[Callable] = None
    params: tuple = ()
    weighted_integrable: bool = True
    evaluate_cov: Optional[Callable] = None
    mellin_override: Optional[Callable] = None
    apply_override: Optional[Callable] = None
    b_integral_override: Optional[Callable] = None
    tail_power: Optional[float] = None
    decay_scale: float = 1.0


def _indicator(u, lo, hi):
    return (u > lo) & (u < hi)


def cesaro_kernel() -> Kernel:
    """K = chi_(0,1): the kernel of the continuous Cesaro operator."""

    def evaluate(u):
        u = np.asarray(u, dtype=float)
        return np.where(_indicator(u, 0.0, 1.0), 1.0 + 0.0j, 0.0 + 0.0j)

    def cov(v):
        v = np.asarray(v, dtype=float)
        return np.where((v > 0.0) & (v < 1.0), 1.0 + 0.0j, 0.0 + 0.0j)

    return Kernel(
        label="cesaro",
        support=(0.0, 1.0),
        evaluate=evaluate,
        singularity=REGULAR,
        closed_form_mellin=lambda z: 1.0 / z,
        evaluate_cov=cov,
    )


def hardy_kernel(alpha: complex) -> Kernel:
    """K(u) = u^(-alpha) on (0,1); Hardy averaging operator, Re alpha < 1/2."""
    alpha = complex(alpha)
    if not alpha.real < 0.5:
        raise DomainError("hardy kernel requires Re alpha < 1/2")

    def evaluate(u):
        u = np.asarray(u, dtype=float)
        inside = _indicator(u, 0.0, 1.0)
        out = np.zeros(u.shape, dtype=complex)
        with np.errstate(all="ignore"):
            out[inside] = np.exp(-alpha * np.log(u[inside]))
        return out

    def cov(v):
        v = np.asarray(v, dtype=float)
        inside = (v > 0.0) & (v < 1.0)
        out = np.zeros(v.shape, dtype=complex)
        out[inside] = np.exp(-alpha * np.log1p(-v[inside]))
        return out

    return Kernel(
        label="hardy",
        support=(0.0, 1.0),
        evaluate=evaluate,
        singularity=EndpointSingularity(left_exponent=-alpha.real, right_exponent=0.0),
        closed_form_mellin=lambda z: 1.0 / (z - alpha),
        params=(alpha,),
        evaluate_cov=cov,
    )


def copson_kernel(alpha: complex) -> Kernel:
    """K(u) = u^(alpha-1) on (1, oo); Copson operator family, Re alpha < 1/2.

    The closed-form Mellin 1/(1 - z - alpha) is valid for Re(z + alpha) < 1,
    which covers the critical line.
    """
    alpha = complex(alpha)
    if not alpha.real < 0.5:
        raise DomainError("copson kernel requires Re alpha < 1/2")

    def evaluate(u):
        u = np.asarray(u, dtype=float)
        inside = (u > 1.0) & np.isfinite(u)   # kernel decays: dead at u = inf
        out = np.zeros(u.shape, dtype=complex)
        with np.errstate(all="ignore"):
            out[inside] = np.exp((alpha - 1.0) * np.log(u[inside]))
        return out

    return Kernel(
        label="copson",
        support=(1.0, math.inf),
        evaluate=evaluate,
        singularity=REGULAR,
        closed_form_mellin=lambda z: 1.0 / (1.0 - z - alpha),
        params=(alpha,),
        tail_power=alpha.real - 1.0,
    )


def holder_kernel(alpha: complex) -> Kernel:
    """K(u) = (log(1/u))^(alpha-1)/Gamma(alpha) on (0,1): the Hoelder mean.

    Realizes the fractional power C^alpha for Re alpha > 0; Mellin transform
    z^(-alpha) (principal branch).
    """
    alpha = complex(alpha)
    if not alpha.real > 0.0:
        raise DomainError("holder kernel requires Re alpha > 0")
    coef = 1.0 / gamma_complex(alpha)
    flat = alpha == 1.0 + 0.0j   # exponent 0: the kernel is identically 1

    def evaluate(u):
        u = np.asarray(u, dtype=float)
        inside = _indicator(u, 0.0, 1.0)
        out = np.zeros(u.shape, dtype=complex)
        if flat:
            out[inside] = 1.0
            return out
        with np.errstate(all="ignore"):
            w = -np.log(u[inside])
            out[inside] = coef * np.exp((alpha - 1.0) * np.log(w))
        return out

    def cov(v):
        v = np.asarray(v, dtype=float)
        inside = (v > 0.0) & (v < 1.0)
        out = np.zeros(v.shape, dtype=complex)
        if flat:
            out[inside] = 1.0
            return out
        with np.errstate(all="ignore"):
            w = -np.log1p(-v[inside])
            out[inside] = coef * np.exp((alpha - 1.0) * np.log(w))
        return out

    return Kernel(
        label="holder",
        support=(0.0, 1.0),
        evaluate=evaluate,
        singularity=EndpointSingularity(left_exponent=0.0,
                                        right_exponent=min(alpha.real - 1.0, 0.0)),
        closed_form_mellin=lambda z: cpow(z, -alpha),
        params=(alpha,),
        evaluate_cov=cov,
    )


def generalized_cesaro_kernel(alpha: float) -> Kernel:
    """K(u) = alpha (1-u)^(alpha-1) on (0,1): generalized Cesaro of order alpha > 0."""
    alpha = float(alpha)
    if not alpha > 0.0:
        raise DomainError("generalized Cesaro kernel requires alpha > 0")

    def evaluate(u):
        u = np.asarray(u, dtype=float)
        inside = _indicator(u, 0.0, 1.0)
        out = np.zeros(u.shape, dtype=complex)
        with np.errstate(all="ignore"):
            out[inside] = alpha * np.exp((alpha - 1.0) * np.log1p(-u[inside]))
        return out

    def cov(v):
        v = np.asarray(v, dtype=float)
        inside = (v > 0.0) & (v < 1.0)
        out = np.zeros(v.shape, dtype=complex)
        with np.errstate(all="ignore"):
            out[inside] = alpha * np.exp((alpha - 1.0) * np.log(v[inside]))
        return out

    def mellin(z):
        return alpha * gamma_complex(alpha) * gamma_complex(z) / gamma_complex(alpha + z)

    return Kernel(
        label="generalized-cesaro",
        support=(0.0, 1.0),
        evaluate=evaluate,
        singularity=EndpointSingularity(left_exponent=0.0,
                                        right_exponent=min(alpha - 1.0, 0.0)),
        closed_form_mellin=mellin,
        params=(alpha,),
        evaluate_cov=cov,
    )


# --------------------------------------------------------------------------
# fractional-part kernel: piecewise rule + Euler-Maclaurin tail
# --------------------------------------------------------------------------

def _fracpart_mellin(z: complex, cfg: QuadratureConfig) -> IntegralResult:
    """Numeric int_0^1 {1/u} u^(z-1) du = int_1^oo {t} t^(-1-z) dt, Re z > 0.

    Gauss-Legendre on each smooth segment [n, n+1) up to N ~ 12|Im z|, then
    the Euler-Maclaurin tail through the B6 term.  The expansion error is
    bounded by |prod_{j=1..5}(j+z)| N^(-5-Re z) / (720*42*(5+Re z)).
    """
    z = complex(z)
    if not z.real > 0.0:
        raise DivergenceSuspected("fractional-part Mellin needs Re z > 0")
    N = max(64, int(math.ceil(12.0 * abs(z.imag))))
    x10, w10 = _leggauss(10)
    # t^(-is) oscillates at phase rate |Im z|/t, so early segments get
    # proportionally more Gauss panels (a few radians per panel).
    lo_edges = []
    hi_edges = []
    for n in range(1, N):
        m = max(1, int(math.ceil(abs(z.imag) / (3.0 * n))))
        edges = n + np.arange(m + 1) / m
        lo_edges.append(edges[:-1])
        hi_edges.append(edges[1:])
    lo = np.concatenate(lo_edges)
    hi = np.concatenate(hi_edges)
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    t = mid[:, None] + half[:, None] * x10[None, :]
    frac = t - np.floor(t)
    vals = frac * np.exp((-1.0 - z) * np.log(t))
    finite = complex(np.sum(half * (vals @ w10)))

    zp = -z * math.log(N)
    Npow = cmath.exp(zp)                        # N^-z
    g0 = Npow / N                               # N^(-1-z)
    g2 = (1 + z) * (2 + z) * Npow / N ** 3      # g''(N)
    g4 = (1 + z) * (2 + z) * (3 + z) * (4 + z) * Npow / N ** 5
    tail = Npow / (2 * z) - g0 / 12.0 + g2 / 720.0 - g4 / 30240.0
    p5 = abs((1 + z) * (2 + z) * (3 + z) * (4 + z) * (5 + z))
    err = p5 * abs(Npow) / N ** 5 / (720.0 * 42.0 * (5.0 + z.real))
    return IntegralResult(finite + tail, err + 1e-15 * abs(finite), 10 * len(lo))


def fractional_part_kernel() -> Kernel:
    """K(u) = {1/u} on (0,1): the fractional-part kernel of Example-3 type.

    Its Mellin transform 1/(z-1) - zeta(z)/z ties the kernel to the zeta
    function; the associated F is not holomorphic near the spectrum circle,
    so this kernel is the catalog's documented non-holomorphic case.
    """

    def evaluate(u):
        u = np.asarray(u, dtype=float)
        inside = _indicator(u, 0.0, 1.0)
        out = np.zeros(u.shape, dtype=complex)
        with np.errstate(all="ignore"):
            out[inside] = np.mod(1.0 / u[inside], 1.0)
        return out

    def cov(v):
        v = np.asarray(v, dtype=float)
        return evaluate(1.0 - v)

    def mellin(z):
        z = complex(z)
        return 1.0 / (z - 1.0) - zeta_righthalf(z) / z

    return Kernel(
        label="fractional-part",
        support=(0.0, 1.0),
        evaluate=evaluate,
        singularity=REGULAR,
        closed_form_mellin=mellin,
        evaluate_cov=cov,
        mellin_override=_fracpart_mellin,
        b_integral_override=lambda cfg: _fracpart_mellin(0.5 + 0.0j, cfg),
    )


# --------------------------------------------------------------------------
# Volterra-function kernels (resolvent and inverse of log C)
# --------------------------------------------------------------------------

def _nu_kernel_singularity() -> float:
    # True endpoint behaviour is w^-1 log^-2 w (integrable through the log
    # factor only); recorded just inside the type's admissible range, the
    # dedicated log-variable strategies below do the actual work.
    return -0.999


def log_resolvent_kernel(lam: complex, cfg: NuEvalConfig = DEFAULT_NU_CONFIG) -> Kernel:
    """Kernel of R(lambda, log C): e^-lambda nu(e^-lambda log(1/u), -1) on (0,1).

    Requires Re lambda > log 2.  Mellin transform 1/(lambda + log z); the
    Mellin and operator integrals run in the variable L = log(1/u) with the
    exact sliver correction int_0^eps nu(cL,-1) dL = nu(c eps, 0)/c, because
    ~1/|log eps| of the kernel mass sits below any representable distance
    to u = 1.
    """
    lam = complex(lam)
    if not lam.real > _LOG2:
        raise DomainError("log-resolvent kernel requires Re lambda > log 2")
    c = cmath.exp(-lam)
    if not c.real > 0.0:
        raise DomainError("Im lambda too large: e^-lambda must have Re > 0")

    def evaluate(u):
        u = np.asarray(u, dtype=float)
        inside = _indicator(u, 0.0, 1.0)
        out = np.zeros(u.shape, dtype=complex)
        if np.any(inside):
            y = c * (-np.log(u[inside]))
            out[inside] = c * volterra_nu_batch(y, cfg)
        return out

    def cov(v):
        v = np.asarray(v, dtype=float)
        inside = (v > 0.0) & (v < 1.0)
        out = np.zeros(v.shape, dtype=complex)
        if np.any(inside):
            y = c * (-np.log1p(-v[inside]))
            out[inside] = c * volterra_nu_batch(y, cfg)
        return out

    def mellin_override(z: complex, qcfg: QuadratureConfig) -> IntegralResult:
        # M K(z) = int_0^oo c nu(cL,-1) e^(-zL) dL; classical for Re z > |c|
        # (|nu(y,-1)| <= nu(|y|,-1) ~ e^|y|).  Three stages: tanh-sinh over
        # the log-singular head (eps, 1), adaptive Gauss-Legendre over the
        # oscillatory middle, and the exact exponential tail once real cL
        # crosses the asymptotic switch (nu = e^cL there).
        z = complex(z)
        if not z.real > abs(c):
            raise DivergenceSuspected("log-resolvent Mellin needs Re z > |e^-lambda|")
        eps = _NU_HEAD_EPS
        head = volterra_nu_primitive(c * eps, cfg)
        rate = z.real - abs(c)

        def integrand(L):
            L = np.asarray(L, dtype=float)
            y = c * L
            asym = (np.imag(y) == 0.0) & (np.real(y) >= cfg.asymptotic_switch_threshold)
            vals = np.empty(L.shape, dtype=complex)
            vals[asym] = c * np.exp((c - z) * L[asym])
            rest = ~asym
            if np.any(rest):
                vals[rest] = (c * volterra_nu_batch(y[rest], cfg)
                              * np.exp(-z * L[rest]))
            return vals

        evals = 64
        res1 = integrate_finite(integrand, eps, 1.0, REGULAR, qcfg)
        total = head + res1.value
        err = abs(z) * eps * abs(head) + res1.error_estimate
        evals += res1.evaluations

        switch_L = (cfg.asymptotic_switch_threshold / c.real
                    if lam.imag == 0.0 else math.inf)
        T_need = 1.0 + 45.0 / rate
        T_gl = min(switch_L, T_need)
        mid, gl_err, gl_n = _adaptive_gl(integrand, 1.0, T_gl,
                                         max(qcfg.tolerance, 1e-12))
        total += mid
        err += gl_err
        evals += gl_n
        if switch_L < T_need:
            # exact tail: int_T^oo c e^((c-z)L) dL
            total += c * cmath.exp((c - z) * switch_L) / (z - c)
        else:
            err += math.exp(-rate * T_gl) / rate
        return IntegralResult(total, err, evals)

    def apply_override(f: Callable, x: float, qcfg: QuadratureConfig,
                       u_breaks=()) -> IntegralResult:
        # int_0^1 K(u) f(ux) du in L = log(1/u); sliver (0,eps) contributes
        # f(x) nu(c eps, 0) exactly to first order.
        eps = _NU_HEAD_EPS
        # sample f mid-sliver so one-sided limits at x do the right thing
        fx = complex(np.asarray(f(np.array([float(x) * (1.0 - 0.5 * eps)])),
                                dtype=complex)[0])
        head = fx * volterra_nu_primitive(c * eps, cfg)
        dead = 800.0 / (1.0 - c.real)

        def integrand(L):
            L = np.asarray(L, dtype=float)
            out = np.zeros(L.shape, dtype=complex)
            live = L < dead
            if np.any(live):
                Ll = L[live]
                y = c * Ll
                fv = np.asarray(f(np.exp(-Ll) * x), dtype=complex)
                asym = (np.imag(y) == 0.0) & (np.real(y) >= cfg.asymptotic_switch_threshold)
                vals = np.empty(Ll.shape, dtype=complex)
                vals[asym] = c * np.exp((c - 1.0) * Ll[asym]) * fv[asym]
                rest = ~asym
                if np.any(rest):
                    vals[rest] = (c * volterra_nu_batch(y[rest], cfg)
                                  * np.exp(-Ll[rest]) * fv[rest])
                out[live] = vals
            return out

        evals = 1 + 64
        total = head
        err = abs(eps * head)
        cuts = sorted({-math.log(b) for b in u_breaks if 0.0 < b < 1.0})
        lo = eps
        for cut in cuts:
            if cut > lo:
                piece = integrate_finite(integrand, lo, cut, REGULAR, qcfg)
                total += piece.value
                err += piece.error_estimate
                evals += piece.evaluations
                lo = cut
        rate = 1.0 - c.real
        tail = integrate_semiinfinite(integrand, lo, decay_hint=1.0 / rate, cfg=qcfg)
        return IntegralResult(total + tail.value, err + tail.error_estimate,
                              evals + tail.evaluations)

    def b_integral_override(qcfg: QuadratureConfig) -> IntegralResult:
        if lam.imag == 0.0:
            return mellin_override(0.5 + 0.0j, qcfg)   # K > 0 for real lambda
        # complex lambda (experimental): |nu(y,-1)| ~ e^(Re y) once Re y is
        # large, folded analytically against the u^(-1/2) decay
        eps = _NU_HEAD_EPS
        head = abs(volterra_nu_primitive(abs(c) * eps, cfg))
        dead = 800.0 / (0.5 - c.real)

        def integrand(L):
            L = np.asarray(L, dtype=float)
            out = np.zeros(L.shape, dtype=complex)
            live = L < dead
            if np.any(live):
                Ll = L[live]
                y = c * Ll
                big = np.real(y) >= cfg.asymptotic_switch_threshold
                vals = np.empty(Ll.shape, dtype=complex)
                vals[big] = abs(c) * np.exp((c.real - 0.5) * Ll[big])
                rest = ~big
                if np.any(rest):
                    vals[rest] = (np.abs(c * volterra_nu_batch(y[rest], cfg))
                                  * np.exp(-0.5 * Ll[rest]))
                out[live] = vals
            return out

        body = integrate_semiinfinite(integrand, eps,
                                      decay_hint=1.0 / (0.5 - c.real), cfg=qcfg)
        return IntegralResult(head + body.value, body.error_estimate,
                              body.evaluations + 64)

    return Kernel(
        label="log-resolvent",
        support=(0.0, 1.0),
        evaluate=evaluate,
        singularity=EndpointSingularity(left_exponent=-c.real,
                                        right_exponent=_nu_kernel_singularity()),
        closed_form_mellin=lambda z: 1.0 / (lam + log_principal(z)),
        params=(lam,),
        evaluate_cov=cov,
        mellin_override=mellin_override,
        apply_override=apply_override,
        b_integral_override=b_integral_override,
    )


_LOGINV_GRID_CACHE: dict = {}


def _loginv_grid(cfg: NuEvalConfig):
    """Quadrature grids for the compensated transform of (log C)^-1.

    r(t) = nu(t,-1) - e^t does not depend on the transform variable, so it
    is tabulated once: on tanh-sinh levels over (eps, 1) for the singular
    head and on a composite 16-point Gauss rule over (1, switch) with panels
    short enough for oscillations up to |Im z| = 80.  Each transform value
    is then a weighted sum against e^((z-1)t).
    """
    key = (cfg.quadrature_tolerance, cfg.asymptotic_switch_threshold,
           cfg.tail_truncation)
    hit = _LOGINV_GRID_CACHE.get(key)
    if hit is not None:
        return hit
    from .quadrature import _leggauss as leg, _ts_level

    def r_of(t):
        t = np.asarray(t, dtype=float)
        out = np.empty(t.shape)
        for sl in np.array_split(np.arange(t.size), max(1, t.size // 1500)):
            out[sl] = np.real(volterra_nu_batch(t[sl], cfg)) - np.exp(t[sl])
        return out

    eps = _NU_HEAD_EPS
    width = 1.0 - eps
    max_level = 10
    ts_levels = []
    for level in range(max_level + 1):
        delta, w = _ts_level(level)
        d = delta * width
        t_lo = eps + d
        t_hi = 1.0 - d
        ts_levels.append((d, w, r_of(t_lo), r_of(t_hi), t_lo, t_hi))
    centre_t = eps + 0.5 * width
    centre_r = float(r_of(np.array([centre_t]))[0])

    switch = cfg.asymptotic_switch_threshold
    x16, w16 = leg(16)
    n_panels = int(math.ceil((switch - 1.0) / 0.05))
    edges = np.linspace(1.0, switch, n_panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[:-1] + edges[1:])
    gl_t = (mid[:, None] + half[:, None] * x16[None, :]).ravel()
    gl_w = (half[:, None] * w16[None, :]).ravel()
    grid = {
        "eps": eps, "width": width, "max_level": max_level,
        "ts_levels": ts_levels, "centre_t": centre_t, "centre_r": centre_r,
        "gl_t": gl_t, "gl_w": gl_w, "gl_r": r_of(gl_t),
    }
    _LOGINV_GRID_CACHE[key] = grid
    return grid


def log_inverse_kernel(cfg: NuEvalConfig = DEFAULT_NU_CONFIG) -> Kernel:
    """Kernel of (log C)^(-1): K(u) = -nu(log u, -1)/u on (1, oo).

    Since nu(y,-1) = e^y + O(y^-N), |K| tends to 1 at infinity: condition
    (b) fails and the classical symbol integral diverges.  The operator is
    still bounded; its regularized symbol -1/log z is exposed through
    closed_form_mellin, and the numeric Mellin below uses the compensated
    transform of nu(t,-1) - e^t, which converges for Re z < 1.
    """

    def evaluate(u):
        u = np.asarray(u, dtype=float)
        inside = (u > 1.0) & np.isfinite(u)
        out = np.zeros(u.shape, dtype=complex)
        if np.any(inside):
            ui = u[inside]
            out[inside] = -volterra_nu_batch(np.log(ui), cfg) / ui
        return out

    def mellin_override(z: complex, qcfg: QuadratureConfig) -> IntegralResult:
        # M K(z) = -int_0^oo nu(t,-1) e^((z-1)t) dt, compensated:
        #        = 1/z - int_0^oo (nu(t,-1) - e^t) e^((z-1)t) dt.
        # nu is quadrature-limited to ~1e-16 relative, so the compensated
        # integrand carries cancellation noise ~1e-16 e^t near the switch:
        # a ~5e-9 accuracy floor independent of the requested tolerance.
        z = complex(z)
        if not z.real < 1.0:
            raise DivergenceSuspected("compensated log-inverse Mellin needs Re z < 1")
        if z == 0:
            raise DomainError("Mellin undefined at z = 0")
        if abs(z.imag) > 80.0:
            raise DomainError("log-inverse Mellin grid is sized for |Im z| <= 80")
        eps = _NU_HEAD_EPS
        head = volterra_nu_primitive(eps, cfg) - eps
        g = _loginv_grid(cfg)

        # tanh-sinh over (eps, 1) on the tabulated levels
        half = 0.5 * g["width"]
        raw = 0.0 + 0.0j
        prev = None
        err_ts = math.inf
        evals = 0
        for level in range(g["max_level"] + 1):
            h = 0.5 ** level
            d, w, r_lo, r_hi, t_lo, t_hi = g["ts_levels"][level]
            contrib = np.sum(w * (r_lo * np.exp((z - 1.0) * t_lo)
                                  + r_hi * np.exp((z - 1.0) * t_hi)))
            if level == 0:
                raw = 0.5 * np.pi * g["centre_r"] * cmath.exp((z - 1.0) * g["centre_t"]) \
                    + contrib
            else:
                raw += contrib
            evals += 2 * d.size
            value_ts = half * h * raw
            if prev is not None:
                err_ts = abs(value_ts - prev)
                if err_ts <= 1e-10 * max(1.0, abs(value_ts)):
                    break
            prev = value_ts

        # composite Gauss over (1, switch): one weighted dot per z
        gl = complex(np.sum(g["gl_w"] * g["gl_r"] * np.exp((z - 1.0) * g["gl_t"])))
        evals += g["gl_t"].size
        body_value = value_ts + gl
        body_err = err_ts + 5e-9
        value = 1.0 / z - (head + body_value)
        return IntegralResult(value, body_err + abs(z) * eps * abs(head), evals)

    def apply_override(f: Callable, x: float, qcfg: QuadratureConfig,
                       u_breaks=()) -> IntegralResult:
        # -int_0^oo nu(t,-1) f(x e^t) dt (t = log u); head as in the resolvent.
        eps = _NU_HEAD_EPS
        fx = complex(np.asarray(f(np.array([float(x) * (1.0 + 0.5 * eps)])),
                                dtype=complex)[0])
        head = -fx * volterra_nu_primitive(eps, cfg)
        switch = cfg.asymptotic_switch_threshold

        def integrand(t):
            t = np.asarray(t, dtype=float)
            with np.errstate(all="ignore"):
                ft = np.asarray(f(np.exp(t) * x), dtype=complex)
            out = np.zeros(t.shape, dtype=complex)
            live = (ft != 0.0) & np.isfinite(ft)
            if np.any(live):
                tl = t[live]
                small = tl < switch
                vals = np.empty(tl.shape, dtype=complex)
                if np.any(small):
                    vals[small] = -volterra_nu_batch(tl[small], cfg) * ft[live][small]
                big = ~small
                if np.any(big):
                    # nu = e^t; fold into log space against f's decay
                    with np.errstate(all="ignore"):
                        prod = -np.exp(tl[big]) * ft[live][big]
                    vals[big] = np.where(np.isfinite(prod), prod, 0.0 + 0.0j)
                out[live] = vals
            return out

        evals = 1 + 64
        total = head
        err = abs(eps * head)
        cuts = sorted({math.log(b) for b in u_breaks if b > 1.0})
        lo = eps
        for cut in cuts:
            if cut > lo:
                piece = integrate_finite(integrand, lo, cut, REGULAR, qcfg)
                total += piece.value
                err += piece.error_estimate
                evals += piece.evaluations
                lo = cut
        tail = integrate_semiinfinite(integrand, lo, decay_hint=1.0, cfg=qcfg)
        return IntegralResult(total + tail.value, err + tail.error_estimate,
                              evals + tail.evaluations)

    def mellin(z):
        z = complex(z)
        if z == 0 or z == 1:
            raise DomainError("regularized symbol -1/log z undefined at z in {0, 1}")
        return -1.0 / log_principal(z)

    return Kernel(
        label="log-inverse",
        support=(1.0, math.inf),
        evaluate=evaluate,
        singularity=EndpointSingularity(left_exponent=_nu_kernel_singularity(),
                                        right_exponent=0.0),
        closed_form_mellin=mellin,
        weighted_integrable=False,
        mellin_override=mellin_override,
        apply_override=apply_override,
        tail_power=0.0,
    )
