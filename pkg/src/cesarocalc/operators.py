"""Hausdorff operators on L2 of the line, half-line and unit interval.

The central operation is ``apply``: (H_K f)(x) = int K(u) f(ux) du over the
kernel support.  On top of it sit the composite operators of the Cesaro
calculus: the resolvent of C in its Hardy/Copson branch form, fractional
powers via the Hoelder kernels, and the resolvent and inverse of log C via
the Volterra kernels.

Test functions carry their discontinuity points; ``apply`` splits the
u-integral at every image of a breakpoint so the quadrature only ever sees
piecewise-analytic integrands.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

import numpy as np

from .errors import DomainError, SpectrumError
from .kernels import (Kernel, copson_kernel, hardy_kernel, holder_kernel,
                      log_inverse_kernel, log_resolvent_kernel)
from .quadrature import (IntegralResult, QuadratureConfig, REGULAR,
                         integrate_finite_from_ends, integrate_semiinfinite)
from .special import DEFAULT_NU_CONFIG, NuEvalConfig

__all__ = [
    "DomainSpace",
    "HausdorffOperator",
    "TestFunction",
    "make_test_function",
    "indicator_unit",
    "exp_decay",
    "triangle",
    "apply",
    "apply_result",
    "apply_callable",
    "resolvent_cesaro",
    "fractional_power_apply",
    "log_resolvent_apply",
    "log_inverse_apply",
]

_LOG2 = math.log(2.0)


class DomainSpace(Enum):
    """The three L2 geometries; UnitInterval means the bi-restriction
    (output multiplied by the indicator of (0,1))."""

    FullLine = "full-line"
    HalfLine = "half-line"
    UnitInterval = "unit-interval"


@dataclass(frozen=True)
class HausdorffOperator:
    kernel: Kernel
    domain: DomainSpace = DomainSpace.FullLine


@dataclass(frozen=True)
class TestFunction:
    """An analytic test function with quadrature metadata.

    breakpoints lists the arguments where evaluate jumps; decay_hint is the
    argument scale on which |f| has decayed (used to place semi-infinite
    tail splits).  closed_form_cesaro_action, when present, is the analytic
    (Cf)(x) used as an oracle by the operator identities.
    """

    label: str
    evaluate: Callable
    closed_form_cesaro_action: Optional[Callable] = None
    breakpoints: tuple = ()
    decay_hint: float = 1.0
    support: tuple = (-math.inf, math.inf)


def make_test_function(label, evaluate, closed_form_cesaro_action=None,
                       breakpoints=(), decay_hint=1.0,
                       support=(-math.inf, math.inf),
                       cfg: QuadratureConfig = QuadratureConfig(tolerance=1e-8)) -> TestFunction:
    """Build a TestFunction, asserting square-integrability numerically."""

    def sq(t):
        return np.abs(np.asarray(evaluate(t), dtype=complex)) ** 2

    lo, hi = support
    norm2 = 0.0
    try:
        if math.isfinite(lo) and math.isfinite(hi):
            res = integrate_finite_from_ends(lambda d: sq(lo + d),
                                             lambda d: sq(hi - d), hi - lo, cfg)
            norm2 = abs(res.value)
        else:
            if math.isfinite(lo):
                norm2 = abs(integrate_semiinfinite(sq, lo, decay_hint, cfg).value)
            elif math.isfinite(hi):
                norm2 = abs(integrate_semiinfinite(lambda t: sq(-t), -hi,
                                                   decay_hint, cfg).value)
            else:
                norm2 = abs(integrate_semiinfinite(sq, 0.0, decay_hint, cfg).value)
                norm2 += abs(integrate_semiinfinite(lambda t: sq(-t), 0.0,
                                                    decay_hint, cfg).value)
    except Exception as exc:
        raise ValueError("test function %r is not square-integrable: %s"
                         % (label, exc)) from exc
    if not math.isfinite(norm2):
        raise ValueError("test function %r has non-finite L2 norm" % label)
    return TestFunction(label, evaluate, closed_form_cesaro_action,
                        tuple(breakpoints), decay_hint, tuple(support))


# --------------------------------------------------------------------------
# stock test functions (with closed-form Cesaro actions as oracles)
# --------------------------------------------------------------------------

def indicator_unit() -> TestFunction:
    """chi_(0,1); (C f)(x) = 1 on (0,1] and 1/x past 1.

    The evaluator admits +0.0 (products underflowing from the right) so
    nested quadrature sees the right-limit; -0.0 stays excluded.
    """

    def evaluate(t):
        t = np.asarray(t, dtype=float)
        return np.where(~np.signbit(t) & (t < 1.0), 1.0 + 0.0j, 0.0 + 0.0j)

    def action(x):
        x = np.asarray(x, dtype=float)
        with np.errstate(all="ignore"):
            out = np.where(x > 1.0, 1.0 / np.where(x > 1.0, x, 1.0), 1.0)
        return np.where(x > 0.0, out, 0.0) + 0.0j

    return make_test_function("chi_(0,1)", evaluate, action,
                              breakpoints=(0.0, 1.0), support=(0.0, 1.0))


def exp_decay(p: complex = 1.0) -> TestFunction:
    """t -> e^(-p t) on (0, oo); (C f)(x) = (1 - e^(-p x))/(p x)."""
    p = complex(p)
    if not p.real > 0.0:
        raise DomainError("exp_decay needs Re p > 0")

    def evaluate(t):
        t = np.asarray(t, dtype=float)
        with np.errstate(all="ignore"):
            vals = np.exp(-p * t)
        return np.where(~np.signbit(t), vals, 0.0 + 0.0j)

    def action(x):
        x = np.asarray(x, dtype=float)
        with np.errstate(all="ignore"):
            out = np.where(x != 0.0, -np.expm1(-p * x) / (p * np.where(x != 0.0, x, 1.0)), 1.0)
        return np.where(x > 0.0, out, 0.0 + 0.0j)

    return make_test_function("exp(-%gt)" % p.real, evaluate, action,
                              breakpoints=(0.0,), decay_hint=1.0 / p.real,
                              support=(0.0, math.inf))


def triangle() -> TestFunction:
    """t -> (1-t) chi_(0,1); (C f)(x) = 1 - x/2 on (0,1], then 1/(2x)."""

    def evaluate(t):
        t = np.asarray(t, dtype=float)
        return np.where(~np.signbit(t) & (t < 1.0), (1.0 - t) + 0.0j, 0.0 + 0.0j)

    def action(x):
        x = np.asarray(x, dtype=float)
        with np.errstate(all="ignore"):
            out = np.where(x > 1.0, 0.5 / np.where(x > 1.0, x, 1.0), 1.0 - 0.5 * x)
        return np.where(x > 0.0, out, 0.0) + 0.0j

    return make_test_function("1-t on (0,1)", evaluate, action,
                              breakpoints=(0.0, 1.0), support=(0.0, 1.0))


# --------------------------------------------------------------------------
# applying operators
# --------------------------------------------------------------------------

def _u_splits(breakpoints, x, lo, hi):
    """Interior u-values where f(ux) jumps, within the open kernel support."""
    if x == 0.0:
        return []
    pts = set()
    for bp in breakpoints:
        u = bp / x
        if lo < u < hi:
            pts.add(u)
    return sorted(pts)


def _point_value(f: TestFunction, x: float, domain: DomainSpace) -> complex:
    if domain is DomainSpace.UnitInterval and not (0.0 < x < 1.0):
        return 0.0 + 0.0j
    if domain is DomainSpace.HalfLine and x < 0.0:
        return 0.0 + 0.0j
    return complex(np.asarray(f.evaluate(np.array([x])), dtype=complex)[0])


def apply_callable(kernel: Kernel, fe: Callable, x: float,
                   cfg: QuadratureConfig = QuadratureConfig(),
                   breakpoints=(), decay_hint: float = 1.0) -> IntegralResult:
    """(H_K g)(x) for a raw vectorized callable g (no domain bookkeeping).

    breakpoints are jump locations of g in its own argument; the u-integral
    is split at their preimages u = bp/x.
    """
    a, b = kernel.support
    if kernel.apply_override is not None:
        u_breaks = tuple(_u_splits(breakpoints, x, a, b))
        return kernel.apply_override(fe, x, cfg, u_breaks)

    splits = _u_splits(breakpoints, x, a, b)
    total = 0.0 + 0.0j
    err = 0.0
    evals = 0

    if math.isfinite(b):
        edges = [a] + splits + [b]
        for lo, hi in zip(edges[:-1], edges[1:]):
            def f_left(d, lo=lo):
                return kernel.evaluate(lo + d) * fe((lo + d) * x)
            if hi == b and kernel.evaluate_cov is not None:
                def f_right(d, hi=hi):
                    return kernel.evaluate_cov(d) * fe((hi - d) * x)
            else:
                def f_right(d, hi=hi):
                    return kernel.evaluate(hi - d) * fe((hi - d) * x)
            res = integrate_finite_from_ends(f_left, f_right, hi - lo, cfg)
            total += res.value
            err += res.error_estimate
            evals += res.evaluations
    else:
        edges = [a] + splits
        for lo, hi in zip(edges[:-1], edges[1:]):
            res = integrate_finite_from_ends(
                lambda d, lo=lo: kernel.evaluate(lo + d) * fe((lo + d) * x),
                lambda d, hi=hi: kernel.evaluate(hi - d) * fe((hi - d) * x),
                hi - lo, cfg)
            total += res.value
            err += res.error_estimate
            evals += res.evaluations
        start = edges[-1]
        # tail scale from f's decay in its own argument; capped so that
        # subnormal x cannot overflow the variable map
        scale = max(1.0, min(decay_hint / abs(x), 1e12)) if x != 0.0 else 1.0

        def tail(u):
            ku = kernel.evaluate(u)
            return np.where(ku == 0.0, 0.0 + 0.0j, ku * fe(u * x))

        res = integrate_semiinfinite(tail, start, scale, cfg)
        total += res.value
        err += res.error_estimate
        evals += res.evaluations
    return IntegralResult(total, err, max(evals, 1))


def apply_result(op: HausdorffOperator, f: TestFunction, x: float,
                 cfg: QuadratureConfig = QuadratureConfig()) -> IntegralResult:
    """(H_K f)(x) with quadrature diagnostics."""
    if op.domain is DomainSpace.UnitInterval and not (0.0 < x < 1.0):
        return IntegralResult(0.0 + 0.0j, 0.0, 1)
    if op.domain is DomainSpace.HalfLine and x < 0.0:
        return IntegralResult(0.0 + 0.0j, 0.0, 1)
    return apply_callable(op.kernel, f.evaluate, x, cfg,
                          breakpoints=f.breakpoints, decay_hint=f.decay_hint)


def apply(op: HausdorffOperator, f: TestFunction, x: float,
          cfg: QuadratureConfig = QuadratureConfig()) -> complex:
    """(H_K f)(x) = int K(u) f(ux) du over the kernel support.

    On UnitInterval the bi-restriction zeroes the output outside (0,1);
    on HalfLine negative x gives 0 (functions live on R+).
    """
    return apply_result(op, f, x, cfg).value


# --------------------------------------------------------------------------
# composite operators of the Cesaro calculus
# --------------------------------------------------------------------------

def resolvent_cesaro(lam: complex, f: TestFunction, x: float,
                     domain: DomainSpace = DomainSpace.FullLine,
                     cfg: QuadratureConfig = QuadratureConfig()) -> complex:
    """R(lambda, C) f at x, by the Hardy/Copson branch formulas.

    |lambda - 1| > 1: R = lambda^-2 P_(1/lambda) + lambda^-1 I    (Hardy branch)
    |lambda - 1| < 1: R = lambda^-1 I - lambda^-2 Q_(1-1/lambda)  (Copson branch)

    The Copson branch comes from Q_a = -(1-a)^-1((I-(1-a)C)^-1 - I) with
    lambda = (1-a)^-1, which rearranges to Q = lambda I - lambda^2 R.

    On the unit interval only the exterior branch exists (the spectrum is
    the full disc there); on the circle |lambda - 1| = 1 the resolvent does
    not exist at all.
    """
    lam = complex(lam)
    d = abs(lam - 1.0)
    if abs(d - 1.0) < 1e-12:
        raise SpectrumError("lambda = %r lies on the spectrum circle |z-1|=1" % (lam,))
    fx = _point_value(f, x, domain)
    if d > 1.0:
        alpha = 1.0 / lam
        P = apply(HausdorffOperator(hardy_kernel(alpha), domain), f, x, cfg)
        return P / lam ** 2 + fx / lam
    if domain is DomainSpace.UnitInterval:
        raise SpectrumError(
            "lambda = %r is inside the closed disc spectrum of C on L2[0,1]" % (lam,))
    alpha = 1.0 - 1.0 / lam
    Q = apply(HausdorffOperator(copson_kernel(alpha), domain), f, x, cfg)
    return fx / lam - Q / lam ** 2


def fractional_power_apply(alpha: complex, f: TestFunction, x: float,
                           domain: DomainSpace = DomainSpace.FullLine,
                           cfg: QuadratureConfig = QuadratureConfig()) -> complex:
    """(C^alpha f)(x) = (H_alpha f)(x), the Hoelder mean of order alpha."""
    alpha = complex(alpha)
    if not alpha.real > 0.0:
        raise DomainError("fractional power requires Re alpha > 0")
    return apply(HausdorffOperator(holder_kernel(alpha), domain), f, x, cfg)


def log_resolvent_apply(lam: complex, f: TestFunction, x: float,
                        cfg: QuadratureConfig = QuadratureConfig(),
                        nu_cfg: NuEvalConfig = DEFAULT_NU_CONFIG) -> complex:
    """R(lambda, log C) f at x, via the Volterra-function kernel."""
    lam = complex(lam)
    if not lam.real > _LOG2:
        raise DomainError("log-resolvent requires Re lambda > log 2")
    kernel = log_resolvent_kernel(lam, nu_cfg)
    return apply(HausdorffOperator(kernel, DomainSpace.FullLine), f, x, cfg)


def log_inverse_apply(f: TestFunction, x: float,
                      cfg: QuadratureConfig = QuadratureConfig(),
                      nu_cfg: NuEvalConfig = DEFAULT_NU_CONFIG) -> complex:
    """((log C)^-1 f)(x) = -int_1^oo u^-1 nu(log u, -1) f(ux) du.

    The kernel grows to a constant at infinity, so f must decay fast enough;
    slow decay surfaces as DivergenceSuspected from the tail refinement.
    """
    kernel = log_inverse_kernel(nu_cfg)
    return apply(HausdorffOperator(kernel, DomainSpace.FullLine), f, x, cfg)
