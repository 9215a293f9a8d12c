"""Exception types shared across the library.

Every numerical failure mode has a dedicated class so callers can react to
"the integral diverged" differently from "you asked for a pole".
"""


class CesaroCalcError(Exception):
    """Base class for all library errors."""


class PoleError(CesaroCalcError):
    """Function evaluated at one of its poles (e.g. Gamma at -2, zeta at 1)."""


class BranchError(CesaroCalcError):
    """Complex power requested outside the principal right-half-plane branch."""


class DomainError(CesaroCalcError):
    """Argument outside the domain an operation is defined on."""


class ToleranceNotMet(CesaroCalcError):
    """Quadrature exhausted its subdivision budget before reaching tolerance."""

    def __init__(self, message, value=None, error_estimate=None):
        super().__init__(message)
        self.value = value
        self.error_estimate = error_estimate


class DivergenceSuspected(CesaroCalcError):
    """Tail refinement of an improper integral failed to shrink."""


class SlowDecay(CesaroCalcError):
    """Critical-line integrand decays too slowly for the truncation contract."""


class SpectrumError(CesaroCalcError):
    """Resolvent requested at a point of (or on the wrong side of) the spectrum."""


class OnSpectrum(CesaroCalcError):
    """Resolvent norm requested exactly on the spectrum."""


class TailUnbounded(CesaroCalcError):
    """No decay detected while bounding a symbol supremum at infinity."""


class UnboundedAbove(CesaroCalcError):
    """Spectral-bound refinement kept growing."""


class VanishingViolation(CesaroCalcError):
    """Holomorphic function handed to the inverse Mellin step with F(0) != 0."""
