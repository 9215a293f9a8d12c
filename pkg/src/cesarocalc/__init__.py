"""Functional calculus of continuous Cesaro operators.

Numerical realization of the Hausdorff-operator calculus of the Cesaro
operator on L2 of the line, half-line and unit interval: kernel catalog,
Mellin symbols on the critical line, fractional powers (Hoelder means),
resolvents, the logarithm's resolvent/inverse via the Volterra function,
and the spectral curves and norms that go with them.
"""

from .errors import (BranchError, CesaroCalcError, DivergenceSuspected,
                     DomainError, OnSpectrum, PoleError, SlowDecay,
                     SpectrumError, TailUnbounded, ToleranceNotMet,
                     UnboundedAbove, VanishingViolation)
from .special import (NuEvalConfig, cpow, gamma_complex, log_principal,
                      volterra_nu, volterra_nu_batch, zeta_righthalf)
from .quadrature import (EndpointSingularity, IntegralResult, QuadratureConfig,
                         integrate_critical_line, integrate_finite,
                         integrate_semiinfinite)
from .kernels import (Kernel, cesaro_kernel, copson_kernel,
                      fractional_part_kernel, generalized_cesaro_kernel,
                      hardy_kernel, holder_kernel, log_inverse_kernel,
                      log_resolvent_kernel)
from .operators import (DomainSpace, HausdorffOperator, TestFunction, apply,
                        exp_decay, fractional_power_apply, indicator_unit,
                        log_inverse_apply, log_resolvent_apply,
                        make_test_function, resolvent_cesaro, triangle)
from .calculus import (ConditionReport, DecayReport, HolomorphicFunctionSpec,
                       kernel_from_function, mellin_grid, mellin_transform,
                       riemann_lebesgue_check, verify_conditions,
                       weighted_l1_norm)
from .symbols import (MatrixSymbol, SpectrumCurve, SymbolGrid,
                      log_curve_from_symbol, matrix_symbol, operator_norm,
                      resolvent_norm_log, scalar_symbol, spectral_bound,
                      spectrum_circle, spectrum_log_curve,
                      stability_surrogate, symbol_grid)

__version__ = "0.1.0"
