"""Kernel catalog tests: pointwise values, closed forms, (b)-integrals."""

import math

import numpy as np
import pytest

from cesarocalc import (DivergenceSuspected, DomainError, QuadratureConfig,
                        cesaro_kernel, copson_kernel, fractional_part_kernel,
                        generalized_cesaro_kernel, hardy_kernel, holder_kernel,
                        log_inverse_kernel, log_resolvent_kernel, mellin_grid,
                        weighted_l1_norm, zeta_righthalf)

CFG = QuadratureConfig()
GRID_S = np.array([0.0, 1.0, -1.0, 5.0, -5.0, 20.0, -20.0, 50.0, -50.0])


def ev(kernel, u):
    return complex(kernel.evaluate(np.array([float(u)]))[0])


class TestCesaro:
    def test_values(self):
        k = cesaro_kernel()
        assert ev(k, 0.5) == 1.0
        assert ev(k, 2.0) == 0.0
        assert k.closed_form_mellin(0.5) == pytest.approx(2.0)


class TestHardy:
    def test_alpha_zero_matches_cesaro(self):
        k0 = hardy_kernel(0.0)
        c = cesaro_kernel()
        us = np.linspace(0.01, 1.5, 40)
        assert np.allclose(k0.evaluate(us), c.evaluate(us))
        for z in (0.5, 0.5 - 2j):
            assert k0.closed_form_mellin(z) == pytest.approx(c.closed_form_mellin(z))

    def test_closed_form(self):
        k = hardy_kernel(0.25)
        assert k.closed_form_mellin(0.5) == pytest.approx(4.0)

    def test_pointwise(self):
        assert ev(hardy_kernel(0.25), 0.5) == pytest.approx(0.5 ** -0.25, rel=1e-14)

    def test_domain(self):
        with pytest.raises(DomainError):
            hardy_kernel(0.5)
        with pytest.raises(DomainError):
            hardy_kernel(1.0 + 1j)


class TestCopson:
    def test_closed_form(self):
        assert copson_kernel(0.0).closed_form_mellin(0.5) == pytest.approx(2.0)

    def test_pointwise(self):
        k = copson_kernel(0.25)
        assert ev(k, 0.5) == 0.0           # outside (1, oo)
        assert ev(k, 2.0) == pytest.approx(2.0 ** -0.75, rel=1e-14)

    def test_domain(self):
        with pytest.raises(DomainError):
            copson_kernel(0.6)


class TestHolder:
    def test_alpha_one_is_cesaro(self):
        k = holder_kernel(1.0)
        c = cesaro_kernel()
        us = np.linspace(0.01, 0.99, 40)
        assert np.allclose(k.evaluate(us), c.evaluate(us))

    def test_pointwise(self):
        assert ev(holder_kernel(2.0), 0.5) == pytest.approx(math.log(2.0), rel=1e-14)

    def test_closed_form(self):
        assert holder_kernel(2.0).closed_form_mellin(0.5) == pytest.approx(4.0)

    def test_domain(self):
        with pytest.raises(DomainError):
            holder_kernel(0.0)
        with pytest.raises(DomainError):
            holder_kernel(-1.0 + 2j)


class TestGeneralizedCesaro:
    def test_alpha_one_is_cesaro(self):
        k = generalized_cesaro_kernel(1.0)
        c = cesaro_kernel()
        us = np.linspace(0.01, 0.99, 40)
        assert np.allclose(k.evaluate(us), c.evaluate(us))

    def test_beta_closed_form(self):
        # 2 B(2, 1/2) = 8/3 by the Beta-function oracle
        assert generalized_cesaro_kernel(2.0).closed_form_mellin(0.5) == \
            pytest.approx(8.0 / 3.0, rel=1e-12)

    def test_pointwise(self):
        assert ev(generalized_cesaro_kernel(2.0), 0.25) == pytest.approx(1.5)

    def test_domain(self):
        with pytest.raises(DomainError):
            generalized_cesaro_kernel(0.0)


class TestFractionalPart:
    def test_pointwise(self):
        k = fractional_part_kernel()
        assert ev(k, 0.4) == pytest.approx(0.5)        # {2.5}
        assert ev(k, 2.0) == 0.0

    def test_closed_form_at_two(self):
        k = fractional_part_kernel()
        assert k.closed_form_mellin(2.0).real == pytest.approx(
            1.0 - math.pi ** 2 / 12.0, rel=1e-12)

    def test_numeric_matches_closed_at_half(self):
        k = fractional_part_kernel()
        num = k.mellin_override(0.5 + 0.0j, CFG).value
        closed = k.closed_form_mellin(0.5 + 0.0j)
        assert abs(num - closed) < 1e-6
        # pinned via zeta(1/2): -2 - 2 zeta(1/2)
        assert num.real == pytest.approx(0.920709017619173625779, rel=1e-10)


class TestLogResolvent:
    def test_closed_form(self):
        k = log_resolvent_kernel(1.0)
        assert k.closed_form_mellin(0.5).real == pytest.approx(
            1.0 / (1.0 + math.log(0.5)), rel=1e-12)

    def test_pointwise_oracle(self):
        # e^-1 nu(e^-1 log 2, -1), 25-digit oracle
        assert ev(log_resolvent_kernel(1.0), 0.5).real == pytest.approx(
            0.5978538342296791555280494, rel=1e-10)

    def test_numeric_mellin_complex_point(self):
        k = log_resolvent_kernel(2.0)
        z = 0.5 - 1j
        num = k.mellin_override(z, CFG).value
        assert abs(num - k.closed_form_mellin(z)) < 1e-6

    def test_domain(self):
        with pytest.raises(DomainError):
            log_resolvent_kernel(math.log(2.0))
        with pytest.raises(DomainError):
            log_resolvent_kernel(0.3)


class TestLogInverse:
    def test_pointwise_oracle(self):
        # -e^-1 nu(1,-1) with the Fransen-Robinson constant
        assert ev(log_inverse_kernel(), math.e).real == pytest.approx(
            -1.032920947575257058935556, rel=1e-10)

    def test_regularized_symbol_at_zero(self):
        k = log_inverse_kernel()
        assert k.closed_form_mellin(0.5).real == pytest.approx(
            1.0 / math.log(2.0), rel=1e-14)

    def test_numeric_matches_at_s0(self):
        k = log_inverse_kernel()
        num = k.mellin_override(0.5 + 0.0j, CFG).value
        assert abs(num - 1.0 / math.log(2.0)) < 1e-6

    def test_condition_b_violated(self):
        with pytest.raises(DivergenceSuspected):
            weighted_l1_norm(log_inverse_kernel(), CFG)


class TestCatalogInvariants:
    KERNELS = [cesaro_kernel(), hardy_kernel(0.25), copson_kernel(0.25),
               holder_kernel(2.0), holder_kernel(0.5),
               generalized_cesaro_kernel(2.0), fractional_part_kernel(),
               log_resolvent_kernel(1.0)]

    @pytest.mark.parametrize("kernel", KERNELS, ids=lambda k: k.label + str(k.params))
    def test_mellin_matches_closed_form_on_grid(self, kernel):
        zs = 0.5 - 1j * GRID_S
        num = mellin_grid(kernel, zs, CFG)
        closed = np.array([kernel.closed_form_mellin(z) for z in zs])
        rel = np.max(np.abs(num - closed) / np.abs(closed))
        assert rel < 1e-6

    @pytest.mark.parametrize("kernel", KERNELS, ids=lambda k: k.label + str(k.params))
    def test_condition_b_finite_and_reproducible(self, kernel):
        v1 = weighted_l1_norm(kernel, QuadratureConfig(tolerance=1e-10))
        v2 = weighted_l1_norm(kernel, QuadratureConfig(tolerance=1e-8))
        assert math.isfinite(v1) and v1 > 0
        assert abs(v1 - v2) <= 1e-6 * max(1.0, v1)

    def test_uniqueness_surrogate(self):
        us = np.linspace(0.01, 0.99, 53)
        pairs = [(hardy_kernel(0.25), hardy_kernel(0.25)),
                 (holder_kernel(1 + 1j), holder_kernel(1 + 1j)),
                 (log_resolvent_kernel(1.0), log_resolvent_kernel(1.0))]
        for k1, k2 in pairs:
            assert (k1.label, k1.params) == (k2.label, k2.params)
            assert np.array_equal(k1.evaluate(us), k2.evaluate(us))

    def test_vanishing_outside_support(self):
        for kernel in self.KERNELS + [log_inverse_kernel()]:
            lo, hi = kernel.support
            probes = [-1.0, -0.01]
            if lo == 1.0:
                probes += [0.3, 0.999]
            if math.isfinite(hi):
                probes += [1.001, 7.0]
            vals = kernel.evaluate(np.array(probes))
            assert np.all(vals == 0)
