"""Positive-definiteness machinery: Gram verdicts, certificates, heat kernel."""

import math

import numpy as np
import pytest

from dunklpd import DomainError, InputError, make_config
from dunklpd.functions import gaussian, gaussian_density, generalized_cauchy, bessel_k_profile
from dunklpd.identities import _indefinite_profile
from dunklpd.posdef import (
    PointSet,
    bessel_integral_identity,
    bochner_certify,
    bochner_forward,
    bound_check,
    builtin_points,
    gram,
    heat_kernel,
    heat_kernel_mass,
    kernel_independence,
    quadratic_form,
    quadratic_form_heat,
    strict_pd_certify,
)
from dunklpd.quadrature import QuadratureSpec


class TestPointSets:
    def test_builtin_sizes_and_coefficients(self):
        for n in (2, 5, 8):
            ps = builtin_points(1, n)
            assert ps.size == n and ps.points.shape == (n, 1)
        ps = builtin_points(2, 3, coefficients=np.array([1.0, 2.0, -1.0]))
        assert ps.coefficients is not None

    def test_point_set_validation(self):
        with pytest.raises(InputError):
            PointSet(np.array([[0.0], [1.0]]), coefficients=np.array([1.0]))
        with pytest.raises(InputError):
            PointSet(np.array([[0.5], [0.5]]))
        with pytest.raises(InputError):
            PointSet(np.array([[0.0], [1.0]]), coefficients=np.array([0.0, 0.0]))


class TestGram:
    def test_gaussian_gram_is_spd(self, cfg_half):
        rep = gram(cfg_half, None, gaussian(1.0), builtin_points(1, 5))
        assert rep.psd and rep.spd
        assert rep.hermitian_residual < 1e-12
        assert rep.min_eigenvalue > 0

    def test_cauchy_gram_is_spd(self, cfg_plane):
        rep = gram(cfg_plane, None, generalized_cauchy(4.0), builtin_points(2, 4))
        assert rep.psd and rep.spd

    def test_indefinite_profile_fails_psd(self, cfg_half):
        rep = gram(cfg_half, None, _indefinite_profile(cfg_half), builtin_points(1, 4))
        assert not rep.psd
        # the most negative eigenvalue is pinned by regression
        np.testing.assert_allclose(rep.min_eigenvalue, -0.2638571255, rtol=1e-5)

    def test_quadratic_form_needs_coefficients(self, cfg_half):
        with pytest.raises(InputError):
            quadratic_form(cfg_half, None, gaussian(1.0), builtin_points(1, 3))

    def test_quadratic_form_nonnegative_for_pd_function(self, cfg_half, rng):
        coeff = rng.normal(size=4) + 1j * rng.normal(size=4)
        pts = builtin_points(1, 4, coefficients=coeff)
        val = quadratic_form(cfg_half, None, gaussian(1.0), pts)
        assert abs(val.imag) < 1e-10
        assert val.real > 0


class TestBochnerCertificates:
    def test_accepts_catalog_pd_functions(self, cfg_half):
        for phi in (gaussian(1.0), generalized_cauchy(4.0)):
            assert bochner_certify(cfg_half, None, phi).passed

    def test_rejects_indefinite_profile_with_location(self, cfg_half):
        rep = bochner_certify(cfg_half, None, _indefinite_profile(cfg_half))
        assert not rep.passed
        # frozen dip: minimum near -5.1965e-2 at xi = -3.55
        np.testing.assert_allclose(rep.computed, 0.051964989312446044, rtol=1e-6)
        assert "-3.55" in rep.notes

    def test_forward_route_demands_nonnegative_input(self, cfg_half):
        with pytest.raises(InputError):
            bochner_forward(cfg_half, None, _indefinite_profile(cfg_half))

    def test_forward_route_returns_exact_partner(self, cfg_half):
        out = bochner_forward(cfg_half, None, gaussian_density(1.0))
        assert out == gaussian(1.0)

    def test_strict_certificate(self, cfg_half):
        rep = strict_pd_certify(cfg_half, None, gaussian(1.0))
        assert rep.passed
        with pytest.raises(InputError):
            strict_pd_certify(cfg_half, None, _indefinite_profile(cfg_half))


class TestPhaseIndependence:
    PROBES = np.linspace(-4.0, 4.0, 64).reshape(-1, 1)

    def test_distinct_points_give_wellseparated_singular_value(self, cfg_half):
        sigma = kernel_independence(cfg_half, np.array([[0.0], [1.0], [2.0]]), self.PROBES)
        np.testing.assert_allclose(sigma, 3.658781518851778, rtol=1e-9)
        assert sigma > 1e-3

    def test_duplicate_points_collapse(self, cfg_half):
        xs = np.array([[0.0], [1.0], [1.0]])
        with pytest.raises(InputError):
            kernel_independence(cfg_half, xs, self.PROBES)
        sigma = kernel_independence(cfg_half, xs, self.PROBES, enforce_distinct=False)
        assert sigma <= 1e-12

    def test_needs_enough_probes(self, cfg_half):
        with pytest.raises(InputError):
            kernel_independence(cfg_half, np.zeros((3, 1)), np.zeros((2, 1)))


class TestStructuralBounds:
    def test_translate_diagonal_bounds(self, cfg_half, rng):
        xs = rng.uniform(-3.0, 3.0, size=(12, 1))
        rep = bound_check(cfg_half, None, gaussian(1.0), xs)
        assert rep.passed


class TestHeatKernel:
    def test_symmetry_and_positivity(self, cfg_half, rng):
        for _ in range(20):
            t = float(rng.uniform(0.05, 3.0))
            x = rng.uniform(-3, 3, size=1)
            y = rng.uniform(-3, 3, size=1)
            v = heat_kernel(cfg_half, t, x, y)
            w = heat_kernel(cfg_half, t, y, x)
            assert v >= 0.0
            np.testing.assert_allclose(v, w, rtol=1e-12)

    def test_free_case_is_classical(self, cfg_free, rng):
        for _ in range(10):
            t = float(rng.uniform(0.1, 2.0))
            x = rng.uniform(-2, 2, size=1)
            y = rng.uniform(-2, 2, size=1)
            classical = (4 * math.pi * t) ** -0.5 * math.exp(-((x[0] - y[0]) ** 2) / (4 * t))
            np.testing.assert_allclose(heat_kernel(cfg_free, t, x, y), classical, rtol=1e-10)

    def test_large_argument_does_not_overflow(self, cfg_half):
        v = heat_kernel(cfg_half, 0.01, np.array([50.0]), np.array([50.0]))
        assert np.isfinite(v) and v > 0

    def test_mass_normalized(self, cfg_half):
        rep = heat_kernel_mass(cfg_half, None, 1.0, np.array([0.8]))
        assert rep.passed
        np.testing.assert_allclose(rep.computed, 1.0, atol=1e-6)

    def test_rejects_nonpositive_time(self, cfg_half):
        with pytest.raises(DomainError):
            heat_kernel(cfg_half, 0.0, np.array([0.0]), np.array([0.0]))
        with pytest.raises(DomainError):
            quadratic_form_heat(
                cfg_half, None, gaussian(1.0), builtin_points(1, 2, coefficients=np.array([1.0, -1.0])), 0.0
            )


class TestSmoothedForm:
    def test_converges_to_gram_form(self, cfg_half):
        pts = builtin_points(1, 2, coefficients=np.array([1.0, -1.0]))
        target = quadratic_form(cfg_half, None, gaussian(1.0), pts)
        gaps = [
            abs(quadratic_form_heat(cfg_half, None, gaussian(1.0), pts, t) - target)
            for t in (0.4, 0.2, 0.1, 0.05, 0.0125)
        ]
        # gap shrinks monotonically with the smoothing time; the asymptotic
        # linear rate only sets in well below these times
        assert all(a > b for a, b in zip(gaps, gaps[1:]))
        assert gaps[-1] < 0.2 * gaps[0]


class TestRadialMassIdentity:
    # radius 30 keeps the e^-r profile tail below the identity tolerance
    _SPEC = QuadratureSpec(30.0, 256)

    def test_matches_oracle_constant(self, cfg_half):
        p = cfg_half.gamma + 0.5 + 2.0
        rep = bessel_integral_identity(cfg_half, self._SPEC, p)
        assert rep.passed
        oracle = math.gamma(p) * 2.0 ** (p - 1.0) / cfg_half.mehta
        np.testing.assert_allclose(rep.expected, oracle, rtol=1e-13)

    def test_alternate_constant_stays_rejected(self, cfg_half):
        # a plausible-looking alternate normalization differs by 2^-(2p-2);
        # lock the rejection so a future edit cannot silently flip to it
        p = cfg_half.gamma + 0.5 + 2.0
        rep = bessel_integral_identity(cfg_half, self._SPEC, p)
        alternate = math.gamma(p) / (cfg_half.mehta * 2.0 ** (p - 1.0))
        assert "non-matching" in rep.notes
        assert abs(rep.computed - alternate) > 0.9 * abs(rep.computed - rep.computed * 2.0 ** -(2 * p - 2))
        np.testing.assert_allclose(alternate / rep.expected, 2.0 ** -(2 * p - 2), rtol=1e-12)

    def test_domain_edge(self, cfg_half):
        with pytest.raises(DomainError):
            bessel_integral_identity(cfg_half, None, 1.2)
