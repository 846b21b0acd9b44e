"""Tests for the transform quadratures, the spectral symbol, and the
derivative helpers.

Frozen numbers here come from the oracle module (series sine integrals,
nested adaptive Simpson of the defining double integral); the quadrature
and spectral routes are also cross-checked against each other since they
approximate the same operator from opposite ends.
"""

import numpy as np
import pytest

from csit.grid import UniformGrid, Series
from csit.operators import (
    CsitParams,
    complex_step_derivative,
    csit_quadrature,
    csit_quadrature_direct,
    csit_spectral,
    csit_symbol,
    fd_centered,
    hilbert_fft,
    pseudospectral_derivative,
    table1_verify,
)
from csit.special import shi, si, sinc_kernel

from reference import csit_bruteforce


def _band_limited_series(seed: int, n: int, max_mode: int) -> Series:
    rng = np.random.default_rng(seed)
    grid = UniformGrid(x0=0.0, length=2.0 * np.pi, n=n)
    vals = np.zeros(n)
    for m in rng.integers(1, max_mode + 1, size=5):
        vals += rng.standard_normal() * np.sin(m * grid.nodes + rng.uniform(0, 2 * np.pi))
    return Series(grid, vals)


class TestCsitParams:
    def test_default_tau_min(self):
        p = CsitParams(eta_half_width=0.1, tau_max=0.2, n_tau=8)
        assert p.tau_min == pytest.approx(0.2 / 8)
        # a single tau node still needs tau_min strictly inside (0, Z)
        q = CsitParams(eta_half_width=0.1, tau_max=0.2, n_tau=1)
        assert 0.0 < q.tau_min < q.tau_max

    def test_eta_nodes_symmetric_midpoints(self):
        p = CsitParams(eta_half_width=0.3, tau_max=0.1, n_eta=6)
        nodes, weights = p.eta_nodes_weights()
        np.testing.assert_allclose(nodes, -nodes[::-1], atol=1e-15)
        assert np.sum(weights) == pytest.approx(0.6)
        assert nodes[0] == pytest.approx(-0.3 + 0.05)

    def test_tau_weights_sum_to_tau_max(self):
        # the short-strip patch folds [0, tau_min) into the first weight,
        # so the weights always resolve the full [0, Z] measure
        for rule in ("trapezoid", "midpoint"):
            p = CsitParams(eta_half_width=0.1, tau_max=0.25, n_tau=9, rule=rule)
            _, weights = p.tau_nodes_weights()
            assert np.sum(weights) == pytest.approx(0.25, abs=1e-15)

    def test_tau_nodes_stay_inside_interval(self):
        p = CsitParams(eta_half_width=0.1, tau_max=0.2, tau_min=0.01, n_tau=7, rule="midpoint")
        nodes, _ = p.tau_nodes_weights()
        assert np.all(nodes > 0.01 - 1e-15)
        assert np.all(nodes < 0.2)

    def test_zero_eta_width_collapses_eta_rule(self):
        p = CsitParams(eta_half_width=0.0, tau_max=0.1)
        nodes, weights = p.eta_nodes_weights()
        np.testing.assert_allclose(nodes, [0.0])
        np.testing.assert_allclose(weights, [1.0])
        assert p.normalization == pytest.approx(0.1)

    def test_normalization_is_rectangle_area(self):
        p = CsitParams(eta_half_width=0.2, tau_max=0.5)
        assert p.normalization == pytest.approx(2.0 * 0.2 * 0.5)

    def test_validation(self):
        with pytest.raises(ValueError):
            CsitParams(eta_half_width=-0.1, tau_max=0.1)
        with pytest.raises(ValueError):
            CsitParams(eta_half_width=0.1, tau_max=0.0)
        with pytest.raises(ValueError):
            CsitParams(eta_half_width=0.1, tau_max=0.1, tau_min=0.1)
        with pytest.raises(ValueError):
            CsitParams(eta_half_width=0.1, tau_max=0.1, tau_min=-0.01)
        with pytest.raises(ValueError):
            CsitParams(eta_half_width=0.1, tau_max=0.1, rule="simpson")
        with pytest.raises(ValueError):
            CsitParams(eta_half_width=0.1, tau_max=0.1, n_tau=0)


class TestSymbol:
    def test_frozen_values(self):
        assert csit_symbol(1.0, 0.1, 0.1) == pytest.approx(0.9988889629780923j, abs=1e-13)
        assert csit_symbol(1.0, 0.0, 0.1) == pytest.approx(1.0005557222505701j, abs=1e-13)

    def test_matches_factor_form(self):
        for k in (0.3, 1.7, 4.0):
            expected = 1j * (shi(k * 0.15) / 0.15) * sinc_kernel(k * 0.05)
            assert csit_symbol(k, 0.05, 0.15) == pytest.approx(expected, abs=1e-13)

    def test_purely_imaginary_and_odd(self):
        ks = np.array([-2.0, -0.5, 0.5, 2.0])
        sigma = csit_symbol(ks, 0.1, 0.1)
        np.testing.assert_allclose(sigma.real, 0.0, atol=0.0)
        np.testing.assert_allclose(sigma, -sigma[::-1], atol=1e-14)

    def test_zero_at_origin(self):
        assert csit_symbol(0.0, 0.1, 0.1) == 0.0

    def test_small_k_expansion(self):
        # sigma/(ik) = 1 - (kH)^2/6 + (kZ)^2/18 + O(k^4)
        H, Z = 0.02, 0.03
        for k in (0.1, 0.5, 1.0):
            ratio = (csit_symbol(k, H, Z) / (1j * k)).real
            model = 1.0 - (k * H) ** 2 / 6.0 + (k * Z) ** 2 / 18.0
            assert abs(ratio - model) < 1e-8


class TestClosedForms:
    # smoothing factor shared by the sin and cos rows at H = Z = 0.1
    SCALE = 0.9988889629780923

    def test_sin_maps_to_scaled_cos(self):
        p = CsitParams(eta_half_width=0.1, tau_max=0.1, tau_min=0.1 / 512, n_eta=64, n_tau=64)
        xs = np.linspace(0.0, 2.0 * np.pi, 20, endpoint=False)
        out = csit_quadrature_direct(np.sin, xs, p)
        assert np.max(np.abs(out - self.SCALE * np.cos(xs))) < 2e-6

    def test_cos_maps_to_scaled_negative_sin(self):
        p = CsitParams(eta_half_width=0.1, tau_max=0.1, tau_min=0.1 / 512, n_eta=64, n_tau=64)
        xs = np.linspace(0.0, 2.0 * np.pi, 20, endpoint=False)
        out = csit_quadrature_direct(np.cos, xs, p)
        assert np.max(np.abs(out + self.SCALE * np.sin(xs))) < 2e-6

    def test_exp_maps_to_scaled_exp(self):
        # the growing exponential picks up si(Z)/Z and sinh(H)/H factors
        H = Z = 0.1
        p = CsitParams(eta_half_width=H, tau_max=Z, tau_min=Z / 512, n_eta=64, n_tau=64)
        xs = np.linspace(-1.0, 1.0, 9)
        out = csit_quadrature_direct(np.exp, xs, p)
        scale = (si(Z) / Z) * (np.sinh(H) / H)
        assert np.max(np.abs(out - scale * np.exp(xs))) < 2e-6

    def test_gaussian_matches_frozen_bruteforce(self):
        # reference.csit_bruteforce(exp(-z^2), 0.5, 0.1, 0.1), frozen
        p = CsitParams(eta_half_width=0.1, tau_max=0.1, tau_min=0.1 / 512, n_eta=128, n_tau=128)
        out = csit_quadrature_direct(lambda z: np.exp(-z * z), np.array([0.5]), p)
        assert out[0] == pytest.approx(-0.7744764827884565, abs=1e-6)


class TestErrorBound:
    def test_second_order_bound_with_margin(self):
        # |C f - f'| <= (M/6) H^2 + (M/18) Z^2 for f = sin (M = 1), with a
        # 10 percent allowance for the residual quadrature error
        xs = np.linspace(0.0, 2.0 * np.pi, 17)
        for H in (0.05, 0.2):
            for Z in (0.05, 0.2):
                p = CsitParams(eta_half_width=H, tau_max=Z, tau_min=Z / 512, n_eta=64, n_tau=64)
                err = np.max(np.abs(csit_quadrature_direct(np.sin, xs, p) - np.cos(xs)))
                assert err <= 1.1 * (H * H / 6.0 + Z * Z / 18.0)

    def test_diagonal_slope_is_two(self):
        xs = np.linspace(0.0, 2.0 * np.pi, 17)
        scales = np.array([0.05, 0.1, 0.15, 0.2])
        errs = []
        for s0 in scales:
            p = CsitParams(eta_half_width=s0, tau_max=s0, tau_min=s0 / 512, n_eta=64, n_tau=64)
            errs.append(np.max(np.abs(csit_quadrature_direct(np.sin, xs, p) - np.cos(xs))))
        slope = np.polyfit(np.log(scales), np.log(errs), 1)[0]
        assert slope == pytest.approx(2.0, abs=0.3)


class TestQuadratureRoute:
    def test_converges_to_spectral_route(self):
        s = _band_limited_series(seed=43, n=256, max_mode=32)
        exact = csit_spectral(s, 0.1, 0.1).values
        norm = np.linalg.norm(exact)
        errs = []
        for m in (16, 64):
            p = CsitParams(
                eta_half_width=0.1, tau_max=0.1, tau_min=0.1 / (4 * m), n_eta=m, n_tau=m
            )
            approx = csit_quadrature(s, p).values
            errs.append(np.linalg.norm(approx - exact) / norm)
        assert errs[1] < errs[0]
        assert errs[1] < 1e-3

    def test_linearity_with_complex_scalars(self):
        rng = np.random.default_rng(47)
        grid = UniformGrid(x0=0.0, length=2.0 * np.pi, n=64)
        a = Series(grid, rng.standard_normal(64))
        b = Series(grid, rng.standard_normal(64))
        alpha = 0.8 + 2.1j
        p = CsitParams(eta_half_width=0.05, tau_max=0.05, n_eta=8, n_tau=8)
        combo = Series(grid, alpha * a.values + b.values)
        lhs = csit_quadrature(combo, p).values
        rhs = alpha * csit_quadrature(a, p).values + csit_quadrature(b, p).values
        assert np.max(np.abs(lhs - rhs)) < 1e-12

    def test_translation_equivariance(self):
        s = _band_limited_series(seed=53, n=128, max_mode=12)
        p = CsitParams(eta_half_width=0.08, tau_max=0.08, n_eta=8, n_tau=8)
        rolled = Series(s.grid, np.roll(s.values, 5))
        lhs = csit_quadrature(rolled, p).values
        rhs = np.roll(csit_quadrature(s, p).values, 5)
        assert np.max(np.abs(lhs - rhs)) < 1e-11

    def test_direct_matches_bruteforce_on_gaussian(self):
        f = lambda z: np.exp(-z * z)
        p = CsitParams(eta_half_width=0.1, tau_max=0.1, tau_min=0.1 / 512, n_eta=128, n_tau=128)
        xs = np.array([-0.8, 0.0, 1.2])
        approx = csit_quadrature_direct(f, xs, p)
        for xi, ai in zip(xs, approx):
            ref = csit_bruteforce(f, float(xi), 0.1, 0.1)
            assert abs(ai - ref) < 2e-6

    def test_complex_series_handled_partwise(self):
        rng = np.random.default_rng(59)
        grid = UniformGrid(x0=0.0, length=2.0 * np.pi, n=64)
        re, im = rng.standard_normal(64), rng.standard_normal(64)
        p = CsitParams(eta_half_width=0.05, tau_max=0.05, n_eta=8, n_tau=8)
        full = csit_quadrature(Series(grid, re + 1j * im), p).values
        parts = (
            csit_quadrature(Series(grid, re), p).values
            + 1j * csit_quadrature(Series(grid, im), p).values
        )
        assert np.max(np.abs(full - parts)) < 1e-12


class TestSpectralRoute:
    def test_single_mode_exact(self):
        grid = UniformGrid(x0=0.0, length=2.0 * np.pi, n=64)
        s = Series(grid, np.sin(3.0 * grid.nodes))
        out = csit_spectral(s, 0.1, 0.1)
        scale = sinc_kernel(0.3) * shi(0.3) / 0.1
        np.testing.assert_allclose(out.values, scale * np.cos(3.0 * grid.nodes), atol=1e-13)

    def test_real_in_real_out(self):
        s = _band_limited_series(seed=61, n=64, max_mode=8)
        out = csit_spectral(s, 0.1, 0.1)
        assert out.values.dtype == np.float64

    def test_even_grid_nyquist_mode_annihilated(self):
        grid = UniformGrid(x0=0.0, length=2.0 * np.pi, n=32)
        s = Series(grid, (-1.0) ** np.arange(32) * 1.0)
        out = csit_spectral(s, 0.1, 0.1)
        assert np.max(np.abs(out.values)) < 1e-13


class TestDerivativeHelpers:
    def test_pseudospectral_exact_for_band_limited(self):
        grid = UniformGrid(x0=0.0, length=2.0 * np.pi, n=64)
        s = Series(grid, np.sin(5.0 * grid.nodes))
        out = pseudospectral_derivative(s)
        np.testing.assert_allclose(out.values, 5.0 * np.cos(5.0 * grid.nodes), atol=1e-11)

    def test_pseudospectral_kills_nyquist(self):
        grid = UniformGrid(x0=0.0, length=2.0 * np.pi, n=32)
        s = Series(grid, (-1.0) ** np.arange(32) * 1.0)
        assert np.max(np.abs(pseudospectral_derivative(s).values)) < 1e-13

    def test_fd_centered_dispersion(self):
        # D2[sin(kx)] = (sin(k dx)/dx) cos(kx), reduced slope at high k
        grid = UniformGrid(x0=0.0, length=2.0 * np.pi, n=40)
        k = 7.0
        s = Series(grid, np.sin(k * grid.nodes))
        out = fd_centered(s)
        factor = np.sin(k * grid.dx) / grid.dx
        np.testing.assert_allclose(out.values, factor * np.cos(k * grid.nodes), atol=1e-12)

    def test_fd_centered_second_order(self):
        errs = []
        for n in (64, 128):
            grid = UniformGrid(x0=0.0, length=2.0 * np.pi, n=n)
            s = Series(grid, np.sin(3.0 * grid.nodes))
            err = np.max(np.abs(fd_centered(s).values - 3.0 * np.cos(3.0 * grid.nodes)))
            errs.append(err)
        assert errs[0] / errs[1] == pytest.approx(4.0, rel=0.05)

    def test_complex_step_exact_at_tiny_step(self):
        assert complex_step_derivative(np.sin, 0.0, v=1e-200) == 1.0

    def test_complex_step_matches_cosine(self):
        xs = np.array([0.3, 1.1, 2.9])
        out = complex_step_derivative(np.sin, xs, v=1e-150)
        np.testing.assert_allclose(out, np.cos(xs), atol=1e-15)

    def test_complex_step_rejects_bad_step(self):
        with pytest.raises(ValueError):
            complex_step_derivative(np.sin, 0.0, v=0.0)

    def test_hilbert_cos_to_sin(self):
        grid = UniformGrid(x0=0.0, length=2.0 * np.pi, n=64)
        s = Series(grid, np.cos(4.0 * grid.nodes))
        out = hilbert_fft(s)
        np.testing.assert_allclose(out.values, np.sin(4.0 * grid.nodes), atol=1e-12)

    def test_hilbert_kills_mean(self):
        grid = UniformGrid(x0=0.0, length=1.0, n=32)
        s = Series(grid, np.full(32, 2.5))
        assert np.max(np.abs(hilbert_fft(s).values)) < 1e-14

    def test_hilbert_squares_to_negation(self):
        grid = UniformGrid(x0=0.0, length=2.0 * np.pi, n=33)
        vals = np.sin(2.0 * grid.nodes) + 0.4 * np.cos(5.0 * grid.nodes)
        s = Series(grid, vals)
        twice = hilbert_fft(hilbert_fft(s))
        np.testing.assert_allclose(twice.values, -vals, atol=1e-12)


class TestVerificationTable:
    def test_quick_run_all_rows_pass(self):
        report = table1_verify(n_eta=64, n_tau=64, n_points=5, tolerance=1e-5)
        assert len(report.rows) == 5
        assert all(row.passed for row in report.rows)
        names = {row.name for row in report.rows}
        assert names == {"sin", "cos", "exp", "gaussian", "cexp"}

    def test_deviations_are_recorded(self):
        report = table1_verify(n_eta=32, n_tau=32, n_points=3, tolerance=1e-3)
        for row in report.rows:
            assert row.max_deviation >= 0.0
            assert row.tolerance == 1e-3
        assert "normalization" in report.note
