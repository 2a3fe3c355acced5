"""Tests for detector bands and capture amplitudes."""

import logging
import math

import numpy as np
import pytest

from unruh_bench.engine.capture import (
    BandOutsideGridError,
    CaptureAmplitudes,
    DetectorBand,
    capture_amplitudes,
    capture_from_amplitudes,
    detector_band,
    spread_on_band,
)
from unruh_bench.models.scenario import DetectorShape, DetectorSpec
from unruh_bench.spectral import Chirp, gauss_legendre, gaussian_profile, unruh_spread
from unruh_bench.squeezing import AccelerationContext

CTX = AccelerationContext(1.5e17, 3.0e8)
"""Maps a 1e9 1/s detector to Omega_det = 2"""


def _band(lo: float, hi: float, n: int = 16) -> DetectorBand:
    grid = gauss_legendre(lo, hi, n)
    g = np.sqrt(grid.weights)
    return DetectorBand(grid=grid, g_hat=g / np.linalg.norm(g), omega_det=0.5 * (lo + hi), delta_omega_det=hi - lo)


class TestDetectorBand:
    """Tests for the discretized detector mode."""

    def test_top_hat_band(self):
        """A top-hat band spans the width and has constant density."""
        band = detector_band(DetectorSpec.from_q_factor(1.0e9, 50.0), CTX, n_nodes=12)
        assert band.omega_det == pytest.approx(2.0)
        assert band.delta_omega_det == pytest.approx(0.04)
        assert band.grid.lo == pytest.approx(1.98)
        assert band.grid.hi == pytest.approx(2.02)
        assert len(band) == 12
        assert np.linalg.norm(band.g_hat) == pytest.approx(1.0, abs=1e-14)
        np.testing.assert_allclose(band.g_hat, np.sqrt(band.grid.weights / 0.04), rtol=1e-12)

    def test_gaussian_band(self):
        """A Gaussian band is cut at two widths and follows exp(-(Omega - centre)^2 / (4 s^2))."""
        detector = DetectorSpec.from_q_factor(1.0e9, 50.0, DetectorShape.GAUSSIAN)
        band = detector_band(detector, CTX, n_nodes=20)
        assert band.grid.lo == pytest.approx(1.92)
        assert band.grid.hi == pytest.approx(2.08)
        density = band.g_hat / np.sqrt(band.grid.weights)
        shape = np.exp(-((band.nodes - 2.0) ** 2) / (4.0 * 0.02**2))
        np.testing.assert_allclose(density / density.max(), shape / shape.max(), rtol=1e-10)

    def test_zero_width_rejected(self):
        """A zero-width detector has no band."""
        with pytest.raises(ValueError, match="positive width"):
            detector_band(DetectorSpec(center_per_s=1.0e9, width_per_s=0.0), CTX)

    def test_band_reaching_zero_rejected(self):
        """A band touching Omega <= 0 is rejected."""
        detector = DetectorSpec.from_q_factor(1.0e9, 2.0, DetectorShape.GAUSSIAN)
        with pytest.raises(ValueError, match="Omega <= 0"):
            detector_band(detector, CTX)

    def test_requires_unit_norm(self):
        """Detector amplitudes must be normalized."""
        grid = gauss_legendre(1.0, 2.0, 4)
        with pytest.raises(ValueError, match="unit norm"):
            DetectorBand(grid=grid, g_hat=np.ones(4), omega_det=1.5, delta_omega_det=1.0)


class TestCaptureFromAmplitudes:
    """Tests for the capture projections."""

    G_HAT = np.array([0.6, 0.8])
    X_R = np.array([0.3j, 0.1])
    X_L = np.array([0.2j, 0.0])

    def test_conjugation_convention(self):
        """eps_R uses conj(g) and eps_L uses g."""
        cap = capture_from_amplitudes(self.G_HAT * np.exp(0.4j), self.X_R, self.X_L)
        assert cap.eps_r == pytest.approx((0.08 + 0.18j) * np.exp(-0.4j))
        assert cap.eps_l == pytest.approx(0.12j * np.exp(0.4j))

    def test_environment_weight(self):
        """w_env is whatever the detector does not capture."""
        cap = capture_from_amplitudes(self.G_HAT, self.X_R, self.X_L)
        assert cap.captured == pytest.approx(0.0064 + 0.0324 + 0.0144)
        assert cap.w_env == pytest.approx(1.0 - cap.captured)
        assert cap.q_r**2 + cap.q_l**2 == pytest.approx(1.0)

    def test_tamper_conjugates_left(self):
        """The tamper hook conjugates eps_L only."""
        plain = capture_from_amplitudes(self.G_HAT, self.X_R, self.X_L)
        tampered = capture_from_amplitudes(self.G_HAT, self.X_R, self.X_L, tamper_l=True)
        assert tampered.eps_r == plain.eps_r
        assert tampered.eps_l == pytest.approx(-0.12j)

    def test_over_capture_clamped(self, caplog):
        """Captured weight above 1 clamps w_env to zero with a warning."""
        with caplog.at_level(logging.WARNING, logger="unruh_bench"):
            cap = capture_from_amplitudes(np.array([1.0]), np.array([1.0 + 1e-6]), np.array([0.0]))
        assert cap.w_env == 0.0
        assert "exceeds 1" in caplog.text

    def test_rounding_above_one_is_silent(self, caplog):
        """Excess within the Cauchy-Schwarz slack is clamped without a warning."""
        with caplog.at_level(logging.WARNING, logger="unruh_bench"):
            cap = capture_from_amplitudes(np.array([1.0]), np.array([1.0 + 1e-12]), np.array([0.0]))
        assert cap.w_env == 0.0
        assert caplog.text == ""

    def test_zero_capture(self):
        """Nothing captured gives zero relative weights."""
        cap = CaptureAmplitudes(eps_r=0j, eps_l=0j, w_env=1.0)
        assert cap.q_r == 0.0
        assert cap.q_l == 0.0
        assert cap.to_dict()["w_env"] == 1.0


class TestCaptureAmplitudes:
    """Tests for projecting spreads onto a band."""

    PROFILE = gaussian_profile(20.0, 1.0, Chirp(log_rate=2.0))

    def test_interpolated_spread_matches_direct(self):
        """A spread on a finer grid is interpolated onto the band nodes."""
        band = _band(1.98, 2.02)
        direct = capture_amplitudes(spread_on_band(self.PROFILE, band, 1.0), band)
        fine = unruh_spread(self.PROFILE, 1.0, gauss_legendre(1.5, 2.5, 400))
        interpolated = capture_amplitudes(fine, band)
        assert interpolated.eps_r == pytest.approx(direct.eps_r, rel=1e-4)
        assert interpolated.eps_l == pytest.approx(direct.eps_l, rel=1e-4)

    def test_band_outside_grid(self):
        """A spread that does not cover the band cannot be projected."""
        spread = unruh_spread(self.PROFILE, 1.0, gauss_legendre(0.5, 1.5, 20))
        with pytest.raises(BandOutsideGridError):
            capture_amplitudes(spread, _band(1.98, 2.02))

    def test_detector_spec_needs_context(self):
        """A detector specification is discretized only with an acceleration."""
        spread = unruh_spread(self.PROFILE, 1.0, gauss_legendre(1.5, 2.5, 40))
        with pytest.raises(ValueError, match="acceleration context"):
            capture_amplitudes(spread, DetectorSpec.from_q_factor(1.0e9, 50.0))

    def test_capture_scales_with_band_width(self):
        """A narrow band captures roughly |X|^2 times its width."""
        band = _band(1.98, 2.02)
        spread = spread_on_band(self.PROFILE, band, 1.0)
        cap = capture_amplitudes(spread, band)
        density = abs(spread.x_r[len(band) // 2]) ** 2
        assert abs(cap.eps_r) ** 2 == pytest.approx(density * 0.04, rel=1e-2)
        assert math.isclose(cap.w_env, 1.0 - cap.captured)
