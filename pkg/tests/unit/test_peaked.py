"""Tests for the peaked-detector engine."""

import logging
import math
from dataclasses import replace

import numpy as np
import pytest

from unruh_bench.engine.blocks import thermal_block
from unruh_bench.engine.capture import CaptureAmplitudes
from unruh_bench.engine.peaked import (
    assemble_from_capture,
    assemble_reduced_state,
    channel_blocks,
    check_validity,
)
from unruh_bench.models.scenario import DetectorSpec, EngineConfig, EngineKind
from unruh_bench.squeezing import (
    TruncationConfig,
    TruncationError,
    ValidityError,
    squeeze_param,
)

HALF = 1.0 / math.sqrt(2.0)
NO_CAPTURE = CaptureAmplitudes(eps_r=0j, eps_l=0j, w_env=1.0)


def _capture(eps_r: complex, eps_l: complex) -> CaptureAmplitudes:
    return CaptureAmplitudes(eps_r=eps_r, eps_l=eps_l, w_env=1.0 - abs(eps_r) ** 2 - abs(eps_l) ** 2)


class TestChannelBlocks:
    """Tests for the per-channel detector-mode operators."""

    def test_no_capture_is_thermal(self):
        """A photon missing the detector leaves it thermal."""
        sq = squeeze_param(0.5)
        t = TruncationConfig(n_max=8)
        blocks = channel_blocks(NO_CAPTURE, sq, t)
        tau = thermal_block(sq, t)
        np.testing.assert_allclose(blocks.excited, tau)
        np.testing.assert_allclose(blocks.vacuum, tau)
        assert not blocks.coherence.any()

    def test_excited_trace_is_kept_weight(self):
        """Tr excited stays close to one for a well-truncated channel."""
        sq = squeeze_param(1.0)
        blocks = channel_blocks(_capture(0.5 + 0.2j, 0.3j), sq, TruncationConfig(n_max=6))
        assert np.trace(blocks.excited).real == pytest.approx(1.0, abs=1e-6)


class TestAssembleFromCapture:
    """Tests for the analytic reduced state."""

    def test_no_capture_is_separable(self):
        """Without capture the state factorizes and has zero negativity."""
        sq = squeeze_param(0.5)
        state = assemble_from_capture(HALF, HALF, NO_CAPTURE, NO_CAPTURE, sq, TruncationConfig(n_max=10))
        assert state.negativity().negativity == 0.0
        assert state.trunc_loss == pytest.approx(2.0 * sq.tanh_r**22, abs=1e-13)

    def test_full_capture_without_squeezing_is_bell_like(self):
        """Full right capture at negligible r gives negativity 1/2."""
        sq = squeeze_param(5.0)
        full = _capture(1.0, 0.0)
        state = assemble_from_capture(HALF, HALF, full, full, sq, TruncationConfig(n_max=2))
        assert state.negativity().negativity == pytest.approx(0.5, abs=1e-6)
        assert state.engine is EngineKind.PEAKED
        assert state.dims == (2, 3, 3)

    def test_generic_state_is_physical(self):
        """Assembled states are Hermitian, unit trace and positive."""
        sq = squeeze_param(0.3)
        state = assemble_from_capture(
            0.6, 0.8j, _capture(0.6 + 0.1j, 0.3j), _capture(0.2, -0.4 + 0.1j), sq, TruncationConfig(n_max=8)
        )
        assert state.is_physical()
        assert state.density.trace == pytest.approx(1.0)
        assert state.capture_x.eps_l == 0.3j
        assert 0.0 <= state.negativity().negativity <= 0.5

    def test_truncation_checked(self):
        """A cutoff too small for the squeezing raises."""
        with pytest.raises(TruncationError):
            assemble_from_capture(HALF, HALF, NO_CAPTURE, NO_CAPTURE, squeeze_param(0.05), TruncationConfig(n_max=3))


class TestValidityGate:
    """Tests for the peaked validity gate."""

    def test_fail_raises(self):
        """A failing band raises ValidityError."""
        with pytest.raises(ValidityError, match="not below 0.1"):
            check_validity(100.0, 0.2, allow_invalid=False)

    def test_allow_invalid_warns(self, caplog):
        """allow_invalid turns the failure into a warning."""
        with caplog.at_level(logging.WARNING, logger="unruh_bench"):
            ratio = check_validity(100.0, 0.2, allow_invalid=True)
        assert ratio == pytest.approx(math.pi / 5.0, rel=1e-6)
        assert "allow_invalid" in caplog.text

    def test_warning_band(self, caplog):
        """Ratios in the warning band log but pass."""
        with caplog.at_level(logging.WARNING, logger="unruh_bench"):
            check_validity(10.0, 0.02, allow_invalid=False)
        assert "warning band" in caplog.text


class TestAssembleReducedState:
    """Tests for engine A at one acceleration."""

    def test_chirped_point_is_entangled(self, chirped_scenario):
        """At Omega_det = 3 the chirped photon is partly captured and entanglement survives."""
        state = assemble_reduced_state(chirped_scenario, 1.0e17)
        assert state.is_physical()
        assert state.negativity().negativity > 0.0
        assert state.squeeze.omega == pytest.approx(3.0)
        assert state.validity_ratio < 0.05
        assert 0.0 < state.capture_x.captured < 1.0

    def test_reference_acceleration_by_default(self, chirped_scenario):
        """Without an acceleration the scenario's reference point is used."""
        state = assemble_reduced_state(chirped_scenario)
        np.testing.assert_allclose(state.matrix, assemble_reduced_state(chirped_scenario, 1.0e17).matrix)

    def test_validity_failure(self, chirped_scenario):
        """Omega_det = 20 with Q = 500 fails the gate."""
        with pytest.raises(ValidityError):
            assemble_reduced_state(chirped_scenario, 1.5e16)

    def test_validity_failure_allowed(self, chirped_scenario):
        """allow_invalid evaluates failing points."""
        cfg = replace(chirped_scenario, engine=EngineConfig(allow_invalid=True))
        state = assemble_reduced_state(cfg, 1.5e16)
        assert state.validity_ratio >= 0.1

    def test_zero_width_rejected(self, chirped_scenario):
        """The peaked engine needs a band."""
        cfg = replace(chirped_scenario, detector=DetectorSpec(center_per_s=1.0e9, width_per_s=0.0))
        with pytest.raises(ValueError, match="positive detector width"):
            assemble_reduced_state(cfg, 3.0e17)

    def test_identical_profiles_give_identical_captures(self, chirped_scenario):
        """Both helicities carry the same profile in the fixture."""
        state = assemble_reduced_state(chirped_scenario, 1.0e17)
        assert state.capture_x.eps_r == pytest.approx(state.capture_y.eps_r)
