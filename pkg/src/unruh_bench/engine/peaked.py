"""Engine A: analytic assembly under the peaked-detector approximation.

With r frozen at the band centre, the photon's in-band component lives entirely in the
detector's own squeezed pair and its out-of-band weight only ever appears traced. Each Alice
block is then a Kronecker product of a few pair blocks per helicity channel.
"""

from __future__ import annotations

from dataclasses import replace

import numpy as np

from unruh_bench.engine.blocks import pair_block, thermal_block
from unruh_bench.engine.capture import (
    CaptureAmplitudes,
    capture_amplitudes,
    detector_band,
    spread_on_band,
)
from unruh_bench.engine.reduced import ChannelBlocks, ReducedState, branch_density
from unruh_bench.logging import get_logger
from unruh_bench.models.scenario import EngineKind, ScenarioConfig
from unruh_bench.spectral.profile import SpectralAmplitude
from unruh_bench.squeezing import (
    PairKind,
    SqueezeParam,
    TruncationConfig,
    ValidityError,
    ValidityStatus,
    acceleration_to_band,
    peaked_validity,
    squeeze_param,
    validity_status,
)

logger = get_logger(__name__)


def channel_blocks(cap: CaptureAmplitudes, sq: SqueezeParam, t: TruncationConfig) -> ChannelBlocks:
    """Detector-mode operators of one helicity channel from its capture amplitudes."""
    eps = {PairKind.R1: cap.eps_r, PairKind.L1: cap.eps_l}
    tau = thermal_block(sq, t)

    captured = np.zeros_like(tau, dtype=complex)
    for left, eps_left in eps.items():
        for right, eps_right in eps.items():
            captured += eps_left * np.conj(eps_right) * pair_block(left, right, sq, t)

    coherence = sum(
        (eps_k * pair_block(kind, PairKind.VAC, sq, t) for kind, eps_k in eps.items()),
        start=np.zeros_like(tau, dtype=complex),
    )
    return ChannelBlocks(excited=captured + cap.w_env * tau, vacuum=tau.astype(complex), coherence=coherence)


def assemble_from_capture(
    p: complex,
    q: complex,
    cap_x: CaptureAmplitudes,
    cap_y: CaptureAmplitudes,
    sq: SqueezeParam,
    t: TruncationConfig,
) -> ReducedState:
    """Reduced state for given capture amplitudes and centre squeezing.

    Raises:
        TruncationError: If the truncation tail at sq exceeds t.tail_tol
    """
    tail = t.check(sq)
    logger.debug(f"Assembling at r={sq.r:.6g} with n_max={t.n_max} (tail {tail:.2e})")
    matrix = branch_density(p, q, channel_blocks(cap_x, sq, t), channel_blocks(cap_y, sq, t))
    return ReducedState.from_unnormalized(
        matrix, t.n_max, EngineKind.PEAKED, squeeze=sq, capture_x=cap_x, capture_y=cap_y
    )


def check_validity(omega_det: float, delta_omega_det: float, allow_invalid: bool) -> float:
    """Validity ratio of a band, raising ValidityError on FAIL unless allow_invalid.

    Raises:
        ValidityError: If the ratio is at least 0.1 and allow_invalid is False
    """
    ratio = peaked_validity(omega_det, delta_omega_det)
    status = validity_status(ratio)
    if status is ValidityStatus.FAIL:
        message = f"peaked validity ratio {ratio:.4g} at Omega_det={omega_det:.4g} is not below 0.1"
        if not allow_invalid:
            raise ValidityError(message)
        logger.warning(f"{message}; continuing because allow_invalid is set")
    elif status is ValidityStatus.WARN:
        logger.warning(f"Peaked validity ratio {ratio:.4g} at Omega_det={omega_det:.4g} is in the warning band")
    return ratio


def assemble_reduced_state(
    cfg: ScenarioConfig,
    a_proper_m_per_s2: float | None = None,
    profiles: tuple[SpectralAmplitude, SpectralAmplitude] | None = None,
) -> ReducedState:
    """Engine A at one acceleration (the scenario's reference acceleration by default).

    profiles may pass prebuilt (x, y) profiles so sweeps normalize them only once.

    Raises:
        ValueError: If the detector width is zero
        ValidityError: If the band fails the validity gate and allow_invalid is not set
        TruncationError: If the truncation tail exceeds tail_tol
    """
    ctx = cfg.acceleration if a_proper_m_per_s2 is None else cfg.at(a_proper_m_per_s2)
    omega_det, delta = acceleration_to_band(cfg.detector, ctx)
    if not delta > 0:
        raise ValueError("the peaked engine needs a positive detector width")
    ratio = check_validity(omega_det, delta, cfg.engine.allow_invalid)

    sq = squeeze_param(omega_det)
    cfg.truncation.check(sq)

    if profiles is None:
        profiles = (cfg.state.profile_x.build(cfg.grid.omega_nodes), cfg.state.profile_y.build(cfg.grid.omega_nodes))
    band = detector_band(cfg.detector, ctx, cfg.grid.band_nodes)
    captures = [
        capture_amplitudes(
            spread_on_band(profile, band, ctx.a, cfg.grid.omega_nodes),
            band,
            tamper_l=cfg.engine.tamper_l_convention,
        )
        for profile in profiles
    ]
    state = assemble_from_capture(cfg.state.p, cfg.state.q, captures[0], captures[1], sq, cfg.truncation)
    return replace(state, validity_ratio=ratio)
