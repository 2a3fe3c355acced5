"""Acceleration sweeps, spread tables and the cross-engine check."""

from __future__ import annotations

import time
from collections.abc import Sequence

from unruh_bench.engine.brute import bin_squeezes, brute_force_from_amplitudes, brute_force_reduced_state
from unruh_bench.engine.capture import band_amplitudes, capture_from_amplitudes, detector_band, spread_on_band
from unruh_bench.engine.complexity import (
    BudgetExceededError,
    check_budget,
    complexity_estimate,
    fit_exponential_base,
)
from unruh_bench.engine.peaked import assemble_from_capture, assemble_reduced_state
from unruh_bench.entanglement import trace_distance
from unruh_bench.logging import get_logger
from unruh_bench.models.results import (
    CostRow,
    OracleReport,
    OracleRow,
    PointStatus,
    SpreadProfile,
    SpreadReport,
    SpreadSample,
    SweepPoint,
    SweepResult,
)
from unruh_bench.models.scenario import EngineKind, ScenarioConfig
from unruh_bench.runner import SweepRunner
from unruh_bench.runner.runner import ProgressCallback
from unruh_bench.spectral.profile import SpectralAmplitude
from unruh_bench.spectral.transform import evaluate_spread, resolve_spread
from unruh_bench.squeezing import (
    ValidityStatus,
    acceleration_to_band,
    peaked_validity,
    squeeze_param,
    validity_status,
)

logger = get_logger(__name__)

Profiles = tuple[SpectralAmplitude, SpectralAmplitude]


def build_profiles(cfg: ScenarioConfig) -> Profiles:
    """Normalized (x, y) photon profiles of a scenario."""
    n = cfg.grid.omega_nodes
    return cfg.state.profile_x.build(n), cfg.state.profile_y.build(n)


def _point_status(ratio: float, engine: EngineKind, allow_invalid: bool) -> PointStatus:
    status = validity_status(ratio)
    if status is ValidityStatus.PASS:
        return PointStatus.OK
    if status is ValidityStatus.WARN:
        return PointStatus.WARN
    # The brute-force engine does not rely on the peaked approximation
    if allow_invalid or engine is EngineKind.BRUTE:
        return PointStatus.INVALID
    return PointStatus.FAILED


def evaluate_point(
    cfg: ScenarioConfig,
    a_proper_m_per_s2: float,
    profiles: Profiles,
    engine: EngineKind | None = None,
) -> SweepPoint:
    """Reduced state and negativity at one acceleration.

    Errors are recorded on the returned point instead of raised, so one bad point never
    aborts a sweep.
    """
    engine = engine or cfg.engine.kind
    try:
        ctx = cfg.at(a_proper_m_per_s2)
        omega_det, delta = acceleration_to_band(cfg.detector, ctx)
        ratio = peaked_validity(omega_det, delta)
        status = _point_status(ratio, engine, cfg.engine.allow_invalid)
        if status is PointStatus.FAILED:
            return SweepPoint(
                a_proper_m_per_s2,
                status,
                error_message=f"peaked validity ratio {ratio:.4g} at Omega_det={omega_det:.4g} is not below 0.1",
            )

        if engine is EngineKind.PEAKED:
            state = assemble_reduced_state(cfg, a_proper_m_per_s2, profiles)
        else:
            state = brute_force_reduced_state(cfg, a_proper_m_per_s2=a_proper_m_per_s2, profiles=profiles)
        result = state.negativity()
    except (ValueError, RuntimeError) as e:
        return SweepPoint(a_proper_m_per_s2, PointStatus.FAILED, error_message=str(e))

    cap = state.capture_x
    return SweepPoint(
        a_proper_m_per_s2=a_proper_m_per_s2,
        status=status,
        omega_det=omega_det,
        r=squeeze_param(omega_det).r,
        eps_r_abs=abs(cap.eps_r) if cap else None,
        eps_l_abs=abs(cap.eps_l) if cap else None,
        w_env=cap.w_env if cap else None,
        negativity=result.negativity,
        log_negativity=result.log_negativity,
        validity_ratio=ratio,
        trunc_loss=state.trunc_loss,
    )


def sweep_negativity(
    cfg: ScenarioConfig,
    a_values: Sequence[float] | None = None,
    progress_callback: ProgressCallback | None = None,
    engine: EngineKind | None = None,
) -> SweepResult:
    """Negativity curve over accelerations (the configured log-spaced window by default).

    Raises:
        SpreadResolutionError: If a profile's spread cannot be resolved at the reference
            acceleration (the Parseval diagnostics need it)
    """
    engine = engine or cfg.engine.kind
    accelerations = list(a_values) if a_values is not None else cfg.sweep.accelerations()
    profiles = build_profiles(cfg)

    defects = [
        resolve_spread(profile, cfg.acceleration.a, cfg.grid.spread_nodes, min_omega_nodes=cfg.grid.omega_nodes).defect
        for profile in profiles
    ]
    logger.debug(f"Parseval defects at the reference acceleration: x {defects[0]:.3e}, y {defects[1]:.3e}")

    logger.info(f"Sweeping {len(accelerations)} accelerations with the {engine.value} engine")
    runner = SweepRunner(workers=cfg.sweep.workers)
    points = runner.run(
        accelerations,
        lambda a: evaluate_point(cfg, a, profiles, engine),
        progress_callback=progress_callback,
    )
    return SweepResult(
        engine=engine.value,
        points=points,
        parseval_defect_x=defects[0],
        parseval_defect_y=defects[1],
    )


def spread_report(cfg: ScenarioConfig, a_values: Sequence[float] | None = None) -> SpreadReport:
    """Helicity-up spread at the detector centre per acceleration, plus full profiles.

    Full profiles are resolved at every sweep.profile_a_m_per_s2 acceleration.

    Raises:
        SpreadResolutionError: If a full profile cannot be resolved
    """
    accelerations = list(a_values) if a_values is not None else cfg.sweep.accelerations()
    profile = cfg.state.profile_x.build(cfg.grid.omega_nodes)

    samples = []
    for a_proper in accelerations:
        ctx = cfg.at(a_proper)
        omega = ctx.to_dimensionless(cfg.detector.center_per_s)
        x_r, x_l = evaluate_spread(profile, ctx.a, [omega], cfg.grid.omega_nodes)
        samples.append(SpreadSample(a_proper, omega, complex(x_r[0]), complex(x_l[0])))

    profiles = []
    for a_proper in cfg.sweep.profile_a_m_per_s2:
        spread = resolve_spread(
            profile, cfg.at(a_proper).a, cfg.grid.spread_nodes, min_omega_nodes=cfg.grid.omega_nodes
        )
        logger.debug(f"Spread profile at a={a_proper:.4e}: {len(spread.grid)} nodes, defect {spread.defect:.3e}")
        profiles.append(SpreadProfile(a_proper, spread.omega_nodes, spread.x_r, spread.x_l, spread.defect))

    return SpreadReport(samples=samples, profiles=profiles)


def cross_check(
    cfg: ScenarioConfig,
    bins: Sequence[int] | None = None,
    *,
    constant_r: bool | None = None,
    tamper_l: bool | None = None,
    record_timing: bool = False,
) -> OracleReport:
    """Trace distance between the two engines at the reference acceleration.

    Both engines see the same m-node band and the same band amplitudes. With constant_r the
    brute-force bins all use r at the band centre, which is where the peaked engine is exact.
    A run the budget refuses is recorded with no distance instead of raised.

    Raises:
        ValueError: If the detector width is zero
        TruncationError: If the peaked engine's truncation tail exceeds tail_tol
    """
    ms = list(bins) if bins is not None else list(range(1, cfg.grid.bins + 1))
    use_constant = cfg.engine.constant_r if constant_r is None else constant_r
    use_tamper = cfg.engine.tamper_l_convention if tamper_l is None else tamper_l
    n_max = cfg.truncation.n_max

    ctx = cfg.acceleration
    omega_det, delta = acceleration_to_band(cfg.detector, ctx)
    if not delta > 0:
        raise ValueError("the engine cross-check needs a positive detector width")
    sq = squeeze_param(omega_det)
    profiles = build_profiles(cfg)

    report = OracleReport(
        a_proper_m_per_s2=ctx.a_proper_m_per_s2,
        omega_det=omega_det,
        n_max=n_max,
        validity_ratio=peaked_validity(omega_det, delta),
    )
    for m in ms:
        if not 1 <= m <= cfg.grid.bins_cap:
            raise ValueError(f"bins must lie in [1, {cfg.grid.bins_cap}], got {m}")
        estimate = complexity_estimate(m, n_max)
        cost = CostRow(m, n_max, estimate.modes, estimate.support, estimate.witness)
        report.costs.append(cost)
        constant = use_constant and m > 1

        try:
            check_budget(estimate, cfg.engine.budget_terms)
        except BudgetExceededError as e:
            logger.warning(str(e))
            report.rows.append(OracleRow(m, None, cfg.engine.oracle_tolerance, constant, error_message=str(e)))
            continue

        band = detector_band(cfg.detector, ctx, m)
        x, y = (band_amplitudes(spread_on_band(profile, band, ctx.a, cfg.grid.omega_nodes), band) for profile in profiles)

        cap_x = capture_from_amplitudes(band.g_hat, *x, tamper_l=use_tamper)
        cap_y = capture_from_amplitudes(band.g_hat, *y, tamper_l=use_tamper)
        peaked = assemble_from_capture(cfg.state.p, cfg.state.q, cap_x, cap_y, sq, cfg.truncation)

        start = time.perf_counter()
        brute = brute_force_from_amplitudes(
            cfg.state.p, cfg.state.q, band, x, y, bin_squeezes(band, constant), n_max
        )
        cost.runtime_s = time.perf_counter() - start

        distance = trace_distance(peaked.density, brute.density)
        row = OracleRow(m, distance, cfg.engine.oracle_tolerance, constant)
        report.rows.append(row)
        logger.info(f"m={m}: trace distance {distance:.3e} ({row.status})")

    if report.gap_constant is not None:
        logger.info(f"Natural-r gap: trace distance up to {report.gap_constant:.3g} x validity ratio")

    if record_timing:
        timed = [(c.bins, c.runtime_s) for c in report.costs if c.runtime_s]
        if len(timed) >= 2:
            report.fitted_base = fit_exponential_base([m for m, _ in timed], [t for _, t in timed])
            logger.info(f"Fitted exponential base of the brute-force runtime: {report.fitted_base:.3g}")
    return report
