"""Reduced-state engines, sweeps and the cross-engine check."""

from unruh_bench.engine.blocks import pair_block, thermal_block
from unruh_bench.engine.brute import brute_force_from_amplitudes, brute_force_reduced_state
from unruh_bench.engine.capture import (
    BandOutsideGridError,
    CaptureAmplitudes,
    DetectorBand,
    capture_amplitudes,
    capture_from_amplitudes,
    detector_band,
)
from unruh_bench.engine.complexity import (
    BudgetExceededError,
    CostEstimate,
    check_budget,
    complexity_estimate,
    fit_exponential_base,
)
from unruh_bench.engine.peaked import assemble_from_capture, assemble_reduced_state
from unruh_bench.engine.reduced import ChannelBlocks, ReducedState
from unruh_bench.engine.sweep import (
    build_profiles,
    cross_check,
    evaluate_point,
    spread_report,
    sweep_negativity,
)

__all__ = [
    "BandOutsideGridError",
    "BudgetExceededError",
    "CaptureAmplitudes",
    "ChannelBlocks",
    "CostEstimate",
    "DetectorBand",
    "ReducedState",
    "assemble_from_capture",
    "assemble_reduced_state",
    "brute_force_from_amplitudes",
    "brute_force_reduced_state",
    "build_profiles",
    "capture_amplitudes",
    "capture_from_amplitudes",
    "check_budget",
    "complexity_estimate",
    "cross_check",
    "detector_band",
    "evaluate_point",
    "fit_exponential_base",
    "pair_block",
    "spread_report",
    "sweep_negativity",
    "thermal_block",
]
