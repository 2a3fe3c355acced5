"""Scenario data models."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

import numpy as np

from unruh_bench.config import (
    DEFAULT_A_PROPER_M_PER_S2,
    DEFAULT_AMPLITUDE,
    DEFAULT_BAND_NODES,
    DEFAULT_BINS,
    DEFAULT_BINS_CAP,
    DEFAULT_BUDGET_TERMS,
    DEFAULT_DETECTOR_CENTER_PER_S,
    DEFAULT_DETECTOR_WIDTH_PER_S,
    DEFAULT_OMEGA0_RAD_PER_S,
    DEFAULT_OMEGA_NODES,
    DEFAULT_ORACLE_TOLERANCE,
    DEFAULT_SIGMA_RAD_PER_S,
    DEFAULT_SPREAD_NODES,
    DEFAULT_SWEEP_A_MAX_M_PER_S2,
    DEFAULT_SWEEP_A_MIN_M_PER_S2,
    DEFAULT_SWEEP_POINTS,
    FREQUENCY_CONVENTION,
)
from unruh_bench.spectral.profile import Chirp, SpectralProfile, gaussian_profile
from unruh_bench.squeezing import AccelerationContext, TruncationConfig

AMPLITUDE_NORM_TOL = 1.0e-12


class DetectorShape(Enum):
    """Frequency profile of the detector mode."""

    TOP_HAT = "top_hat"
    """Constant height over [centre - width/2, centre + width/2]"""

    GAUSSIAN = "gaussian"
    """Gaussian amplitude with standard deviation width/2, cut at four deviations"""


class EngineKind(Enum):
    PEAKED = "peaked"
    """Analytic assembly with r frozen at the band centre"""

    BRUTE = "brute"
    """Discretized multimode construction"""


@dataclass(frozen=True)
class ProfileSpec:
    """Parameters of one Gaussian one-photon profile, before normalization."""

    omega0_rad_per_s: float = DEFAULT_OMEGA0_RAD_PER_S
    sigma_rad_per_s: float = DEFAULT_SIGMA_RAD_PER_S
    chirp_log_rate: float = 0.0
    chirp_quadratic: float = 0.0

    def build(self, n_nodes: int = DEFAULT_OMEGA_NODES) -> SpectralProfile:
        """Unit-normalized profile."""
        return gaussian_profile(
            self.omega0_rad_per_s,
            self.sigma_rad_per_s,
            Chirp(log_rate=self.chirp_log_rate, quadratic=self.chirp_quadratic),
            n_nodes=n_nodes,
        )

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> ProfileSpec:
        return cls(**{k: float(v) for k, v in data.items()})

    def to_dict(self) -> dict[str, float]:
        return {
            "omega0_rad_per_s": self.omega0_rad_per_s,
            "sigma_rad_per_s": self.sigma_rad_per_s,
            "chirp_log_rate": self.chirp_log_rate,
            "chirp_quadratic": self.chirp_quadratic,
        }


@dataclass(frozen=True)
class StateSpec:
    """P|a>|x> + Q|b>|y>: Alice's qubit entangled with a photon of helicity up (x) or down (y).

    The state is defined in the inertial frame and carries no acceleration.
    """

    p: complex = complex(DEFAULT_AMPLITUDE)
    q: complex = complex(DEFAULT_AMPLITUDE)
    profile_x: ProfileSpec = field(default_factory=ProfileSpec)
    """Profile of the helicity-up photon"""

    profile_y: ProfileSpec = field(default_factory=ProfileSpec)
    """Profile of the helicity-down photon"""

    def __post_init__(self) -> None:
        norm = abs(self.p) ** 2 + abs(self.q) ** 2
        if abs(norm - 1.0) > AMPLITUDE_NORM_TOL:
            raise ValueError(f"|P|^2 + |Q|^2 = {norm:.15f}, expected 1")

    def to_dict(self) -> dict[str, Any]:
        return {
            "p_real": self.p.real,
            "p_imag": self.p.imag,
            "q_real": self.q.real,
            "q_imag": self.q.imag,
        }


@dataclass(frozen=True)
class DetectorSpec:
    """Band-limited detector mode, identical for both helicity channels."""

    center_per_s: float = DEFAULT_DETECTOR_CENTER_PER_S
    """Centre Rindler frequency (1/s)"""

    width_per_s: float = DEFAULT_DETECTOR_WIDTH_PER_S
    """Band width (1/s)"""

    shape: DetectorShape = DetectorShape.TOP_HAT

    def __post_init__(self) -> None:
        if not self.center_per_s > 0:
            raise ValueError(f"detector centre must be positive, got {self.center_per_s}")
        if self.width_per_s < 0:
            raise ValueError(f"detector width must be non-negative, got {self.width_per_s}")

    @classmethod
    def from_q_factor(
        cls, center_per_s: float, q_factor: float, shape: DetectorShape = DetectorShape.TOP_HAT
    ) -> DetectorSpec:
        if not q_factor > 0:
            raise ValueError(f"quality factor must be positive, got {q_factor}")
        return cls(center_per_s=center_per_s, width_per_s=center_per_s / q_factor, shape=shape)

    @property
    def q_factor(self) -> float:
        return self.center_per_s / self.width_per_s if self.width_per_s > 0 else math.inf

    def to_dict(self) -> dict[str, Any]:
        return {
            "center_per_s": self.center_per_s,
            "width_per_s": self.width_per_s,
            "shape": self.shape.value,
        }


@dataclass(frozen=True)
class GridConfig:
    """Quadrature and discretization sizes."""

    omega_nodes: int = DEFAULT_OMEGA_NODES
    """Minimum Minkowski-frequency nodes"""

    spread_nodes: int = DEFAULT_SPREAD_NODES
    """Omega nodes of full spread profiles"""

    band_nodes: int = DEFAULT_BAND_NODES
    """Nodes across the detector band for the peaked engine"""

    bins: int = DEFAULT_BINS
    """Frequency bins m for the brute-force engine"""

    bins_cap: int = DEFAULT_BINS_CAP

    def __post_init__(self) -> None:
        for name in ("omega_nodes", "spread_nodes", "band_nodes", "bins", "bins_cap"):
            if getattr(self, name) < 1:
                raise ValueError(f"grid.{name} must be at least 1")
        if self.bins > self.bins_cap:
            raise ValueError(f"grid.bins = {self.bins} exceeds grid.bins_cap = {self.bins_cap}")

    def to_dict(self) -> dict[str, int]:
        return {
            "omega_nodes": self.omega_nodes,
            "spread_nodes": self.spread_nodes,
            "band_nodes": self.band_nodes,
            "bins": self.bins,
            "bins_cap": self.bins_cap,
        }


@dataclass(frozen=True)
class SweepConfig:
    """Acceleration window of a sweep."""

    a_min_m_per_s2: float = DEFAULT_SWEEP_A_MIN_M_PER_S2
    a_max_m_per_s2: float = DEFAULT_SWEEP_A_MAX_M_PER_S2
    points: int = DEFAULT_SWEEP_POINTS
    """Log-spaced accelerations, endpoints included"""

    workers: int = 1
    """Concurrent sweep points"""

    profile_a_m_per_s2: tuple[float, ...] = ()
    """Accelerations at which full spread profiles are written"""

    def __post_init__(self) -> None:
        if not 0 < self.a_min_m_per_s2 <= self.a_max_m_per_s2:
            raise ValueError("sweep window needs 0 < a_min <= a_max")
        if self.points < 1:
            raise ValueError("sweep.points must be at least 1")
        if self.workers < 1:
            raise ValueError("sweep.workers must be at least 1")

    def accelerations(self, points: int | None = None) -> list[float]:
        n = points or self.points
        if n == 1:
            return [self.a_min_m_per_s2]
        return [float(a) for a in np.geomspace(self.a_min_m_per_s2, self.a_max_m_per_s2, n)]

    def to_dict(self) -> dict[str, Any]:
        return {
            "a_min_m_per_s2": self.a_min_m_per_s2,
            "a_max_m_per_s2": self.a_max_m_per_s2,
            "points": self.points,
            "workers": self.workers,
            "profile_a_m_per_s2": list(self.profile_a_m_per_s2),
        }


@dataclass(frozen=True)
class EngineConfig:
    """Engine selection, gates and test hooks."""

    kind: EngineKind = EngineKind.PEAKED
    allow_invalid: bool = False
    """Evaluate points that fail the peaked validity gate (with a warning)"""

    budget_terms: int = DEFAULT_BUDGET_TERMS
    """Largest predicted brute-force support"""

    oracle_tolerance: float = DEFAULT_ORACLE_TOLERANCE
    constant_r: bool = False
    """Test hook: every bin uses r at the band centre"""

    tamper_l_convention: bool = False
    """Test hook: conjugate the left capture amplitude"""

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind.value,
            "allow_invalid": self.allow_invalid,
            "budget_terms": self.budget_terms,
            "oracle_tolerance": self.oracle_tolerance,
            "constant_r": self.constant_r,
            "tamper_l_convention": self.tamper_l_convention,
        }


@dataclass(frozen=True)
class ScenarioConfig:
    """Full experiment description."""

    state: StateSpec = field(default_factory=StateSpec)
    detector: DetectorSpec = field(default_factory=DetectorSpec)
    acceleration: AccelerationContext = field(
        default_factory=lambda: AccelerationContext(DEFAULT_A_PROPER_M_PER_S2)
    )
    """Reference point for single-acceleration operations"""

    truncation: TruncationConfig = field(default_factory=TruncationConfig)
    grid: GridConfig = field(default_factory=GridConfig)
    sweep: SweepConfig = field(default_factory=SweepConfig)
    engine: EngineConfig = field(default_factory=EngineConfig)
    frequency_convention: str = FREQUENCY_CONVENTION

    def at(self, a_proper_m_per_s2: float) -> AccelerationContext:
        """Acceleration context for another proper acceleration, same speed of light."""
        return AccelerationContext(a_proper_m_per_s2, self.acceleration.c_m_per_s)

    def to_dict(self) -> dict[str, Any]:
        """Nested echo of every resolved parameter; flattening gives the config keys."""
        return {
            "state": self.state.to_dict(),
            "profile_x": self.state.profile_x.to_dict(),
            "profile_y": self.state.profile_y.to_dict(),
            "detector": self.detector.to_dict(),
            "acceleration": {
                "a_proper_m_per_s2": self.acceleration.a_proper_m_per_s2,
                "c_m_per_s": self.acceleration.c_m_per_s,
            },
            "sweep": self.sweep.to_dict(),
            "truncation": {
                "n_max": self.truncation.n_max,
                "tail_tol": self.truncation.tail_tol,
            },
            "grid": self.grid.to_dict(),
            "engine": self.engine.to_dict(),
            "units": {"frequency_convention": self.frequency_convention},
        }
