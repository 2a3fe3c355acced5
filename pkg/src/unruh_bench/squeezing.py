"""Unruh/Rindler two-mode squeeze algebra.

Each Unruh frequency Omega pairs a region-I Rindler mode of helicity sigma with the region-II
mode of helicity -sigma through a two-mode squeeze with tanh r = exp(-pi * Omega). This module
holds the squeezing parameter, the truncated Fock expansions of the squeezed vacuum and of its
single Unruh excitations, their closed-form truncation tails, and the peaked-detector validity
criterion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING

import numpy as np
from scipy.optimize import brentq

from unruh_bench.config import (
    DEFAULT_A_PROPER_M_PER_S2,
    DEFAULT_N_MAX,
    DEFAULT_TAIL_TOL,
    LARGE_OMEGA_SERIES,
    SPEED_OF_LIGHT_M_PER_S,
    VALIDITY_THRESHOLD,
    VALIDITY_WARN_THRESHOLD,
)
from unruh_bench.logging import get_logger

if TYPE_CHECKING:
    from unruh_bench.models.scenario import DetectorSpec

logger = get_logger(__name__)


class ValidityError(ValueError):
    """The peaked-detector approximation does not hold for the requested band."""


class TruncationError(ValueError):
    """A truncated expansion discards more probability than the configured tolerance."""


class PairKind(Enum):
    """State of one (I, II) squeezed pair."""

    VAC = "vac"
    """Two-mode squeezed vacuum"""

    R1 = "r1"
    """One right-Unruh excitation on the squeezed vacuum, occupations (n+1, n)"""

    L1 = "l1"
    """One left-Unruh excitation on the squeezed vacuum, occupations (n, n+1)"""


class ValidityStatus(Enum):
    """Outcome of the peaked-detector validity gate."""

    PASS = "pass"
    WARN = "warn"
    FAIL = "fail"


@dataclass(frozen=True)
class SqueezeParam:
    """Squeezing of one Unruh frequency.

    The logarithm of r is kept alongside r so that very large Omega stay finite and
    exactly representable in ratios.
    """

    omega: float
    """Dimensionless Rindler frequency"""

    tanh_r: float
    """exp(-pi * Omega)"""

    log_r: float
    """Natural log of the squeezing parameter"""

    sech2_r: float
    """1 - tanh^2 r, evaluated without cancellation"""

    @classmethod
    def from_r(cls, r: float) -> SqueezeParam:
        """Build a parameter directly from r (r = 0 gives the unsqueezed limit)."""
        if r < 0:
            raise ValueError(f"squeezing parameter must be non-negative, got {r}")
        tanh_r = math.tanh(r)
        omega = math.inf if r == 0 else -math.log(tanh_r) / math.pi
        log_r = -math.inf if r == 0 else math.log(r)
        return cls(omega=omega, tanh_r=tanh_r, log_r=log_r, sech2_r=1.0 / math.cosh(r) ** 2)

    @property
    def r(self) -> float:
        return math.exp(self.log_r)

    @property
    def cosh_r(self) -> float:
        return 1.0 / math.sqrt(self.sech2_r)

    @property
    def sinh_r(self) -> float:
        return self.tanh_r * self.cosh_r

    @property
    def mean_occupation(self) -> float:
        """sinh^2 r, the thermal occupation of one arm."""
        return self.tanh_r**2 / self.sech2_r


@dataclass(frozen=True)
class TruncationConfig:
    """Per-mode occupation cutoff and accepted discarded mass."""

    n_max: int = DEFAULT_N_MAX
    """Maximum occupation per detector mode"""

    tail_tol: float = DEFAULT_TAIL_TOL
    """Largest acceptable truncated probability mass"""

    def __post_init__(self) -> None:
        if self.n_max < 1:
            raise ValueError(f"n_max must be at least 1, got {self.n_max}")
        if self.tail_tol <= 0:
            raise ValueError(f"tail_tol must be positive, got {self.tail_tol}")

    def check(self, sq: SqueezeParam) -> float:
        """Return the worst tail for sq, raising TruncationError above tail_tol."""
        tail = max(
            truncation_tail(sq, self.n_max, PairKind.VAC),
            truncation_tail(sq, self.n_max, PairKind.R1),
        )
        if tail > self.tail_tol:
            raise TruncationError(
                f"truncation tail {tail:.3e} at Omega={sq.omega:.4g} (r={sq.r:.4g}) exceeds "
                f"tail_tol={self.tail_tol:.1e} with n_max={self.n_max}; "
                f"n_max={required_cutoff(sq, self.tail_tol)} is needed"
            )
        return tail


@dataclass(frozen=True)
class AccelerationContext:
    """Proper acceleration of the detector and the resulting acceleration frequency."""

    a_proper_m_per_s2: float = DEFAULT_A_PROPER_M_PER_S2
    """Proper acceleration (m/s^2)"""

    c_m_per_s: float = SPEED_OF_LIGHT_M_PER_S
    """Speed of light (m/s)"""

    def __post_init__(self) -> None:
        if self.a_proper_m_per_s2 <= 0:
            raise ValueError(f"proper acceleration must be positive, got {self.a_proper_m_per_s2}")
        if self.c_m_per_s <= 0:
            raise ValueError(f"speed of light must be positive, got {self.c_m_per_s}")

    @property
    def a(self) -> float:
        """Acceleration frequency a = a_proper / c (1/s)."""
        return self.a_proper_m_per_s2 / self.c_m_per_s

    def to_dimensionless(self, frequency_per_s: float) -> float:
        """Map a dimensionful Rindler frequency to Omega = Omega' / a."""
        return frequency_per_s / self.a


def squeeze_param(omega: float) -> SqueezeParam:
    """Squeezing parameter r = atanh(exp(-pi * Omega)).

    For exp(-pi * Omega) below 1e-8 the atanh series is evaluated in the log domain, so
    Omega = 50 returns r close to exp(-50 pi) without underflow.

    Raises:
        ValueError: If Omega is not positive (r diverges at Omega = 0)
    """
    if not omega > 0:
        raise ValueError(f"Omega must be positive, got {omega}")

    exponent = -math.pi * omega
    tanh_r = math.exp(exponent)
    sech2_r = -math.expm1(2.0 * exponent)

    if tanh_r < LARGE_OMEGA_SERIES:
        log_r = exponent + math.log1p(tanh_r**2 / 3.0)
    else:
        log_r = math.log(math.atanh(tanh_r))

    return SqueezeParam(omega=omega, tanh_r=tanh_r, log_r=log_r, sech2_r=sech2_r)


def peaked_validity(omega_det: float, delta_omega_det: float) -> float:
    """Relative variation of r across the detector band.

    ratio = pi e^(-pi W) dW / (atanh(e^(-pi W)) (1 + e^(-2 pi W))) for centre W and width dW.
    The peaked approximation holds while the ratio stays below 0.1.

    Raises:
        ValueError: If the centre is not positive or the width is outside [0, 2 * centre)
    """
    if not omega_det > 0:
        raise ValueError(f"detector centre must be positive, got {omega_det}")
    if not 0 <= delta_omega_det < 2 * omega_det:
        raise ValueError(
            f"detector width must lie in [0, {2 * omega_det}), got {delta_omega_det}"
        )

    sq = squeeze_param(omega_det)
    tanh_over_r = math.exp(-math.pi * omega_det - sq.log_r)
    return math.pi * tanh_over_r * delta_omega_det / (1.0 + sq.tanh_r**2)


def validity_status(ratio: float) -> ValidityStatus:
    """Classify a validity ratio: PASS below 0.05, WARN up to 0.1, FAIL beyond."""
    if ratio >= VALIDITY_THRESHOLD:
        return ValidityStatus.FAIL
    if ratio >= VALIDITY_WARN_THRESHOLD:
        return ValidityStatus.WARN
    return ValidityStatus.PASS


def bandwidth_crossover(q_factor: float, threshold: float = VALIDITY_THRESHOLD) -> float:
    """Detector centre Omega at which the validity ratio reaches threshold for quality factor Q."""
    if q_factor <= 0:
        raise ValueError(f"quality factor must be positive, got {q_factor}")

    def excess(omega: float) -> float:
        return peaked_validity(omega, omega / q_factor) - threshold

    upper = 1.0
    while excess(upper) < 0:
        upper *= 2.0
        if upper > 1.0e12:
            raise ValueError(f"validity ratio never reaches {threshold} for Q={q_factor}")
    return float(brentq(excess, 1.0e-9, upper, xtol=1.0e-12))


def acceleration_to_band(
    detector: DetectorSpec, ctx: AccelerationContext
) -> tuple[float, float]:
    """Detector centre and width on the dimensionless Rindler axis.

    The quality factor is unchanged by the map since centre and width share the factor 1/a.
    """
    if detector.center_per_s <= 0:
        raise ValueError(f"detector centre must be positive, got {detector.center_per_s}")
    return ctx.to_dimensionless(detector.center_per_s), ctx.to_dimensionless(detector.width_per_s)


def minimum_acceleration(
    detector: DetectorSpec,
    c_m_per_s: float = SPEED_OF_LIGHT_M_PER_S,
    threshold: float = VALIDITY_THRESHOLD,
) -> float:
    """Smallest proper acceleration that keeps the detector in the peaked regime (m/s^2)."""
    omega_limit = bandwidth_crossover(detector.q_factor, threshold)
    return detector.center_per_s / omega_limit * c_m_per_s


def tmsv_vacuum_coeffs(sq: SqueezeParam, t: TruncationConfig) -> np.ndarray:
    """Schmidt coefficients tanh^n r / cosh r of the squeezed vacuum, n = 0..n_max."""
    n = np.arange(t.n_max + 1)
    return np.sqrt(sq.sech2_r) * sq.tanh_r**n


@dataclass(frozen=True)
class ExcitationCoeffs:
    """Truncated expansion of one Unruh excitation on the squeezed vacuum."""

    kind: PairKind
    amplitudes: np.ndarray
    """sqrt(n+1) tanh^n r / cosh^2 r for n = 0..n_max-1"""

    @property
    def occupations(self) -> list[tuple[int, int]]:
        """(region I, region II) occupation carried by each amplitude."""
        if self.kind is PairKind.R1:
            return [(n + 1, n) for n in range(len(self.amplitudes))]
        return [(n, n + 1) for n in range(len(self.amplitudes))]


def tmsv_excitation_coeffs(kind: PairKind, sq: SqueezeParam, t: TruncationConfig) -> ExcitationCoeffs:
    """Coefficients of a_R^dagger or a_L^dagger applied to the squeezed vacuum.

    Only terms whose occupations respect the per-mode cutoff are kept, so the list runs
    over n = 0..n_max-1 and the larger occupation is at most n_max.
    """
    if kind is PairKind.VAC:
        raise ValueError("use tmsv_vacuum_coeffs for the vacuum expansion")
    n = np.arange(t.n_max)
    amplitudes = np.sqrt(n + 1.0) * sq.tanh_r**n * sq.sech2_r
    return ExcitationCoeffs(kind=kind, amplitudes=amplitudes)


def truncation_tail(sq: SqueezeParam, n_max: int, kind: PairKind = PairKind.VAC) -> float:
    """Probability mass discarded by truncating an expansion at per-mode cutoff n_max.

    Vacuum: tanh^(2(n_max+1)) r. Excitations (either kind): the remainder of
    sum (n+1) T^n (1-T)^2 with T = tanh^2 r, i.e. T^n_max ((n_max+1) - n_max T).
    """
    if n_max < 1:
        raise ValueError(f"n_max must be at least 1, got {n_max}")
    big_t = sq.tanh_r**2
    if kind is PairKind.VAC:
        return big_t ** (n_max + 1)
    return big_t**n_max * ((n_max + 1) - n_max * big_t)


def required_cutoff(sq: SqueezeParam, tail_tol: float, limit: int = 400) -> int:
    """Smallest n_max whose vacuum and excitation tails are both within tail_tol."""
    for n_max in range(1, limit + 1):
        worst = max(truncation_tail(sq, n_max, PairKind.VAC), truncation_tail(sq, n_max, PairKind.R1))
        if worst <= tail_tol:
            return n_max
    raise TruncationError(f"no cutoff up to {limit} reaches tail {tail_tol:.1e} at r={sq.r:.4g}")
