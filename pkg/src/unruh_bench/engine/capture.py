"""Detector band discretization and capture amplitudes."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from unruh_bench.config import DEFAULT_BAND_NODES, DEFAULT_OMEGA_NODES
from unruh_bench.logging import get_logger
from unruh_bench.models.scenario import DetectorShape, DetectorSpec
from unruh_bench.spectral.grid import FrequencyGrid, gauss_legendre
from unruh_bench.spectral.profile import SpectralAmplitude
from unruh_bench.spectral.transform import UnruhSpread, unruh_spread
from unruh_bench.squeezing import AccelerationContext, acceleration_to_band

logger = get_logger(__name__)

GAUSSIAN_BAND_HALF_WIDTHS = 2.0
"""A Gaussian detector (s = width/2) is cut at +/- 4 s, i.e. +/- 2 widths"""

CAUCHY_SCHWARZ_SLACK = 1.0e-8


class BandOutsideGridError(ValueError):
    """The detector band is not inside the interval the spread was sampled on."""


def detector_density(
    shape: DetectorShape, omega: np.ndarray, omega_det: float, delta_omega_det: float
) -> np.ndarray:
    """Unit-norm detector profile g(Omega) on the dimensionless axis."""
    omega = np.asarray(omega, dtype=float)
    if shape is DetectorShape.TOP_HAT:
        inside = np.abs(omega - omega_det) <= 0.5 * delta_omega_det
        return np.where(inside, delta_omega_det**-0.5, 0.0)
    s = 0.5 * delta_omega_det
    return (2.0 * math.pi * s**2) ** -0.25 * np.exp(-((omega - omega_det) ** 2) / (4.0 * s**2))


@dataclass(frozen=True, eq=False)
class DetectorBand:
    """Detector mode sampled on quadrature nodes across its band.

    g_hat_j = g(Omega_j) sqrt(w_j), normalized so sum |g_hat|^2 = 1 on the nodes.
    """

    grid: FrequencyGrid
    g_hat: np.ndarray
    omega_det: float
    delta_omega_det: float

    def __post_init__(self) -> None:
        if self.g_hat.shape != self.grid.nodes.shape:
            raise ValueError("g_hat must have one entry per band node")
        norm = float(np.linalg.norm(self.g_hat))
        if not math.isclose(norm, 1.0, rel_tol=0.0, abs_tol=1.0e-12):
            raise ValueError(f"detector amplitudes must have unit norm, got {norm}")

    @property
    def nodes(self) -> np.ndarray:
        return self.grid.nodes

    def __len__(self) -> int:
        return len(self.grid)


def detector_band(
    detector: DetectorSpec,
    ctx: AccelerationContext,
    n_nodes: int = DEFAULT_BAND_NODES,
) -> DetectorBand:
    """Gauss-Legendre discretization of the detector band at acceleration ctx.

    Raises:
        ValueError: If the detector width is zero or the band reaches Omega <= 0
    """
    omega_det, delta = acceleration_to_band(detector, ctx)
    if not delta > 0:
        raise ValueError("the detector band needs a positive width")

    half = 0.5 * delta if detector.shape is DetectorShape.TOP_HAT else GAUSSIAN_BAND_HALF_WIDTHS * delta
    lo, hi = omega_det - half, omega_det + half
    if lo <= 0:
        raise ValueError(f"detector band [{lo:.4g}, {hi:.4g}] reaches Omega <= 0")

    grid = gauss_legendre(lo, hi, n_nodes)
    g = detector_density(detector.shape, grid.nodes, omega_det, delta) * np.sqrt(grid.weights)
    return DetectorBand(grid=grid, g_hat=g / np.linalg.norm(g), omega_det=omega_det, delta_omega_det=delta)


def spread_on_band(
    profile: SpectralAmplitude,
    band: DetectorBand,
    a: float,
    min_omega_nodes: int = DEFAULT_OMEGA_NODES,
) -> UnruhSpread:
    """Spread evaluated exactly at the band nodes."""
    return unruh_spread(profile, a, band.grid, min_omega_nodes)


def band_amplitudes(spread: UnruhSpread, band: DetectorBand) -> tuple[np.ndarray, np.ndarray]:
    """Weighted amplitudes x_hat = X(Omega_j) sqrt(w_j) at the band nodes.

    A spread sampled on the band grid is used as is; any other grid must contain the band and
    is linearly interpolated.

    Raises:
        BandOutsideGridError: If the band is not inside the spread's grid interval
    """
    if spread.grid is band.grid or np.array_equal(spread.omega_nodes, band.nodes):
        x_r, x_l = spread.x_r, spread.x_l
    else:
        if not spread.grid.contains(band.grid.lo, band.grid.hi):
            raise BandOutsideGridError(
                f"detector band [{band.grid.lo:.4g}, {band.grid.hi:.4g}] lies outside the spread grid "
                f"[{spread.grid.lo:.4g}, {spread.grid.hi:.4g}]"
            )
        nodes = spread.omega_nodes
        x_r = np.interp(band.nodes, nodes, spread.x_r.real) + 1j * np.interp(band.nodes, nodes, spread.x_r.imag)
        x_l = np.interp(band.nodes, nodes, spread.x_l.real) + 1j * np.interp(band.nodes, nodes, spread.x_l.imag)
    root_w = np.sqrt(band.grid.weights)
    return x_r * root_w, x_l * root_w


@dataclass(frozen=True)
class CaptureAmplitudes:
    """Overlaps of one photon's Unruh spread with the detector mode."""

    eps_r: complex
    eps_l: complex
    w_env: float
    """Weight outside the detector mode, 1 - |eps_R|^2 - |eps_L|^2 clamped at zero"""

    @property
    def captured(self) -> float:
        return abs(self.eps_r) ** 2 + abs(self.eps_l) ** 2

    @property
    def q_r(self) -> float:
        """Relative right-Unruh weight |eps_R| / sqrt(captured)."""
        total = self.captured
        return abs(self.eps_r) / math.sqrt(total) if total > 0 else 0.0

    @property
    def q_l(self) -> float:
        total = self.captured
        return abs(self.eps_l) / math.sqrt(total) if total > 0 else 0.0

    def to_dict(self) -> dict[str, float]:
        return {
            "eps_r_real": self.eps_r.real,
            "eps_r_imag": self.eps_r.imag,
            "eps_l_real": self.eps_l.real,
            "eps_l_imag": self.eps_l.imag,
            "w_env": self.w_env,
        }


def capture_from_amplitudes(
    g_hat: np.ndarray,
    x_r: np.ndarray,
    x_l: np.ndarray,
    tamper_l: bool = False,
) -> CaptureAmplitudes:
    """eps_R = sum conj(g_hat) x_hat_R and eps_L = sum g_hat x_hat_L.

    The right channel couples through region-I creation operators and the left channel through
    region-I annihilation operators, hence the conjugation only on the right. tamper_l conjugates
    eps_L to break that convention on purpose.
    """
    eps_r = complex(np.dot(np.conj(g_hat), x_r))
    eps_l = complex(np.dot(g_hat, x_l))
    if tamper_l:
        eps_l = eps_l.conjugate()

    captured = abs(eps_r) ** 2 + abs(eps_l) ** 2
    w_env = 1.0 - captured
    if w_env < 0:
        if captured > 1.0 + CAUCHY_SCHWARZ_SLACK:
            logger.warning(f"Captured weight {captured:.12f} exceeds 1; environment weight clamped to 0")
        w_env = 0.0
    return CaptureAmplitudes(eps_r=eps_r, eps_l=eps_l, w_env=w_env)


def capture_amplitudes(
    spread: UnruhSpread,
    det: DetectorSpec | DetectorBand,
    ctx: AccelerationContext | None = None,
    band_nodes: int = DEFAULT_BAND_NODES,
    tamper_l: bool = False,
) -> CaptureAmplitudes:
    """Project a spread onto the detector mode.

    det is either a detector specification (discretized at ctx with band_nodes nodes) or an
    already discretized band.

    Raises:
        BandOutsideGridError: If the band is not inside the spread's grid interval
    """
    if isinstance(det, DetectorSpec):
        if ctx is None:
            raise ValueError("a detector specification needs an acceleration context")
        det = detector_band(det, ctx, band_nodes)
    x_r, x_l = band_amplitudes(spread, det)
    return capture_from_amplitudes(det.g_hat, x_r, x_l, tamper_l=tamper_l)
