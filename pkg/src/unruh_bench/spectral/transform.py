"""Minkowski to Unruh change of basis.

Per helicity the massless 1+1 kernel is alpha_R(omega, Omega) = (2 pi omega)^(-1/2) (omega/a)^(+i Omega)
and alpha_L = (2 pi omega)^(-1/2) (omega/a)^(-i Omega). In u = ln(omega/a) the map
X_R(Omega) = int d(omega) conj(alpha_R) x(omega) is the unitary Fourier transform of sqrt(omega) x(omega),
evaluated at +Omega for R and -Omega for L, so the spread of a unit-norm profile has unit norm
over Omega > 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from unruh_bench.config import (
    DEFAULT_OMEGA_NODES,
    DEFAULT_SPREAD_NODES,
    MAX_WINDOW_DOUBLINGS,
    OMEGA_NODES_PER_PERIOD,
    PARSEVAL_FAILURE,
    WINDOW_IMPROVEMENT,
)
from unruh_bench.logging import get_logger
from unruh_bench.spectral.grid import FrequencyGrid, gauss_legendre, gauss_legendre_panels, panels_for
from unruh_bench.spectral.profile import SpectralAmplitude

logger = get_logger(__name__)

_ROW_CHUNK = 256
"""Omega rows evaluated per kernel block"""

_INITIAL_WINDOW = 10.0


class SpreadResolutionError(RuntimeError):
    """The Omega grid is too narrow or too coarse to resolve the spread."""


@dataclass(frozen=True, eq=False)
class UnruhSpread:
    """Unruh-basis amplitudes of a one-photon wavepacket on a grid of dimensionless frequencies."""

    grid: FrequencyGrid
    """Omega nodes and weights"""

    x_r: np.ndarray
    x_l: np.ndarray

    a: float
    """Acceleration frequency used for the transform (1/s)"""

    @property
    def omega_nodes(self) -> np.ndarray:
        return self.grid.nodes

    @property
    def omega_weights(self) -> np.ndarray:
        return self.grid.weights

    @property
    def defect(self) -> float:
        return parseval_defect(self)

    @property
    def resolved(self) -> bool:
        return self.defect <= PARSEVAL_FAILURE

    def require_resolved(self) -> UnruhSpread:
        """Return self, raising SpreadResolutionError if the Parseval defect exceeds 1e-2."""
        defect = self.defect
        if defect > PARSEVAL_FAILURE:
            raise SpreadResolutionError(
                f"Parseval defect {defect:.3e} exceeds {PARSEVAL_FAILURE:.0e} on "
                f"Omega in [{self.grid.lo:.4g}, {self.grid.hi:.4g}] with {len(self.grid)} nodes"
            )
        return self


def unruh_kernel(omega: float | np.ndarray, big_omega: float | np.ndarray, a: float) -> tuple[np.ndarray, np.ndarray]:
    """Kernel pair (alpha_R, alpha_L) at Minkowski frequency omega and Rindler frequency Omega.

    Arrays broadcast against each other.

    Raises:
        ValueError: If omega, Omega or a is not positive
    """
    omega = np.asarray(omega, dtype=float)
    big_omega = np.asarray(big_omega, dtype=float)
    if not a > 0:
        raise ValueError(f"acceleration frequency must be positive, got {a}")
    if np.any(omega <= 0):
        raise ValueError("Minkowski frequency omega must be positive")
    if np.any(big_omega <= 0):
        raise ValueError("Rindler frequency Omega must be positive")

    modulus = (2.0 * math.pi * omega) ** -0.5
    phase = big_omega * (np.log(omega) - math.log(a))
    return modulus * np.exp(1j * phase), modulus * np.exp(-1j * phase)


def omega_quadrature(profile: SpectralAmplitude, omega_max: float, min_nodes: int = DEFAULT_OMEGA_NODES) -> FrequencyGrid:
    """Gauss-Legendre panels over the profile support, fine enough for the kernel phase.

    The integrand oscillates in ln(omega) with rate up to omega_max plus the profile's own
    chirp rate; each period gets at least 20 nodes.
    """
    lo, hi = profile.support
    log_span = math.log(hi / lo)
    rate = abs(omega_max) + profile.log_phase_rate
    n_nodes = max(min_nodes, math.ceil(OMEGA_NODES_PER_PERIOD * rate * log_span / (2.0 * math.pi)))
    return gauss_legendre_panels(lo, hi, panels_for(n_nodes))


def evaluate_spread(
    profile: SpectralAmplitude,
    a: float,
    big_omega: np.ndarray,
    min_nodes: int = DEFAULT_OMEGA_NODES,
) -> tuple[np.ndarray, np.ndarray]:
    """X_R and X_L at the given positive Omega values by direct quadrature over omega."""
    big_omega = np.atleast_1d(np.asarray(big_omega, dtype=float))
    if not a > 0:
        raise ValueError(f"acceleration frequency must be positive, got {a}")
    if np.any(big_omega <= 0):
        raise ValueError("Rindler frequency Omega must be positive")

    grid = omega_quadrature(profile, float(big_omega.max()), min_nodes)
    log_omega = np.log(grid.nodes) - math.log(a)
    # sqrt(omega) x(omega) du with du = d(omega)/omega, scaled by (2 pi)^(-1/2)
    weighted = grid.weights * (2.0 * math.pi * grid.nodes) ** -0.5 * profile.amplitude(grid.nodes)

    x_r = np.empty(big_omega.shape, dtype=complex)
    x_l = np.empty(big_omega.shape, dtype=complex)
    for start in range(0, big_omega.size, _ROW_CHUNK):
        rows = big_omega[start : start + _ROW_CHUNK]
        phase = np.outer(rows, log_omega)
        x_r[start : start + _ROW_CHUNK] = np.exp(-1j * phase) @ weighted
        x_l[start : start + _ROW_CHUNK] = np.exp(1j * phase) @ weighted
    logger.debug(f"Spread evaluated at {big_omega.size} Omega nodes with {len(grid)} omega nodes")
    return x_r, x_l


def unruh_spread(
    profile: SpectralAmplitude,
    a: float,
    omega_grid: FrequencyGrid,
    min_nodes: int = DEFAULT_OMEGA_NODES,
) -> UnruhSpread:
    """Sample the Unruh spread of profile on omega_grid.

    The Parseval defect is available as metadata; use require_resolved() to reject grids
    that lose more than 1e-2 of the norm.
    """
    x_r, x_l = evaluate_spread(profile, a, omega_grid.nodes, min_nodes)
    return UnruhSpread(grid=omega_grid, x_r=x_r, x_l=x_l, a=a)


def parseval_defect(spread: UnruhSpread) -> float:
    """1 - sum_k w_k (|X_R|^2 + |X_L|^2)."""
    captured = spread.grid.integrate(np.abs(spread.x_r) ** 2 + np.abs(spread.x_l) ** 2)
    return float(1.0 - captured)


def initial_window(profile: SpectralAmplitude) -> float:
    """Starting Omega window: spread width plus chirp shift, at least 10."""
    return max(_INITIAL_WINDOW, profile.log_phase_rate + profile.spread_scale)


def resolve_spread(
    profile: SpectralAmplitude,
    a: float,
    n_nodes: int = DEFAULT_SPREAD_NODES,
    omega_max: float | None = None,
    min_omega_nodes: int = DEFAULT_OMEGA_NODES,
) -> UnruhSpread:
    """Spread on [0, omega_max] with n_nodes Gauss-Legendre nodes.

    Without an explicit omega_max the window starts at the spread width plus chirp shift and
    doubles until the Parseval defect improves by less than 1e-6 per doubling.

    Raises:
        SpreadResolutionError: If the final defect exceeds 1e-2
    """
    if omega_max is not None:
        spread = unruh_spread(profile, a, gauss_legendre(0.0, omega_max, n_nodes), min_omega_nodes)
        return spread.require_resolved()

    window = initial_window(profile)
    spread = unruh_spread(profile, a, gauss_legendre(0.0, window, n_nodes), min_omega_nodes)
    defect = spread.defect
    for _ in range(MAX_WINDOW_DOUBLINGS):
        candidate = unruh_spread(profile, a, gauss_legendre(0.0, 2.0 * window, n_nodes), min_omega_nodes)
        improvement = defect - candidate.defect
        logger.debug(
            f"Omega window {window:.4g} -> {2.0 * window:.4g}: defect {defect:.3e} -> {candidate.defect:.3e}"
        )
        if improvement <= WINDOW_IMPROVEMENT:
            break
        window, spread, defect = 2.0 * window, candidate, candidate.defect
    else:
        logger.warning(f"Omega window still improving after {MAX_WINDOW_DOUBLINGS} doublings")

    logger.debug(f"Resolved spread on [0, {window:.4g}] with Parseval defect {defect:.3e}")
    return spread.require_resolved()
