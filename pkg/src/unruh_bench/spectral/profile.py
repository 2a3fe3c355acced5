"""One-photon Minkowski frequency profiles."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Protocol

import numpy as np

from unruh_bench.config import DEFAULT_OMEGA_NODES, MIN_CENTER_TO_WIDTH, PROFILE_SUPPORT_WIDTHS
from unruh_bench.spectral.grid import FrequencyGrid, gauss_legendre_panels, panels_for


class SpectralAmplitude(Protocol):
    """Anything that samples a complex amplitude x(omega) over a bounded support."""

    @property
    def support(self) -> tuple[float, float]: ...

    @property
    def log_phase_rate(self) -> float: ...

    @property
    def spread_scale(self) -> float: ...

    def amplitude(self, omega: np.ndarray) -> np.ndarray: ...


@dataclass(frozen=True)
class Chirp:
    """Phase theta(omega) = log_rate * ln(omega/omega0) + quadratic * ((omega - omega0)/sigma)^2."""

    log_rate: float = 0.0
    """Shifts the Rindler spread by +log_rate in Omega"""

    quadratic: float = 0.0

    @property
    def is_trivial(self) -> bool:
        return self.log_rate == 0 and self.quadratic == 0

    def phase(self, omega: np.ndarray, omega0: float, sigma: float) -> np.ndarray:
        return self.log_rate * np.log(omega / omega0) + self.quadratic * ((omega - omega0) / sigma) ** 2

    def log_rate_bound(self, omega0: float, sigma: float, hi: float) -> float:
        """Upper bound of |d theta / d ln(omega)| on a support ending at hi."""
        return abs(self.log_rate) + 2.0 * abs(self.quadratic) * hi * PROFILE_SUPPORT_WIDTHS / sigma


@dataclass(frozen=True)
class SpectralProfile:
    """Unit-normalized Gaussian amplitude (2 pi omega)^(-1/4) exp(-(omega-omega0)^2 / 4 sigma^2).

    The printed Gaussian form is not unit-norm; normalization is the numerically determined
    constant making the support quadrature of |x|^2 equal one.
    """

    omega0: float
    """Centre angular frequency (rad/s)"""

    sigma: float
    """Width (rad/s)"""

    chirp: Chirp = field(default_factory=Chirp)

    normalization: float = 1.0
    """Multiplies the printed Gaussian form"""

    @property
    def support(self) -> tuple[float, float]:
        lo = max(self.omega0 - PROFILE_SUPPORT_WIDTHS * self.sigma, 1.0e-3 * self.sigma)
        return lo, self.omega0 + PROFILE_SUPPORT_WIDTHS * self.sigma

    @property
    def log_phase_rate(self) -> float:
        return self.chirp.log_rate_bound(self.omega0, self.sigma, self.support[1])

    @property
    def spread_scale(self) -> float:
        """omega0/sigma, twice the standard deviation of |X_R|^2 over Omega."""
        return self.omega0 / self.sigma

    def envelope(self, omega: np.ndarray) -> np.ndarray:
        """Printed (unnormalized, chirp-free) Gaussian form."""
        omega = np.asarray(omega, dtype=float)
        return (2.0 * math.pi * omega) ** -0.25 * np.exp(-((omega - self.omega0) ** 2) / (4.0 * self.sigma**2))

    def amplitude(self, omega: np.ndarray) -> np.ndarray:
        omega = np.asarray(omega, dtype=float)
        values = self.normalization * self.envelope(omega)
        if self.chirp.is_trivial:
            return values.astype(complex)
        return values * np.exp(1j * self.chirp.phase(omega, self.omega0, self.sigma))

    def support_grid(self, n_nodes: int = DEFAULT_OMEGA_NODES) -> FrequencyGrid:
        lo, hi = self.support
        return gauss_legendre_panels(lo, hi, panels_for(n_nodes))

    def norm_squared(self, grid: FrequencyGrid | None = None) -> float:
        grid = grid or self.support_grid()
        return float(grid.integrate(np.abs(self.amplitude(grid.nodes)) ** 2))

    def to_dict(self) -> dict[str, float]:
        return {
            "omega0_rad_per_s": self.omega0,
            "sigma_rad_per_s": self.sigma,
            "chirp_log_rate": self.chirp.log_rate,
            "chirp_quadratic": self.chirp.quadratic,
            "normalization": self.normalization,
        }


def gaussian_profile(
    omega0: float,
    sigma: float,
    chirp: Chirp | None = None,
    n_nodes: int = DEFAULT_OMEGA_NODES,
) -> SpectralProfile:
    """Build a unit-normalized Gaussian profile, optionally chirped.

    Raises:
        ValueError: If sigma or omega0 is not positive, or omega0/sigma < 5
    """
    if not sigma > 0 or not omega0 > 0:
        raise ValueError(f"profile centre and width must be positive, got omega0={omega0}, sigma={sigma}")
    if omega0 / sigma < MIN_CENTER_TO_WIDTH:
        raise ValueError(
            f"omega0/sigma = {omega0 / sigma:.3g} is below {MIN_CENTER_TO_WIDTH:g}; "
            "the profile would extend onto omega <= 0"
        )

    raw = SpectralProfile(omega0=omega0, sigma=sigma, chirp=chirp or Chirp())
    norm_sq = raw.norm_squared(raw.support_grid(n_nodes))
    return SpectralProfile(
        omega0=omega0,
        sigma=sigma,
        chirp=raw.chirp,
        normalization=1.0 / math.sqrt(norm_sq),
    )


@dataclass(frozen=True)
class ProfileSuperposition:
    """Linear combination sum_k c_k x_k(omega) of profiles (not renormalized)."""

    terms: tuple[tuple[complex, SpectralAmplitude], ...]

    @property
    def support(self) -> tuple[float, float]:
        supports = [p.support for _, p in self.terms]
        return min(lo for lo, _ in supports), max(hi for _, hi in supports)

    @property
    def log_phase_rate(self) -> float:
        return max((p.log_phase_rate for _, p in self.terms), default=0.0)

    @property
    def spread_scale(self) -> float:
        return max((p.spread_scale for _, p in self.terms), default=0.0)

    def amplitude(self, omega: np.ndarray) -> np.ndarray:
        omega = np.asarray(omega, dtype=float)
        total = np.zeros(omega.shape, dtype=complex)
        for coeff, profile in self.terms:
            total += coeff * profile.amplitude(omega)
        return total


def superpose(terms: Sequence[tuple[complex, SpectralAmplitude]]) -> ProfileSuperposition:
    """Combine profiles linearly; a zero coefficient list gives the zero profile."""
    if not terms:
        raise ValueError("superpose needs at least one term")
    return ProfileSuperposition(terms=tuple(terms))
