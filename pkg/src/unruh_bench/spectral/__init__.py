"""Wavepacket frequency profiles and their Unruh-basis spreads."""

from unruh_bench.spectral.grid import (
    FrequencyGrid,
    gauss_legendre,
    gauss_legendre_panels,
    log_uniform_grid,
)
from unruh_bench.spectral.profile import (
    Chirp,
    ProfileSuperposition,
    SpectralAmplitude,
    SpectralProfile,
    gaussian_profile,
    superpose,
)
from unruh_bench.spectral.transform import (
    SpreadResolutionError,
    UnruhSpread,
    evaluate_spread,
    parseval_defect,
    resolve_spread,
    unruh_kernel,
    unruh_spread,
)

__all__ = [
    "Chirp",
    "FrequencyGrid",
    "ProfileSuperposition",
    "SpectralAmplitude",
    "SpectralProfile",
    "SpreadResolutionError",
    "UnruhSpread",
    "evaluate_spread",
    "gauss_legendre",
    "gauss_legendre_panels",
    "gaussian_profile",
    "log_uniform_grid",
    "parseval_defect",
    "resolve_spread",
    "superpose",
    "unruh_kernel",
    "unruh_spread",
]
