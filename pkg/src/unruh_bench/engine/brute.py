"""Engine B: brute-force discretized construction.

The detector band is split into m Gauss-Legendre bins. Every bin and helicity carries its own
(I, II) squeezed pair with the bin's own r, the photon is added through discretized Unruh
creation operators, region I is rotated so the detector mode comes first, and everything else
is traced out.

The up photon only touches (I up, II down, out-of-band up) and the down photon only
(I down, II up, out-of-band down), so both channels are built and traced separately and the
Alice blocks are Kronecker products of per-channel traces. joint_ket builds the undivided
state for checking that factorization.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from itertools import product

import numpy as np

from unruh_bench.engine.capture import (
    DetectorBand,
    band_amplitudes,
    capture_from_amplitudes,
    detector_band,
    spread_on_band,
)
from unruh_bench.engine.complexity import check_budget, complexity_estimate
from unruh_bench.engine.reduced import ChannelBlocks, ReducedState, branch_density
from unruh_bench.fock.density import cross_trace, partial_trace
from unruh_bench.fock.ket import SparseKet
from unruh_bench.fock.modes import Helicity, ModeLabel, ModeRole, ModeSet, Region
from unruh_bench.fock.operators import LadderTerm, apply_ladder_sum, fock_lift_rotation, tensor
from unruh_bench.logging import get_logger
from unruh_bench.models.scenario import EngineKind, ScenarioConfig
from unruh_bench.spectral.profile import SpectralAmplitude
from unruh_bench.squeezing import SqueezeParam, acceleration_to_band, squeeze_param

logger = get_logger(__name__)

ALICE = ModeLabel(Region.ALICE, role=ModeRole.QUBIT)


def region_one(helicity: Helicity, j: int) -> ModeLabel:
    return ModeLabel(Region.I, helicity, ModeRole.BIN, j)


def region_two(helicity: Helicity, j: int) -> ModeLabel:
    """Region-II partner of the region-I bin of the given helicity (opposite helicity)."""
    return ModeLabel(Region.II, helicity.flipped, ModeRole.BIN, j)


def out_of_band(helicity: Helicity) -> ModeLabel:
    return ModeLabel(Region.ENV, helicity, ModeRole.OUT_OF_BAND)


def detector_mode(helicity: Helicity) -> ModeLabel:
    return ModeLabel(Region.I, helicity, ModeRole.DETECTOR)


def complement_mode(helicity: Helicity, k: int) -> ModeLabel:
    return ModeLabel(Region.I, helicity, ModeRole.COMPLEMENT, k)


def channel_modes(helicity: Helicity, m: int, n_max: int) -> ModeSet:
    """Modes touched by the photon of one helicity."""
    ones = [region_one(helicity, j) for j in range(m)]
    twos = [region_two(helicity, j) for j in range(m)]
    return ModeSet(
        labels=(*ones, *twos, out_of_band(helicity)),
        cutoffs=(n_max,) * (2 * m) + (1,),
        partners=tuple(zip(ones, twos, strict=True)),
    )


def squeezed_vacuum(modes: ModeSet, helicity: Helicity, squeezes: Sequence[SqueezeParam]) -> SparseKet:
    """Product of per-bin squeezed vacua sum_n tanh^n r / cosh r |n, n>, truncated per mode.

    The missing norm of the truncated product is recorded as the ket's loss.
    """
    m = len(squeezes)
    ones = [modes.index(region_one(helicity, j)) for j in range(m)]
    twos = [modes.index(region_two(helicity, j)) for j in range(m)]
    cutoffs = [modes.cutoffs[p] for p in ones]
    per_bin = [
        [math.sqrt(sq.sech2_r) * sq.tanh_r**n for n in range(cutoff + 1)]
        for sq, cutoff in zip(squeezes, cutoffs, strict=True)
    ]

    terms: dict[tuple[int, ...], complex] = {}
    for ns in product(*(range(c + 1) for c in cutoffs)):
        occupation = [0] * len(modes)
        amplitude = 1.0
        for j, n in enumerate(ns):
            occupation[ones[j]] = n
            occupation[twos[j]] = n
            amplitude *= per_bin[j][n]
        terms[tuple(occupation)] = amplitude
    ket = SparseKet.from_terms(modes, terms)
    return SparseKet(modes=ket.modes, amplitudes=ket.amplitudes, loss=max(0.0, 1.0 - ket.norm_squared()))


def photon_terms(
    helicity: Helicity,
    squeezes: Sequence[SqueezeParam],
    x_r: np.ndarray,
    x_l: np.ndarray,
) -> list[LadderTerm]:
    """sum_j x_R,j A_R,j^dagger + x_L,j A_L,j^dagger + sqrt(w_out) E^dagger as ladder terms.

    A_R^dagger = cosh r a_I^dagger - sinh r a_II and A_L^dagger = cosh r a_II^dagger - sinh r a_I.
    """
    terms: list[LadderTerm] = []
    for j, sq in enumerate(squeezes):
        one, two = region_one(helicity, j), region_two(helicity, j)
        terms.append((complex(x_r[j]) * sq.cosh_r, one, True))
        terms.append((-complex(x_r[j]) * sq.sinh_r, two, False))
        terms.append((complex(x_l[j]) * sq.cosh_r, two, True))
        terms.append((-complex(x_l[j]) * sq.sinh_r, one, False))
    w_out = 1.0 - float(np.sum(np.abs(x_r) ** 2 + np.abs(x_l) ** 2))
    if w_out > 0:
        terms.append((math.sqrt(w_out), out_of_band(helicity), True))
    return terms


def detector_rotation(g_hat: np.ndarray) -> np.ndarray:
    """Unitary U with a_j^dagger = sum_k U_kj b_k^dagger and b_0^dagger = sum_j g_j a_j^dagger.

    Row 0 is conj(g); the remaining rows complete it by QR orthonormalization.
    """
    g = np.asarray(g_hat, dtype=complex)
    m = g.size
    q, r = np.linalg.qr(np.column_stack([g, np.eye(m, dtype=complex)]))
    q = q[:, :m]
    phase = r[0, 0] / abs(r[0, 0])
    q[:, 0] *= phase
    return q.conj().T


def rotate_to_detector(ket: SparseKet, helicity: Helicity, unitary: np.ndarray) -> SparseKet:
    """Re-express the region-I bins of one helicity as detector mode plus complement."""
    m = unitary.shape[0]
    new_labels = [detector_mode(helicity), *(complement_mode(helicity, k) for k in range(1, m))]
    return fock_lift_rotation(ket, [region_one(helicity, j) for j in range(m)], unitary, new_labels=new_labels)


@dataclass(frozen=True, eq=False)
class ChannelKets:
    """One helicity channel with and without the photon, after the detector rotation."""

    helicity: Helicity
    vacuum: SparseKet
    excited: SparseKet

    @property
    def detector(self) -> ModeLabel:
        return detector_mode(self.helicity)

    def blocks(self, n_max: int) -> ChannelBlocks:
        """Traces onto the detector mode, cut back to n_max photons."""
        keep = [self.detector]
        cutoffs = {self.detector: n_max}
        return ChannelBlocks(
            excited=partial_trace(self.excited, keep, cutoffs).matrix,
            vacuum=partial_trace(self.vacuum, keep, cutoffs).matrix,
            coherence=cross_trace(self.excited, self.vacuum, keep, cutoffs),
        )


def channel_kets(
    helicity: Helicity,
    band: DetectorBand,
    x_r: np.ndarray,
    x_l: np.ndarray,
    squeezes: Sequence[SqueezeParam],
    n_max: int,
    region_two_unitary: np.ndarray | None = None,
) -> ChannelKets:
    """Build, excite and rotate one helicity channel.

    region_two_unitary, if given, rotates the region-II bins before anything is traced; the
    reduced state must not depend on it.
    """
    m = len(squeezes)
    modes = channel_modes(helicity, m, n_max)
    vacuum = squeezed_vacuum(modes, helicity, squeezes)
    excited = apply_ladder_sum(vacuum, photon_terms(helicity, squeezes, x_r, x_l))
    logger.debug(f"{helicity.arrow} channel: {len(vacuum)} vacuum terms, {len(excited)} excited terms")

    if region_two_unitary is not None:
        twos = [region_two(helicity, j) for j in range(m)]
        vacuum = fock_lift_rotation(vacuum, twos, region_two_unitary)
        excited = fock_lift_rotation(excited, twos, region_two_unitary)

    unitary = detector_rotation(band.g_hat)
    return ChannelKets(
        helicity=helicity,
        vacuum=rotate_to_detector(vacuum, helicity, unitary),
        excited=rotate_to_detector(excited, helicity, unitary),
    )


def joint_ket(p: complex, q: complex, up: ChannelKets, down: ChannelKets) -> SparseKet:
    """Full state P|a>|x_up>|vac_down> + Q|b>|vac_up>|y_down> over Alice and both channels."""
    qubit = ModeSet(labels=(ALICE,), cutoffs=(1,))
    branch_a = tensor(SparseKet.basis(qubit, (0,)), tensor(up.excited, down.vacuum))
    branch_b = tensor(SparseKet.basis(qubit, (1,)), tensor(up.vacuum, down.excited))
    return branch_a.scaled(p) + branch_b.scaled(q)


def bin_squeezes(band: DetectorBand, constant_r: bool) -> list[SqueezeParam]:
    """Per-bin squeezing, or the band-centre value in every bin."""
    if constant_r:
        return [squeeze_param(band.omega_det)] * len(band)
    return [squeeze_param(float(omega)) for omega in band.nodes]


def brute_force_from_amplitudes(
    p: complex,
    q: complex,
    band: DetectorBand,
    x: tuple[np.ndarray, np.ndarray],
    y: tuple[np.ndarray, np.ndarray],
    squeezes: Sequence[SqueezeParam],
    n_max: int,
    region_two_unitary: np.ndarray | None = None,
) -> ReducedState:
    """Engine B for given weighted band amplitudes (x_R, x_L) of each photon."""
    up = channel_kets(Helicity.UP, band, x[0], x[1], squeezes, n_max, region_two_unitary)
    down = channel_kets(Helicity.DOWN, band, y[0], y[1], squeezes, n_max, region_two_unitary)
    matrix = branch_density(p, q, up.blocks(n_max), down.blocks(n_max))
    return ReducedState.from_unnormalized(
        matrix,
        n_max,
        EngineKind.BRUTE,
        squeeze=squeeze_param(band.omega_det),
        capture_x=capture_from_amplitudes(band.g_hat, x[0], x[1]),
        capture_y=capture_from_amplitudes(band.g_hat, y[0], y[1]),
    )


def brute_force_reduced_state(
    cfg: ScenarioConfig,
    m: int | None = None,
    a_proper_m_per_s2: float | None = None,
    *,
    constant_r: bool | None = None,
    region_two_unitary: np.ndarray | None = None,
    profiles: tuple[SpectralAmplitude, SpectralAmplitude] | None = None,
) -> ReducedState:
    """Engine B at one acceleration with m bins (grid.bins by default).

    Raises:
        ValueError: If m exceeds grid.bins_cap or the detector width is zero
        BudgetExceededError: If the predicted support exceeds engine.budget_terms
    """
    m = cfg.grid.bins if m is None else m
    if not 1 <= m <= cfg.grid.bins_cap:
        raise ValueError(f"bins must lie in [1, {cfg.grid.bins_cap}], got {m}")
    n_max = cfg.truncation.n_max
    estimate = check_budget(complexity_estimate(m, n_max), cfg.engine.budget_terms)
    logger.debug(f"Brute-force run: {estimate.describe()}")

    ctx = cfg.acceleration if a_proper_m_per_s2 is None else cfg.at(a_proper_m_per_s2)
    _, delta = acceleration_to_band(cfg.detector, ctx)
    if not delta > 0:
        raise ValueError("the brute-force engine needs a positive detector width")
    band = detector_band(cfg.detector, ctx, m)

    if profiles is None:
        profiles = (cfg.state.profile_x.build(cfg.grid.omega_nodes), cfg.state.profile_y.build(cfg.grid.omega_nodes))
    x, y = (band_amplitudes(spread_on_band(profile, band, ctx.a, cfg.grid.omega_nodes), band) for profile in profiles)
    use_constant = cfg.engine.constant_r if constant_r is None else constant_r
    return brute_force_from_amplitudes(
        cfg.state.p,
        cfg.state.q,
        band,
        x,
        y,
        bin_squeezes(band, use_constant),
        n_max,
        region_two_unitary=region_two_unitary,
    )
