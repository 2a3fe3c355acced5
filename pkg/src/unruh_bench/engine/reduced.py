"""Reduced state of Alice's qubit and the two detector modes."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from unruh_bench.engine.capture import CaptureAmplitudes
from unruh_bench.entanglement import EntanglementResult, negativity
from unruh_bench.fock.density import DensityOperator
from unruh_bench.models.scenario import EngineKind
from unruh_bench.squeezing import SqueezeParam

PHYSICALITY_TOL = 1.0e-9


@dataclass(frozen=True)
class ChannelBlocks:
    """Traced operators of one helicity channel on its detector mode.

    excited = Tr|photon><photon|, vacuum = Tr|vac><vac| and coherence = Tr|photon><vac|,
    where |photon> is the channel after the photon was added and |vac> the channel without it.
    """

    excited: np.ndarray
    vacuum: np.ndarray
    coherence: np.ndarray


def branch_density(p: complex, q: complex, up: ChannelBlocks, down: ChannelBlocks) -> np.ndarray:
    """Unnormalized state of P|a>|x_up> + Q|b>|y_down> with each channel already traced.

    Alice's |a> is the first block row. The up photon leaves the down channel in its vacuum
    and the other way round, so each Alice block is a Kronecker product of channel operators.
    """
    aa = abs(p) ** 2 * np.kron(up.excited, down.vacuum)
    bb = abs(q) ** 2 * np.kron(up.vacuum, down.excited)
    ab = p * np.conj(q) * np.kron(up.coherence, down.coherence.conj().T)
    return np.block([[aa, ab], [ab.conj().T, bb]])


@dataclass(frozen=True, eq=False)
class ReducedState:
    """Density operator on (Alice qubit) x Fock(d_up) x Fock(d_down), renormalized once.

    Alice's |a> is basis index 0 and |b> index 1.
    """

    density: DensityOperator
    engine: EngineKind
    trunc_loss: float
    """Trace missing before the renormalization"""

    squeeze: SqueezeParam | None = None
    """Squeezing at the detector centre (peaked engine)"""

    capture_x: CaptureAmplitudes | None = None
    capture_y: CaptureAmplitudes | None = None
    validity_ratio: float | None = None

    @classmethod
    def from_unnormalized(cls, matrix: np.ndarray, n_max: int, engine: EngineKind, **diagnostics) -> ReducedState:
        """Divide by the trace once and record what was missing."""
        raw = DensityOperator(0.5 * (matrix + matrix.conj().T), (2, n_max + 1, n_max + 1))
        trace = raw.trace
        if not trace > 0:
            raise ValueError(f"cannot renormalize a reduced state with trace {trace}")
        loss = max(0.0, 1.0 - trace)
        density = DensityOperator(raw.matrix / trace, raw.dims, loss=loss)
        return cls(density=density, engine=engine, trunc_loss=loss, **diagnostics)

    @property
    def n_max(self) -> int:
        return self.density.dims[1] - 1

    @property
    def dims(self) -> tuple[int, ...]:
        return self.density.dims

    @property
    def matrix(self) -> np.ndarray:
        return self.density.matrix

    def is_physical(self, tol: float = PHYSICALITY_TOL) -> bool:
        """Hermitian, unit trace and no eigenvalue below -tol."""
        return (
            self.density.is_hermitian(tol)
            and abs(self.density.trace - 1.0) <= tol
            and float(self.density.eigenvalues()[0]) >= -tol
        )

    def negativity(self) -> EntanglementResult:
        """Negativity across Alice | detectors."""
        return negativity(self.density, subsystem=0)
