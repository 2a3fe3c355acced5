"""Entanglement quantification of reduced states."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from unruh_bench.config import EIGENVALUE_TOL_SCALE
from unruh_bench.fock.density import DensityOperator, partial_transpose

HERMITIAN_TOL = 1.0e-10
TRACE_TOL = 1.0e-6


class InvalidStateError(ValueError):
    """Input is not a unit-trace Hermitian operator."""


@dataclass(frozen=True)
class EntanglementResult:
    """Negativity across one bipartition, with the numerical context it was computed in."""

    negativity: float
    log_negativity: float
    """log2(2 N + 1)"""

    min_eigenvalue: float
    """Smallest eigenvalue of the partial transpose"""

    rank: int
    """Eigenvalues of the partial transpose above tolerance in magnitude"""

    tolerance: float

    def to_dict(self) -> dict[str, float | int]:
        return {
            "negativity": self.negativity,
            "log_negativity": self.log_negativity,
            "min_eigenvalue": self.min_eigenvalue,
            "rank": self.rank,
            "tolerance": self.tolerance,
        }


def negativity(rho: DensityOperator, subsystem: int = 0) -> EntanglementResult:
    """Negativity of rho across (subsystem | rest), by full eigendecomposition of the partial transpose.

    Eigenvalues with magnitude below 1e-12 * dim * ||rho^T_A||_1 count as zero.

    Raises:
        InvalidStateError: If rho is not Hermitian or its trace differs from 1 by more than 1e-6
    """
    defect = rho.hermiticity_defect()
    if defect > HERMITIAN_TOL:
        raise InvalidStateError(f"density operator is not Hermitian (defect {defect:.2e})")
    if abs(rho.trace - 1.0) > TRACE_TOL:
        raise InvalidStateError(f"density operator trace {rho.trace:.9f} is not 1")

    pt = partial_transpose(rho, subsystem)
    eigenvalues = np.linalg.eigvalsh(0.5 * (pt + pt.conj().T))
    trace_norm = float(np.sum(np.abs(eigenvalues)))
    tolerance = EIGENVALUE_TOL_SCALE * rho.dim * trace_norm

    negative = eigenvalues[eigenvalues < -tolerance]
    value = float(-np.sum(negative)) if negative.size else 0.0
    return EntanglementResult(
        negativity=value,
        log_negativity=math.log2(2.0 * value + 1.0),
        min_eigenvalue=float(eigenvalues[0]),
        rank=int(np.count_nonzero(np.abs(eigenvalues) > tolerance)),
        tolerance=tolerance,
    )


def trace_distance(rho: DensityOperator | np.ndarray, sigma: DensityOperator | np.ndarray) -> float:
    """Half the trace norm of rho - sigma."""
    a = rho.matrix if isinstance(rho, DensityOperator) else np.asarray(rho)
    b = sigma.matrix if isinstance(sigma, DensityOperator) else np.asarray(sigma)
    if a.shape != b.shape:
        raise ValueError(f"cannot compare operators of shapes {a.shape} and {b.shape}")
    diff = a - b
    return 0.5 * float(np.sum(np.abs(np.linalg.eigvalsh(0.5 * (diff + diff.conj().T)))))
