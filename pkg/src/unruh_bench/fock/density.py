"""Density operators over composite truncated spaces."""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from math import prod

import numpy as np
from scipy import sparse

from unruh_bench.fock.ket import Occupation, SparseKet
from unruh_bench.fock.modes import ModeLabel


@dataclass(frozen=True, eq=False)
class DensityOperator:
    """Matrix over a tensor-product basis with recorded subsystem dimensions."""

    matrix: np.ndarray
    dims: tuple[int, ...]
    """Subsystem dimensions, first factor most significant"""

    loss: float = 0.0
    """Probability mass dropped by truncation before or during construction"""

    def __post_init__(self) -> None:
        matrix = np.asarray(self.matrix, dtype=complex)
        size = prod(self.dims)
        if matrix.shape != (size, size):
            raise ValueError(f"matrix shape {matrix.shape} does not match dims {self.dims}")
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))

    @classmethod
    def pure(cls, vector: np.ndarray, dims: Sequence[int]) -> DensityOperator:
        vector = np.asarray(vector, dtype=complex).ravel()
        return cls(np.outer(vector, vector.conj()), tuple(dims))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def trace(self) -> float:
        return float(np.real(np.trace(self.matrix)))

    def hermiticity_defect(self) -> float:
        return float(np.max(np.abs(self.matrix - self.matrix.conj().T), initial=0.0))

    def is_hermitian(self, atol: float = 1.0e-12) -> bool:
        return self.hermiticity_defect() <= atol

    def eigenvalues(self) -> np.ndarray:
        hermitian = 0.5 * (self.matrix + self.matrix.conj().T)
        return np.linalg.eigvalsh(hermitian)

    def renormalized(self) -> DensityOperator:
        """Divide by the trace once; the missing mass is added to loss."""
        trace = self.trace
        if not trace > 0:
            raise ValueError(f"cannot renormalize an operator with trace {trace}")
        return DensityOperator(self.matrix / trace, self.dims, loss=self.loss + max(0.0, 1.0 - trace))

    def kron(self, other: DensityOperator) -> DensityOperator:
        return DensityOperator(np.kron(self.matrix, other.matrix), self.dims + other.dims)


@dataclass
class _Weights:
    """Amplitudes of a ket arranged as (kept configuration, traced configuration) entries."""

    rows: list[int]
    cols: list[int]
    vals: list[complex]
    dropped: float


def _kept_layout(
    ket: SparseKet,
    keep: Sequence[ModeLabel],
    cutoffs: Mapping[ModeLabel, int] | None,
) -> tuple[list[int], list[int], list[int], tuple[int, ...]]:
    modes = ket.modes
    keep_positions = [modes.index(label) for label in keep]
    if len(set(keep_positions)) != len(keep_positions):
        raise ValueError("kept modes must be distinct")
    keep_set = set(keep_positions)
    env_positions = [p for p in range(len(modes)) if p not in keep_set]
    kept_cutoffs = [
        (cutoffs or {}).get(label, modes.cutoffs[p]) for label, p in zip(keep, keep_positions, strict=True)
    ]
    return keep_positions, env_positions, kept_cutoffs, tuple(c + 1 for c in kept_cutoffs)


def _collect(
    ket: SparseKet,
    keep_positions: list[int],
    env_positions: list[int],
    kept_cutoffs: list[int],
    kept_dims: tuple[int, ...],
    env_index: dict[Occupation, int],
) -> _Weights:
    weights = _Weights(rows=[], cols=[], vals=[], dropped=0.0)
    for occupation, amplitude in ket:
        kept = [occupation[p] for p in keep_positions]
        if any(n > c for n, c in zip(kept, kept_cutoffs, strict=True)):
            weights.dropped += abs(amplitude) ** 2
            continue
        row = 0
        for n, d in zip(kept, kept_dims, strict=True):
            row = row * d + n
        weights.rows.append(row)
        weights.cols.append(env_index.setdefault(tuple(occupation[p] for p in env_positions), len(env_index)))
        weights.vals.append(amplitude)
    return weights


def _matrix(weights: _Weights, size: int, n_env: int) -> sparse.csr_matrix:
    return sparse.csr_matrix((weights.vals, (weights.rows, weights.cols)), shape=(size, max(1, n_env)))


def _trace_ket(
    ket: SparseKet,
    keep: Sequence[ModeLabel],
    cutoffs: Mapping[ModeLabel, int] | None,
) -> DensityOperator:
    keep_positions, env_positions, kept_cutoffs, kept_dims = _kept_layout(ket, keep, cutoffs)
    env_index: dict[Occupation, int] = {}
    weights = _collect(ket, keep_positions, env_positions, kept_cutoffs, kept_dims, env_index)
    w = _matrix(weights, prod(kept_dims), len(env_index))
    reduced = (w @ w.conj().T).toarray()
    return DensityOperator(reduced, kept_dims, loss=ket.loss + weights.dropped)


def cross_trace(
    left: SparseKet,
    right: SparseKet,
    keep: Sequence[ModeLabel],
    cutoffs: Mapping[ModeLabel, int] | None = None,
) -> np.ndarray:
    """Tr_rest |left><right| on the kept modes, as a dense matrix.

    Both kets must live on the same modes. With left == right this is the matrix of
    partial_trace(left, keep, cutoffs).

    Raises:
        ValueError: If the kets use different mode sets or keep is empty
    """
    if left.modes.labels != right.modes.labels or left.modes.cutoffs != right.modes.cutoffs:
        raise ValueError("cross trace needs both kets on the same modes")
    if len(keep) == 0:
        raise ValueError("partial trace needs at least one kept mode")
    keep_positions, env_positions, kept_cutoffs, kept_dims = _kept_layout(left, keep, cutoffs)
    env_index: dict[Occupation, int] = {}
    w_left = _collect(left, keep_positions, env_positions, kept_cutoffs, kept_dims, env_index)
    w_right = _collect(right, keep_positions, env_positions, kept_cutoffs, kept_dims, env_index)
    size = prod(kept_dims)
    return (_matrix(w_left, size, len(env_index)) @ _matrix(w_right, size, len(env_index)).conj().T).toarray()


def _trace_dense(rho: DensityOperator, keep: Sequence[int]) -> DensityOperator:
    n = len(rho.dims)
    if any(not 0 <= k < n for k in keep) or len(set(keep)) != len(keep):
        raise ValueError(f"keep {list(keep)} is not a subset of subsystems 0..{n - 1}")
    traced = [i for i in range(n) if i not in keep]
    order = list(keep) + traced
    kept_dim = prod(rho.dims[i] for i in keep)
    traced_dim = prod(rho.dims[i] for i in traced)
    tensor = rho.matrix.reshape(rho.dims + rho.dims).transpose(order + [n + i for i in order])
    blocks = tensor.reshape(kept_dim, traced_dim, kept_dim, traced_dim)
    reduced = np.einsum("ajbj->ab", blocks)
    return DensityOperator(reduced, tuple(rho.dims[i] for i in keep), loss=rho.loss)


def partial_trace(
    state: SparseKet | DensityOperator,
    keep: Sequence[ModeLabel] | Sequence[int],
    cutoffs: Mapping[ModeLabel, int] | None = None,
) -> DensityOperator:
    """Reduced operator on the kept modes (kets) or kept subsystem indices (density operators).

    For kets, cutoffs may lower the occupation limit of kept modes; amplitudes above it are
    dropped and counted in the result's loss.

    Raises:
        ValueError: If keep is empty or not a subset
        UnknownModeError: If a kept label is not one of the ket's modes
    """
    if len(keep) == 0:
        raise ValueError("partial trace needs at least one kept mode")
    if isinstance(state, SparseKet):
        return _trace_ket(state, keep, cutoffs)  # type: ignore[arg-type]
    return _trace_dense(state, keep)  # type: ignore[arg-type]


def partial_transpose(rho: DensityOperator, subsystem: int) -> np.ndarray:
    """Transpose the block indices of one tensor factor.

    Raises:
        ValueError: If subsystem is not a valid factor index
    """
    n = len(rho.dims)
    if not 0 <= subsystem < n:
        raise ValueError(f"subsystem {subsystem} out of range for {n} factors")
    axes = list(range(2 * n))
    axes[subsystem], axes[n + subsystem] = axes[n + subsystem], axes[subsystem]
    tensor = rho.matrix.reshape(rho.dims + rho.dims).transpose(axes)
    return tensor.reshape(rho.dim, rho.dim)
