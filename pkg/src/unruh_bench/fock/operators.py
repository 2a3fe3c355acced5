"""Ladder operators and passive mode rotations on sparse kets."""

from __future__ import annotations

import math
from collections.abc import Sequence
from functools import lru_cache
from itertools import product

import numpy as np
from scipy import sparse

from unruh_bench.fock.ket import Occupation, SparseKet
from unruh_bench.fock.modes import ModeLabel, ModeSet
from unruh_bench.logging import get_logger

logger = get_logger(__name__)

UNITARITY_TOL = 1.0e-12

LadderTerm = tuple[complex, ModeLabel, bool]
"""(coefficient, mode, True for creation / False for annihilation)"""


class NonUnitaryError(ValueError):
    """A single-particle mode transformation is not unitary."""


def apply_ladder_sum(ket: SparseKet, terms: Sequence[LadderTerm]) -> SparseKet:
    """Apply sum_k c_k op_k to ket, each op_k a creation or annihilation on one mode.

    Amplitudes pushed above a cutoff are dropped; their squared norm (after the terms are
    summed) is added to the ket's loss.
    """
    modes = ket.modes
    resolved = [(coeff, modes.index(label), modes.cutoffs[modes.index(label)], create) for coeff, label, create in terms]
    kept: dict[Occupation, complex] = {}
    dropped: dict[Occupation, complex] = {}

    for occupation, amplitude in ket:
        total = sum(occupation)
        for coeff, pos, cutoff, create in resolved:
            n = occupation[pos]
            if create:
                value = coeff * amplitude * math.sqrt(n + 1)
                target = occupation[:pos] + (n + 1,) + occupation[pos + 1 :]
                over = n + 1 > cutoff or (modes.n_tot is not None and total + 1 > modes.n_tot)
            else:
                if n == 0:
                    continue
                value = coeff * amplitude * math.sqrt(n)
                target = occupation[:pos] + (n - 1,) + occupation[pos + 1 :]
                over = False
            bucket = dropped if over else kept
            bucket[target] = bucket.get(target, 0.0) + value

    lost = sum(abs(v) ** 2 for v in dropped.values())
    return SparseKet.from_terms(modes, kept, loss=ket.loss + lost)


def apply_creation(ket: SparseKet, mode: ModeLabel) -> SparseKet:
    """a^dagger on one mode, with sqrt(n+1) weights."""
    return apply_ladder_sum(ket, [(1.0, mode, True)])


def apply_annihilation(ket: SparseKet, mode: ModeLabel) -> SparseKet:
    """a on one mode, with sqrt(n) weights."""
    return apply_ladder_sum(ket, [(1.0, mode, False)])


def tensor(first: SparseKet, second: SparseKet) -> SparseKet:
    """Product state over the concatenation of two disjoint mode sets."""
    modes = ModeSet(
        labels=first.modes.labels + second.modes.labels,
        cutoffs=first.modes.cutoffs + second.modes.cutoffs,
        partners=first.modes.partners + second.modes.partners,
    )
    terms = {
        occ_a + occ_b: a * b
        for occ_a, a in first
        for occ_b, b in second
    }
    return SparseKet.from_terms(modes, terms, loss=first.loss + second.loss)


def check_unitary(unitary: np.ndarray, tol: float = UNITARITY_TOL) -> np.ndarray:
    """Return unitary as a complex square array, raising NonUnitaryError if U^H U != 1."""
    u = np.asarray(unitary, dtype=complex)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise NonUnitaryError(f"mode transformation must be square, got shape {u.shape}")
    deviation = float(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))))
    if deviation > tol:
        raise NonUnitaryError(f"mode transformation deviates from unitarity by {deviation:.2e}")
    return u


@lru_cache(maxsize=64)
def _lift_matrix(
    key: bytes,
    size: int,
    in_cutoffs: tuple[int, ...],
    out_cutoff: int,
) -> tuple[sparse.csr_matrix, dict[Occupation, int], list[Occupation]]:
    """Fock-space matrix of the rotation a_j^dagger -> sum_k U_kj b_k^dagger.

    Columns are input occupations of the selected modes, rows the output occupations
    reached (each output mode capped at out_cutoff).
    """
    u = np.frombuffer(key, dtype=complex).reshape(size, size)
    in_configs = list(product(*(range(c + 1) for c in in_cutoffs)))
    in_index = {cfg: i for i, cfg in enumerate(in_configs)}
    out_index: dict[Occupation, int] = {}
    rows: list[int] = []
    cols: list[int] = []
    vals: list[complex] = []

    for col, cfg in enumerate(in_configs):
        poly: dict[Occupation, complex] = {(0,) * size: 1.0 + 0.0j}
        for j, n_j in enumerate(cfg):
            for _ in range(n_j):
                grown: dict[Occupation, complex] = {}
                for occ, amp in poly.items():
                    for k in range(size):
                        if u[k, j] == 0 or occ[k] + 1 > out_cutoff:
                            continue
                        target = occ[:k] + (occ[k] + 1,) + occ[k + 1 :]
                        grown[target] = grown.get(target, 0.0) + amp * u[k, j] * math.sqrt(occ[k] + 1)
                poly = grown
            if n_j > 1:
                scale = 1.0 / math.sqrt(math.factorial(n_j))
                poly = {occ: amp * scale for occ, amp in poly.items()}
        for occ, amp in poly.items():
            rows.append(out_index.setdefault(occ, len(out_index)))
            cols.append(col)
            vals.append(amp)

    out_configs = list(out_index)
    lift = sparse.csr_matrix((vals, (rows, cols)), shape=(len(out_configs), len(in_configs)))
    logger.debug(f"Built rotation lift {lift.shape} with {lift.nnz} entries")
    return lift, in_index, out_configs


def fock_lift_rotation(
    ket: SparseKet,
    modes: Sequence[ModeLabel],
    unitary: np.ndarray,
    new_labels: Sequence[ModeLabel] | None = None,
    out_cutoff: int | None = None,
) -> SparseKet:
    """Re-express ket after the passive rotation a_j^dagger -> sum_k U_kj b_k^dagger on modes.

    Rotated mode k is labelled new_labels[k] (defaults to modes[k]). Output modes may hold up
    to out_cutoff photons, by default the sum of the input cutoffs, which makes the lift exact;
    a smaller out_cutoff drops the excess and records it as loss.

    Raises:
        NonUnitaryError: If unitary is not unitary within 1e-12
    """
    u = check_unitary(unitary)
    if u.shape[0] != len(modes):
        raise NonUnitaryError(f"{u.shape[0]}x{u.shape[0]} transformation for {len(modes)} modes")

    positions = [ket.modes.index(label) for label in modes]
    in_cutoffs = tuple(ket.modes.cutoffs[p] for p in positions)
    if out_cutoff is None:
        out_cutoff = sum(in_cutoffs)
    lift, in_index, out_configs = _lift_matrix(np.ascontiguousarray(u).tobytes(), len(modes), in_cutoffs, out_cutoff)

    position_set = set(positions)
    rest_positions = [p for p in range(len(ket.modes)) if p not in position_set]
    rest_index: dict[Occupation, int] = {}
    rows: list[int] = []
    cols: list[int] = []
    vals: list[complex] = []
    for occupation, amplitude in ket:
        selected = tuple(occupation[p] for p in positions)
        rest = tuple(occupation[p] for p in rest_positions)
        rows.append(in_index[selected])
        cols.append(rest_index.setdefault(rest, len(rest_index)))
        vals.append(amplitude)

    coefficients = sparse.csc_matrix((vals, (rows, cols)), shape=(lift.shape[1], max(1, len(rest_index))))
    rotated = (lift @ coefficients).tocoo()
    rest_configs = list(rest_index)

    terms: dict[Occupation, complex] = {}
    for i, j, value in zip(rotated.row, rotated.col, rotated.data, strict=True):
        occupation = [0] * len(ket.modes)
        for p, n in zip(positions, out_configs[i], strict=True):
            occupation[p] = n
        for p, n in zip(rest_positions, rest_configs[j], strict=True):
            occupation[p] = n
        terms[tuple(occupation)] = complex(value)

    out_modes = ket.modes.with_cutoffs(dict.fromkeys(modes, out_cutoff))
    if new_labels is not None:
        out_modes = out_modes.relabel(dict(zip(modes, new_labels, strict=True)))
    result = SparseKet.from_terms(out_modes, terms)
    lost = max(0.0, ket.norm_squared() - result.norm_squared()) if out_cutoff < sum(in_cutoffs) else 0.0
    return SparseKet(modes=result.modes, amplitudes=result.amplitudes, loss=ket.loss + lost)
