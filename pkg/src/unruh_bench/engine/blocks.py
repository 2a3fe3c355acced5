"""Region-II partial traces of single squeezed-pair states."""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache

import numpy as np

from unruh_bench.squeezing import (
    PairKind,
    SqueezeParam,
    TruncationConfig,
    tmsv_excitation_coeffs,
    tmsv_vacuum_coeffs,
)


def pair_terms(kind: PairKind, sq: SqueezeParam, t: TruncationConfig) -> dict[tuple[int, int], float]:
    """Truncated (n_I, n_II) -> amplitude expansion of one pair state."""
    if kind is PairKind.VAC:
        return {(n, n): float(v) for n, v in enumerate(tmsv_vacuum_coeffs(sq, t))}
    coeffs = tmsv_excitation_coeffs(kind, sq, t)
    return {occ: float(c) for occ, c in zip(coeffs.occupations, coeffs.amplitudes, strict=True)}


@lru_cache(maxsize=256)
def _block(left: PairKind, right: PairKind, sq: SqueezeParam, n_max: int, tail_tol: float) -> np.ndarray:
    t = TruncationConfig(n_max=n_max, tail_tol=tail_tol)
    by_partner: dict[int, list[tuple[int, float]]] = defaultdict(list)
    for (n_i, n_ii), amp in pair_terms(right, sq, t).items():
        by_partner[n_ii].append((n_i, amp))

    block = np.zeros((n_max + 1, n_max + 1))
    for (n_i, n_ii), amp in pair_terms(left, sq, t).items():
        for m_i, other in by_partner.get(n_ii, ()):
            block[n_i, m_i] += amp * other
    block.setflags(write=False)
    return block


def pair_block(left: PairKind, right: PairKind, sq: SqueezeParam, t: TruncationConfig) -> np.ndarray:
    """Tr_II |left><right| over one (I, II) pair, as an (n_max+1) x (n_max+1) operator on mode I.

    The region-II occupations of the two expansions are matched term by term, so
    (VAC, VAC) is the truncated thermal state, (R1, VAC) an upper shift, (L1, VAC) a lower
    shift, and swapping the arguments gives the adjoint (all coefficients are real).
    """
    return _block(left, right, sq, t.n_max, t.tail_tol)


def thermal_block(sq: SqueezeParam, t: TruncationConfig) -> np.ndarray:
    """Reduced state tau(r) of one arm of the squeezed vacuum."""
    return pair_block(PairKind.VAC, PairKind.VAC, sq, t)
