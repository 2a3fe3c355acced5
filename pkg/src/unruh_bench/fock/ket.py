"""Sparse state vectors over a truncated multimode Fock space."""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from types import MappingProxyType

import numpy as np

from unruh_bench.config import PRUNE_THRESHOLD
from unruh_bench.fock.modes import ModeSet

Occupation = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class SparseKet:
    """Map from occupation vectors to complex amplitudes.

    Construct through from_terms, which prunes amplitudes below 1e-16. loss is the squared
    norm dropped by truncating operations along the way.
    """

    modes: ModeSet
    amplitudes: Mapping[Occupation, complex]
    loss: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "amplitudes", MappingProxyType(dict(self.amplitudes)))

    @classmethod
    def from_terms(
        cls,
        modes: ModeSet,
        terms: Mapping[Occupation, complex],
        loss: float = 0.0,
    ) -> SparseKet:
        kept: dict[Occupation, complex] = {}
        for occupation, amplitude in terms.items():
            if abs(amplitude) < PRUNE_THRESHOLD:
                continue
            if len(occupation) != len(modes):
                raise ValueError(f"occupation {occupation} does not match {len(modes)} modes")
            if not modes.allows(occupation):
                raise ValueError(f"occupation {occupation} violates the mode cutoffs")
            kept[occupation] = complex(amplitude)
        return cls(modes=modes, amplitudes=kept, loss=loss)

    @classmethod
    def vacuum(cls, modes: ModeSet) -> SparseKet:
        return cls.from_terms(modes, {(0,) * len(modes): 1.0})

    @classmethod
    def basis(cls, modes: ModeSet, occupation: Occupation) -> SparseKet:
        return cls.from_terms(modes, {tuple(occupation): 1.0})

    @classmethod
    def from_dense(cls, modes: ModeSet, vector: np.ndarray) -> SparseKet:
        """Inverse of to_dense on the full mixed-radix basis."""
        vector = np.asarray(vector).ravel()
        if vector.size != modes.dimension:
            raise ValueError(f"dense vector has {vector.size} entries, mode set has {modes.dimension}")
        terms = {modes.unpack(int(i)): vector[i] for i in np.flatnonzero(vector)}
        return cls.from_terms(modes, terms)

    def __len__(self) -> int:
        return len(self.amplitudes)

    def __iter__(self) -> Iterator[tuple[Occupation, complex]]:
        return iter(self.amplitudes.items())

    def norm_squared(self) -> float:
        return float(sum(abs(a) ** 2 for a in self.amplitudes.values()))

    def inner(self, other: SparseKet) -> complex:
        """<self|other>."""
        if len(self) > len(other):
            return other.inner(self).conjugate()
        return complex(
            sum(a.conjugate() * other.amplitudes.get(occ, 0.0) for occ, a in self.amplitudes.items())
        )

    def scaled(self, factor: complex) -> SparseKet:
        return SparseKet.from_terms(
            self.modes,
            {occ: factor * a for occ, a in self.amplitudes.items()},
            loss=abs(factor) ** 2 * self.loss,
        )

    def __add__(self, other: SparseKet) -> SparseKet:
        if other.modes.labels != self.modes.labels:
            raise ValueError("cannot add kets over different mode sets")
        terms = dict(self.amplitudes)
        for occ, a in other.amplitudes.items():
            terms[occ] = terms.get(occ, 0.0) + a
        return SparseKet.from_terms(self.modes, terms, loss=self.loss + other.loss)

    def to_dense(self) -> np.ndarray:
        vector = np.zeros(self.modes.dimension, dtype=complex)
        for occ, a in self.amplitudes.items():
            vector[self.modes.pack(occ)] = a
        return vector

    def with_modes(self, modes: ModeSet) -> SparseKet:
        """Same amplitudes under a relabelled mode set of equal length."""
        if len(modes) != len(self.modes):
            raise ValueError("replacement mode set must have the same number of modes")
        return SparseKet.from_terms(modes, self.amplitudes, loss=self.loss)
