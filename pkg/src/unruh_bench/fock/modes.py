"""Mode labels and truncated multimode occupation indexing."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import product


class UnknownModeError(KeyError):
    """A mode label is not part of the mode set."""


class Region(Enum):
    """Where a mode lives."""

    I = "I"  # noqa: E741
    """Right Rindler wedge, the accelerated detector's region"""

    II = "II"
    """Left Rindler wedge, always traced out"""

    ALICE = "A"
    """Inertial partner qubit"""

    ENV = "E"
    """Aggregate of the photon's out-of-band weight"""


class Helicity(Enum):
    UP = "up"
    DOWN = "down"

    @property
    def flipped(self) -> Helicity:
        return Helicity.DOWN if self is Helicity.UP else Helicity.UP

    @property
    def arrow(self) -> str:
        return "↑" if self is Helicity.UP else "↓"


class ModeRole(Enum):
    BIN = "bin"
    """Discretized frequency bin"""

    DETECTOR = "detector"
    """Band-limited mode seen by the detector"""

    COMPLEMENT = "complement"
    """Orthogonal completion of the detector mode within the band"""

    QUBIT = "qubit"
    """Alice's two-level system"""

    OUT_OF_BAND = "out_of_band"


@dataclass(frozen=True)
class ModeLabel:
    """One bosonic mode: region, helicity, role and bin index."""

    region: Region
    helicity: Helicity | None = None
    role: ModeRole = ModeRole.BIN
    index: int = 0

    def __str__(self) -> str:
        arrow = self.helicity.arrow if self.helicity else ""
        return f"{self.region.value}{arrow}:{self.role.value}[{self.index}]"


@dataclass(frozen=True, eq=False)
class ModeSet:
    """Ordered modes with per-mode occupation cutoffs and an optional global photon cutoff.

    Occupation vectors are packed into integers in mixed radix, first mode most significant.
    """

    labels: tuple[ModeLabel, ...]
    cutoffs: tuple[int, ...]
    """Maximum occupation of each mode"""

    partners: tuple[tuple[ModeLabel, ModeLabel], ...] = ()
    """Declared (region I, region II) squeezed pairs"""

    n_tot: int | None = None
    """Maximum total photon number, if any"""

    def __post_init__(self) -> None:
        if len(self.labels) != len(self.cutoffs):
            raise ValueError("every mode needs exactly one cutoff")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("mode labels must be unique")
        if any(c < 0 for c in self.cutoffs):
            raise ValueError("cutoffs must be non-negative")

        known = set(self.labels)
        seen_first: set[ModeLabel] = set()
        for first, second in self.partners:
            if first not in known or second not in known:
                raise UnknownModeError(f"partner pair ({first}, {second}) uses an unknown mode")
            if first.region is not Region.I or second.region is not Region.II:
                raise ValueError(f"partner pair ({first}, {second}) must be (region I, region II)")
            if first.helicity is None or second.helicity is not first.helicity.flipped:
                raise ValueError(f"partner of {first} must carry the opposite helicity, got {second}")
            if first in seen_first:
                raise ValueError(f"{first} has more than one region-II partner")
            seen_first.add(first)

    @classmethod
    def uniform(
        cls,
        labels: Iterable[ModeLabel],
        cutoff: int,
        partners: Sequence[tuple[ModeLabel, ModeLabel]] = (),
        n_tot: int | None = None,
    ) -> ModeSet:
        labels = tuple(labels)
        return cls(labels=labels, cutoffs=(cutoff,) * len(labels), partners=tuple(partners), n_tot=n_tot)

    @cached_property
    def _positions(self) -> dict[ModeLabel, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def __len__(self) -> int:
        return len(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self._positions

    def __iter__(self) -> Iterator[ModeLabel]:
        return iter(self.labels)

    def index(self, label: ModeLabel) -> int:
        try:
            return self._positions[label]
        except KeyError:
            raise UnknownModeError(f"unknown mode {label}") from None

    def cutoff(self, label: ModeLabel) -> int:
        return self.cutoffs[self.index(label)]

    def partner(self, label: ModeLabel) -> ModeLabel | None:
        """Region-II partner of a region-I mode (or the reverse)."""
        self.index(label)
        for first, second in self.partners:
            if first == label:
                return second
            if second == label:
                return first
        return None

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(c + 1 for c in self.cutoffs)

    @cached_property
    def dimension(self) -> int:
        total = 1
        for d in self.dims:
            total *= d
        return total

    def allows(self, occupation: Sequence[int]) -> bool:
        """Whether an occupation vector respects every cutoff."""
        if any(n < 0 or n > c for n, c in zip(occupation, self.cutoffs, strict=True)):
            return False
        return self.n_tot is None or sum(occupation) <= self.n_tot

    def pack(self, occupation: Sequence[int]) -> int:
        code = 0
        for n, d in zip(occupation, self.dims, strict=True):
            code = code * d + n
        return code

    def unpack(self, code: int) -> tuple[int, ...]:
        digits = []
        for d in reversed(self.dims):
            code, n = divmod(code, d)
            digits.append(n)
        return tuple(reversed(digits))

    def configurations(self) -> Iterator[tuple[int, ...]]:
        """All allowed occupation vectors in packed order."""
        for occupation in product(*(range(d) for d in self.dims)):
            if self.n_tot is None or sum(occupation) <= self.n_tot:
                yield occupation

    def subset(self, labels: Sequence[ModeLabel]) -> ModeSet:
        """Mode set restricted to labels (in the given order), keeping their cutoffs."""
        cutoffs = tuple(self.cutoff(label) for label in labels)
        wanted = set(labels)
        partners = tuple(p for p in self.partners if p[0] in wanted and p[1] in wanted)
        return ModeSet(labels=tuple(labels), cutoffs=cutoffs, partners=partners)

    def with_cutoffs(self, updates: dict[ModeLabel, int]) -> ModeSet:
        cutoffs = list(self.cutoffs)
        for label, cutoff in updates.items():
            cutoffs[self.index(label)] = cutoff
        return ModeSet(labels=self.labels, cutoffs=tuple(cutoffs), partners=self.partners, n_tot=self.n_tot)

    def relabel(self, mapping: dict[ModeLabel, ModeLabel]) -> ModeSet:
        """Rename modes; partner pairs involving a renamed mode are dropped."""
        labels = tuple(mapping.get(label, label) for label in self.labels)
        partners = tuple(p for p in self.partners if p[0] not in mapping and p[1] not in mapping)
        return ModeSet(labels=labels, cutoffs=self.cutoffs, partners=partners, n_tot=self.n_tot)
