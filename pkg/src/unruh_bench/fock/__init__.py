"""Truncated multimode Fock-space kernel."""

from unruh_bench.fock.density import DensityOperator, cross_trace, partial_trace, partial_transpose
from unruh_bench.fock.ket import SparseKet
from unruh_bench.fock.modes import Helicity, ModeLabel, ModeRole, ModeSet, Region, UnknownModeError
from unruh_bench.fock.operators import (
    NonUnitaryError,
    apply_annihilation,
    apply_creation,
    apply_ladder_sum,
    check_unitary,
    fock_lift_rotation,
    tensor,
)

__all__ = [
    "DensityOperator",
    "Helicity",
    "ModeLabel",
    "ModeRole",
    "ModeSet",
    "NonUnitaryError",
    "Region",
    "SparseKet",
    "UnknownModeError",
    "apply_annihilation",
    "apply_creation",
    "apply_ladder_sum",
    "check_unitary",
    "cross_trace",
    "fock_lift_rotation",
    "partial_trace",
    "partial_transpose",
    "tensor",
]
