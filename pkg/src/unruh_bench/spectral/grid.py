"""Quadrature grids for frequency integrals."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cache

import numpy as np
from numpy.polynomial.legendre import leggauss

from unruh_bench.config import OMEGA_PANEL_NODES


@cache
def _reference_rule(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights on [-1, 1] (cached, read-only)."""
    nodes, weights = leggauss(n)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


@dataclass(frozen=True, eq=False)
class FrequencyGrid:
    """Quadrature nodes and weights over an interval of (angular or dimensionless) frequency."""

    nodes: np.ndarray
    """Strictly increasing, positive abscissae"""

    weights: np.ndarray
    """Positive quadrature weights"""

    lo: float
    """Lower end of the integration interval"""

    hi: float
    """Upper end of the integration interval"""

    def __post_init__(self) -> None:
        if self.nodes.shape != self.weights.shape or self.nodes.ndim != 1 or self.nodes.size == 0:
            raise ValueError("grid nodes and weights must be non-empty 1-d arrays of equal length")
        if not np.all(np.diff(self.nodes) > 0):
            raise ValueError("grid nodes must be strictly increasing")
        if self.nodes[0] <= 0:
            raise ValueError(f"grid nodes must be positive, got {self.nodes[0]}")
        if not np.all(self.weights > 0):
            raise ValueError("grid weights must be positive")
        if not (self.lo <= self.nodes[0] and self.nodes[-1] <= self.hi):
            raise ValueError("grid nodes must lie inside [lo, hi]")

    def __len__(self) -> int:
        return self.nodes.size

    @property
    def length(self) -> float:
        return self.hi - self.lo

    def integrate(self, values: np.ndarray) -> complex | float:
        """Quadrature of sampled values (fixed summation order)."""
        return np.dot(self.weights, values)

    def contains(self, lo: float, hi: float) -> bool:
        """Whether [lo, hi] lies inside the grid interval."""
        return self.lo <= lo and hi <= self.hi


def gauss_legendre(lo: float, hi: float, n: int) -> FrequencyGrid:
    """Single-panel Gauss-Legendre rule with n nodes on [lo, hi]."""
    if not hi > lo:
        raise ValueError(f"empty interval [{lo}, {hi}]")
    if n < 1:
        raise ValueError(f"node count must be positive, got {n}")
    ref_nodes, ref_weights = _reference_rule(n)
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    return FrequencyGrid(nodes=mid + half * ref_nodes, weights=half * ref_weights, lo=lo, hi=hi)


def gauss_legendre_panels(
    lo: float, hi: float, panels: int, nodes_per_panel: int = OMEGA_PANEL_NODES
) -> FrequencyGrid:
    """Composite Gauss-Legendre rule: equal-width panels, nodes_per_panel nodes each."""
    if panels < 1:
        raise ValueError(f"panel count must be positive, got {panels}")
    edges = np.linspace(lo, hi, panels + 1)
    ref_nodes, ref_weights = _reference_rule(nodes_per_panel)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[1:] + edges[:-1])
    nodes = (mid[:, None] + half[:, None] * ref_nodes[None, :]).ravel()
    weights = (half[:, None] * ref_weights[None, :]).ravel()
    return FrequencyGrid(nodes=nodes, weights=weights, lo=lo, hi=hi)


def panels_for(n_nodes: int, nodes_per_panel: int = OMEGA_PANEL_NODES) -> int:
    """Smallest panel count giving at least n_nodes nodes."""
    return max(1, math.ceil(n_nodes / nodes_per_panel))


def log_uniform_grid(lo: float, hi: float, n: int) -> FrequencyGrid:
    """Midpoint rule that is uniform in ln(omega) on [lo, hi].

    Node k sits at exp(u_k) with u_k the k-th midpoint in ln-space; its weight is omega_k * h,
    so integrals in d(omega) become sums in du.
    """
    if not (0 < lo < hi):
        raise ValueError(f"log-uniform grid needs 0 < lo < hi, got [{lo}, {hi}]")
    u_lo, u_hi = math.log(lo), math.log(hi)
    h = (u_hi - u_lo) / n
    u = u_lo + h * (np.arange(n) + 0.5)
    nodes = np.exp(u)
    return FrequencyGrid(nodes=nodes, weights=nodes * h, lo=lo, hi=hi)
