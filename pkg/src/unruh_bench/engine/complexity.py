"""Cost model of the brute-force engine."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

MIN_GROWTH_BASE = 5.0
"""Floor of the per-bin growth a(n)"""


class BudgetExceededError(RuntimeError):
    """The brute-force construction would allocate more terms than the configured budget."""


@dataclass(frozen=True)
class CostEstimate:
    """Predicted size of the brute-force construction for m bins and per-mode cutoff n."""

    bins: int
    n_max: int
    modes: int
    """Alice plus, per helicity, m region-I, m region-II and one out-of-band mode"""

    basis_size: int
    """Dimension of the full truncated Hilbert space before the detector rotation"""

    support: int
    """Upper bound on stored amplitudes across both helicity channels after the rotation"""

    growth: float
    """a(n) = max(5, (n+1)^2), the basis growth per added bin"""

    @property
    def witness(self) -> float:
        """Lower-bound witness a(n)^m."""
        return self.growth**self.bins

    def describe(self) -> str:
        return (
            f"m={self.bins}, n_max={self.n_max}: {self.modes} modes, basis {self.basis_size:.3e}, "
            f"predicted support {self.support:,} terms, a(n)^m = {self.witness:.3e}"
        )


def complexity_estimate(m: int, n: int) -> CostEstimate:
    """Predicted state-space size and support of the brute-force engine.

    Per helicity channel the squeezed vacuum has (n+1)^m terms, adding the photon multiplies
    that by at most 4m+1 ladder terms, and rotating m region-I modes of total occupation N
    spreads each term over at most C(N+m-1, m-1) <= C(mn+m-1, m-1) configurations.

    Every figure is a closed-form bound from these counts, not a fit to measured runs. The
    growth a(n) = max(5, (n+1)^2) is the per-bin basis factor; fit_exponential_base gives the
    measured counterpart from recorded runtimes.

    Raises:
        ValueError: If m or n is below 1
    """
    if m < 1 or n < 1:
        raise ValueError(f"bins and cutoff must be at least 1, got m={m}, n={n}")
    per_pair = (n + 1) ** 2
    basis_size = 2 * per_pair ** (2 * m) * 2**2
    spread = math.comb(m * n + m - 1, m - 1)
    per_channel = (n + 1) ** m * (1 + 4 * m + 1) * spread
    return CostEstimate(
        bins=m,
        n_max=n,
        modes=1 + 2 * (2 * m + 1),
        basis_size=basis_size,
        support=2 * per_channel,
        growth=max(MIN_GROWTH_BASE, float(per_pair)),
    )


def check_budget(estimate: CostEstimate, budget_terms: int) -> CostEstimate:
    """Return estimate, raising BudgetExceededError if its support exceeds the budget."""
    if estimate.support > budget_terms:
        raise BudgetExceededError(
            f"brute-force run refused: {estimate.describe()} exceeds the budget of {budget_terms:,} terms"
        )
    return estimate


def fit_exponential_base(ms: Sequence[int], runtimes: Sequence[float]) -> float:
    """exp of the least-squares slope of ln(runtime) against m.

    Raises:
        ValueError: With fewer than two points or a non-positive runtime
    """
    if len(ms) != len(runtimes) or len(ms) < 2:
        raise ValueError("need at least two (m, runtime) pairs")
    if any(t <= 0 for t in runtimes):
        raise ValueError("runtimes must be positive")
    slope, _ = np.polyfit(np.asarray(ms, dtype=float), np.log(np.asarray(runtimes, dtype=float)), 1)
    return float(math.exp(slope))
