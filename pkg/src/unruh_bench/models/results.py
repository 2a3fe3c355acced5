"""Sweep, spread and oracle result models."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

import numpy as np
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from unruh_bench.console import console, styled_status

SWEEP_COLUMNS = (
    "a_proper_m_per_s2",
    "omega_det_dimensionless",
    "r",
    "eps_R_abs",
    "eps_L_abs",
    "w_env",
    "negativity",
    "log_negativity",
    "validity_ratio",
    "trunc_loss",
)
"""Sweep CSV header, in output order"""

SPREAD_COLUMNS = (
    "omega_dimensionless",
    "abs_x_r",
    "abs_x_l",
    "arg_x_r",
    "arg_x_l",
    "log10_abs_x_r",
    "log10_abs_x_l",
)
"""Spread profile CSV header; the sampled table prepends a_proper_m_per_s2"""


class PointStatus(Enum):
    """Outcome of one sweep point."""

    OK = "ok"
    """Validity ratio below the warning band"""

    WARN = "warn"
    """Evaluated, validity ratio in the warning band"""

    INVALID = "invalid"
    """Evaluated despite failing the validity gate (allow_invalid)"""

    FAILED = "failed"
    """Not evaluated; error_message says why"""


@dataclass
class SweepPoint:
    """Diagnostics and entanglement of the reduced state at one acceleration."""

    a_proper_m_per_s2: float
    status: PointStatus
    omega_det: float | None = None
    """Detector centre on the dimensionless axis"""

    r: float | None = None
    eps_r_abs: float | None = None
    eps_l_abs: float | None = None
    w_env: float | None = None
    negativity: float | None = None
    log_negativity: float | None = None
    validity_ratio: float | None = None
    trunc_loss: float | None = None
    """Probability mass dropped by truncation before renormalization"""

    error_message: str | None = None

    @property
    def evaluated(self) -> bool:
        return self.status is not PointStatus.FAILED

    def to_dict(self) -> dict[str, Any]:
        return {
            "a_proper_m_per_s2": self.a_proper_m_per_s2,
            "status": self.status.value,
            "omega_det_dimensionless": self.omega_det,
            "r": self.r,
            "eps_R_abs": self.eps_r_abs,
            "eps_L_abs": self.eps_l_abs,
            "w_env": self.w_env,
            "negativity": self.negativity,
            "log_negativity": self.log_negativity,
            "validity_ratio": self.validity_ratio,
            "trunc_loss": self.trunc_loss,
            "error_message": self.error_message,
        }


@dataclass
class SweepResult:
    """Negativity curve over accelerations, ordered by acceleration."""

    engine: str
    """Engine that produced the points ("peaked" or "brute")"""

    points: list[SweepPoint] = field(default_factory=list)

    parseval_defect_x: float | None = None
    """Parseval defect of the helicity-up spread at the reference acceleration"""

    parseval_defect_y: float | None = None

    def __post_init__(self) -> None:
        self.points.sort(key=lambda p: p.a_proper_m_per_s2)

    def add_point(self, point: SweepPoint) -> None:
        self.points.append(point)
        self.points.sort(key=lambda p: p.a_proper_m_per_s2)

    @property
    def accelerations(self) -> list[float]:
        return [p.a_proper_m_per_s2 for p in self.points]

    def negativities(self) -> np.ndarray:
        """Negativity per point, NaN where the point failed."""
        return np.array(
            [p.negativity if p.negativity is not None else np.nan for p in self.points], dtype=float
        )

    def counts(self) -> dict[str, int]:
        tally = Counter(p.status for p in self.points)
        return {status.value: tally.get(status, 0) for status in PointStatus}

    def peak(self) -> SweepPoint | None:
        """Evaluated point of largest negativity (earliest on ties)."""
        best: SweepPoint | None = None
        for point in self.points:
            if point.negativity is None:
                continue
            if best is None or point.negativity > best.negativity:  # type: ignore[operator]
                best = point
        return best

    def has_interior_maximum(self, tolerance: float = 0.0) -> bool:
        """True if some evaluated point beats both ends of the curve and exceeds tolerance.

        Failed points are skipped; the first and last evaluated points are the ends.
        """
        values = [p.negativity for p in self.points if p.negativity is not None]
        if len(values) < 3:
            return False
        first, last = values[0], values[-1]
        return any(v > first and v > last and v > tolerance for v in values[1:-1])

    def diagnostics(self) -> list[dict[str, Any]]:
        """Per-point manifest diagnostics.

        The Parseval defect is measured once at the reference acceleration; on a fixed Omega
        grid it does not depend on the acceleration.
        """
        return [
            {
                "a_proper_m_per_s2": p.a_proper_m_per_s2,
                "status": p.status.value,
                "validity_ratio": p.validity_ratio,
                "trunc_loss": p.trunc_loss,
                "parseval_defect_x": self.parseval_defect_x,
                "parseval_defect_y": self.parseval_defect_y,
                "error_message": p.error_message,
            }
            for p in self.points
        ]

    def to_dict(self) -> dict[str, Any]:
        peak = self.peak()
        return {
            "engine": self.engine,
            "counts": self.counts(),
            "parseval_defect_x": self.parseval_defect_x,
            "parseval_defect_y": self.parseval_defect_y,
            "peak_a_proper_m_per_s2": peak.a_proper_m_per_s2 if peak else None,
            "peak_negativity": peak.negativity if peak else None,
            "interior_maximum": self.has_interior_maximum(),
            "points": [p.to_dict() for p in self.points],
        }

    def print_summary(self) -> None:
        """Print a formatted summary using Rich panel."""
        counts = self.counts()
        content = Text()

        content.append("Points\n", style="bold")
        content.append(f"  ✓ Evaluated:   {counts['ok'] + counts['warn'] + counts['invalid']}\n", style="green")
        if counts["warn"] > 0:
            content.append(f"  ! Warn band:   {counts['warn']}\n", style="yellow")
        if counts["invalid"] > 0:
            content.append(f"  ! Invalid:     {counts['invalid']}\n", style="yellow")
        if counts["failed"] > 0:
            content.append(f"  ✗ Failed:      {counts['failed']}\n", style="red")

        peak = self.peak()
        if peak is not None:
            content.append("\nPeak\n", style="bold")
            content.append(f"  ã = {peak.a_proper_m_per_s2:.4g} m/s²   Ω_det = {peak.omega_det:.4g}\n")
            content.append(f"  N = {peak.negativity:.6g}   log-negativity = {peak.log_negativity:.6g}\n")
            marker = "yes" if self.has_interior_maximum() else "no"
            content.append(f"  Interior maximum: {marker}")

        console.print(Panel(content, title=f"Sweep Summary: {self.engine}", expand=False))


@dataclass
class SpreadSample:
    """Spread amplitudes at the detector centre for one acceleration."""

    a_proper_m_per_s2: float
    omega: float
    x_r: complex
    x_l: complex


@dataclass
class SpreadProfile:
    """Full spread over the Omega window at one acceleration."""

    a_proper_m_per_s2: float
    omega: np.ndarray
    x_r: np.ndarray
    x_l: np.ndarray
    parseval_defect: float


def spread_record(omega: float, x_r: complex, x_l: complex) -> dict[str, float | None]:
    """One spread row keyed by SPREAD_COLUMNS; log10 of a zero magnitude is None."""
    abs_r, abs_l = abs(x_r), abs(x_l)
    return {
        "omega_dimensionless": float(omega),
        "abs_x_r": abs_r,
        "abs_x_l": abs_l,
        "arg_x_r": float(np.angle(x_r)),
        "arg_x_l": float(np.angle(x_l)),
        "log10_abs_x_r": math.log10(abs_r) if abs_r > 0 else None,
        "log10_abs_x_l": math.log10(abs_l) if abs_l > 0 else None,
    }


@dataclass
class SpreadReport:
    """Sampled spread per acceleration plus full profiles at selected accelerations."""

    samples: list[SpreadSample] = field(default_factory=list)
    profiles: list[SpreadProfile] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.samples.sort(key=lambda s: s.a_proper_m_per_s2)
        self.profiles.sort(key=lambda p: p.a_proper_m_per_s2)

    def sample_records(self) -> list[dict[str, float | None]]:
        return [
            {"a_proper_m_per_s2": s.a_proper_m_per_s2, **spread_record(s.omega, s.x_r, s.x_l)}
            for s in self.samples
        ]

    def profile_records(self) -> list[dict[str, float | None]]:
        return [
            {"a_proper_m_per_s2": p.a_proper_m_per_s2, **spread_record(float(w), complex(xr), complex(xl))}
            for p in self.profiles
            for w, xr, xl in zip(p.omega, p.x_r, p.x_l, strict=True)
        ]

    def to_dict(self) -> dict[str, Any]:
        return {
            "samples": self.sample_records(),
            "profiles": self.profile_records(),
            "profile_defects": {repr(p.a_proper_m_per_s2): p.parseval_defect for p in self.profiles},
        }

    def diagnostics(self) -> list[dict[str, Any]]:
        return [{"a_proper_m_per_s2": p.a_proper_m_per_s2, "parseval_defect": p.parseval_defect} for p in self.profiles]


@dataclass
class CostRow:
    """Predicted brute-force cost at one bin count, with its measured runtime if run."""

    bins: int
    n_max: int
    modes: int
    support: int
    witness: float
    runtime_s: float | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "bins": self.bins,
            "n_max": self.n_max,
            "modes": self.modes,
            "support": self.support,
            "witness": self.witness,
            "runtime_s": self.runtime_s,
        }


@dataclass
class OracleRow:
    """Engine A against Engine B at one bin count."""

    bins: int
    distance: float | None
    """Trace distance; None when the brute-force run was refused"""

    tolerance: float
    constant_r: bool
    error_message: str | None = None

    @property
    def passed(self) -> bool:
        return self.distance is not None and self.distance < self.tolerance

    @property
    def status(self) -> str:
        if self.distance is None:
            return "refused"
        return "ok" if self.passed else "mismatch"

    def to_dict(self) -> dict[str, Any]:
        return {
            "bins": self.bins,
            "trace_distance": self.distance,
            "tolerance": self.tolerance,
            "constant_r": self.constant_r,
            "status": self.status,
            "error_message": self.error_message,
        }


@dataclass
class OracleReport:
    """Cross-engine distances and the brute-force cost table."""

    a_proper_m_per_s2: float
    omega_det: float
    n_max: int
    rows: list[OracleRow] = field(default_factory=list)
    costs: list[CostRow] = field(default_factory=list)
    fitted_base: float | None = None
    """exp of the least-squares slope of ln(runtime) against bins; needs --record-timing"""

    validity_ratio: float | None = None
    """Peaked validity ratio of the checked band"""

    @property
    def passed(self) -> bool:
        return bool(self.rows) and all(row.passed for row in self.rows)

    @property
    def refused(self) -> bool:
        return any(row.distance is None for row in self.rows)

    @property
    def gap_constant(self) -> float | None:
        """Largest trace distance per unit validity ratio over the multi-bin natural-r rows."""
        if not self.validity_ratio:
            return None
        gaps = [
            row.distance / self.validity_ratio
            for row in self.rows
            if row.distance is not None and row.bins > 1 and not row.constant_r
        ]
        return max(gaps, default=None)

    def diagnostics(self) -> list[dict[str, Any]]:
        return [row.to_dict() for row in self.rows]

    def to_dict(self, include_timing: bool = False) -> dict[str, Any]:
        costs = [c.to_dict() for c in self.costs]
        if not include_timing:
            for cost in costs:
                cost.pop("runtime_s")
        data: dict[str, Any] = {
            "a_proper_m_per_s2": self.a_proper_m_per_s2,
            "omega_det_dimensionless": self.omega_det,
            "n_max": self.n_max,
            "passed": self.passed,
            "validity_ratio": self.validity_ratio,
            "gap_constant": self.gap_constant,
            "rows": [r.to_dict() for r in self.rows],
            "costs": costs,
        }
        if include_timing:
            data["fitted_base"] = self.fitted_base
        return data

    def print_report(self) -> None:
        """Print distances and cost estimates as Rich tables."""
        table = Table(title=f"Engine cross-check at Ω_det = {self.omega_det:.4g}, n_max = {self.n_max}")
        table.add_column("bins", justify="right")
        table.add_column("constant r")
        table.add_column("trace distance", justify="right")
        table.add_column("tolerance", justify="right")
        table.add_column("status")
        for row in self.rows:
            distance = f"{row.distance:.3e}" if row.distance is not None else "-"
            table.add_row(
                str(row.bins),
                "yes" if row.constant_r else "no",
                distance,
                f"{row.tolerance:.1e}",
                styled_status(row.status),
            )
        console.print(table)

        costs = Table(title="Brute-force cost model")
        costs.add_column("bins", justify="right")
        costs.add_column("modes", justify="right")
        costs.add_column("support", justify="right")
        costs.add_column("a(n)^m", justify="right")
        costs.add_column("runtime (s)", justify="right")
        for cost in self.costs:
            runtime = f"{cost.runtime_s:.3f}" if cost.runtime_s is not None else "-"
            costs.add_row(str(cost.bins), str(cost.modes), f"{cost.support:,}", f"{cost.witness:.4g}", runtime)
        console.print(costs)
        if self.gap_constant is not None:
            console.print(f"Natural-r gap constant: {self.gap_constant:.3g} (validity ratio {self.validity_ratio:.3g})")
        if self.fitted_base is not None:
            console.print(f"Fitted exponential base: {self.fitted_base:.3g}")
