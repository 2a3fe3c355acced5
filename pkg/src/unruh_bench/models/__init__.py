"""Data models for scenarios, results and manifests."""

from unruh_bench.models.manifest import RunManifest
from unruh_bench.models.results import (
    SPREAD_COLUMNS,
    SWEEP_COLUMNS,
    CostRow,
    OracleReport,
    OracleRow,
    PointStatus,
    SpreadProfile,
    SpreadReport,
    SpreadSample,
    SweepPoint,
    SweepResult,
)
from unruh_bench.models.scenario import (
    DetectorShape,
    DetectorSpec,
    EngineConfig,
    EngineKind,
    GridConfig,
    ProfileSpec,
    ScenarioConfig,
    StateSpec,
    SweepConfig,
)

__all__ = [
    "SPREAD_COLUMNS",
    "SWEEP_COLUMNS",
    "CostRow",
    "DetectorShape",
    "DetectorSpec",
    "EngineConfig",
    "EngineKind",
    "GridConfig",
    "OracleReport",
    "OracleRow",
    "PointStatus",
    "ProfileSpec",
    "RunManifest",
    "ScenarioConfig",
    "SpreadProfile",
    "SpreadReport",
    "SpreadSample",
    "StateSpec",
    "SweepConfig",
    "SweepPoint",
    "SweepResult",
]
