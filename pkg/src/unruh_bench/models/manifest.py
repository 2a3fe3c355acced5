"""Run manifest embedded in every output file."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from unruh_bench.config import __version__
from unruh_bench.utils import flatten, manifest_hash


@dataclass
class RunManifest:
    """Resolved configuration, tool version and per-point diagnostics of one run."""

    config: dict[str, Any]
    """Nested echo of every resolved parameter (ScenarioConfig.to_dict())"""

    command: str
    """Subcommand that produced the outputs (sweep, spread, oracle-check)"""

    version: str = __version__
    diagnostics: list[dict[str, Any]] = field(default_factory=list)
    """Per-point validity ratio, truncation loss and Parseval defect"""

    timing: dict[str, float] | None = None
    """Wall-clock seconds per stage; only present with --record-timing"""

    @property
    def flat_config(self) -> dict[str, Any]:
        return flatten(self.config)

    @property
    def config_hash(self) -> str:
        """sha256 over the flattened resolved config and tool version."""
        return manifest_hash({"config": self.flat_config, "version": self.version})

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "tool": "unruh-bench",
            "version": self.version,
            "command": self.command,
            "manifest_sha256": self.config_hash,
            "config": self.flat_config,
            "diagnostics": self.diagnostics,
        }
        if self.timing is not None:
            data["timing"] = self.timing
        return data
