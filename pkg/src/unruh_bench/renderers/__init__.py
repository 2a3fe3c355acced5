"""Result renderer orchestration."""

from collections.abc import Iterable
from pathlib import Path

import unruh_bench
from unruh_bench.logging import get_logger
from unruh_bench.models.manifest import RunManifest
from unruh_bench.models.results import OracleReport, SpreadReport, SweepResult
from unruh_bench.plugins import pm

logger = get_logger(__name__)


def _write_results(results: Iterable[dict | None], output_dir: Path) -> list[Path]:
    """Write every renderer result into output_dir, in filename order."""
    output_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for result in sorted((r for r in results if r), key=lambda r: r["filename"]):
        filepath = output_dir / result["filename"]
        try:
            filepath.write_text(result["content"])
            logger.info(f"Wrote {filepath}")
            written.append(filepath)
        except OSError as e:
            logger.error(f"Failed to write {filepath}: {e}")
    return written


def render_sweep(sweep: SweepResult, manifest: RunManifest, output_dir: Path) -> list[Path]:
    """Invoke all registered sweep renderers and write their files.

    Args:
        sweep: Completed sweep
        manifest: Manifest of the run
        output_dir: Directory for output files

    Returns:
        Paths written
    """
    return _write_results(
        pm.hook.register_sweep_renderer(
            unruh_bench=unruh_bench,
            sweep=sweep.to_dict(),
            manifest=manifest.to_dict(),
        ),
        output_dir,
    )


def render_spread(spread: SpreadReport, manifest: RunManifest, output_dir: Path) -> list[Path]:
    """Invoke all registered spread renderers and write their files."""
    return _write_results(
        pm.hook.register_spread_renderer(
            unruh_bench=unruh_bench,
            spread=spread.to_dict(),
            manifest=manifest.to_dict(),
        ),
        output_dir,
    )


def render_oracle(report: OracleReport, manifest: RunManifest, output_dir: Path) -> list[Path]:
    """Invoke all registered oracle renderers; runtimes are included only if the manifest is timed."""
    return _write_results(
        pm.hook.register_oracle_renderer(
            unruh_bench=unruh_bench,
            report=report.to_dict(include_timing=manifest.timing is not None),
            manifest=manifest.to_dict(),
        ),
        output_dir,
    )


__all__ = ["render_oracle", "render_spread", "render_sweep"]
