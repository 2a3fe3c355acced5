"""Sweep CSV renderer plugin."""

import csv
import io
from types import ModuleType

from unruh_bench import hookimpl
from unruh_bench.models.results import SWEEP_COLUMNS


def _row(point: dict, unruh_bench: ModuleType) -> dict[str, str]:
    """CSV cells of one point; a failed point keeps only its acceleration."""
    if point["status"] == "failed":
        return {
            column: unruh_bench.format_float(point[column]) if column == "a_proper_m_per_s2" else ""
            for column in SWEEP_COLUMNS
        }
    return {column: unruh_bench.format_float(point[column]) for column in SWEEP_COLUMNS}


@hookimpl
def register_sweep_renderer(unruh_bench: ModuleType, sweep: dict, manifest: dict) -> dict:
    """Render the negativity curve as plot-ready CSV.

    The first line is "# manifest_sha256=<hex>", followed by the header and one row per
    acceleration in increasing order.

    Args:
        unruh_bench: The unruh_bench module (for format_float)
        sweep: SweepResult dict
        manifest: RunManifest dict

    Returns:
        Dict with filename and content for sweep.csv
    """
    with io.StringIO() as output:
        output.write(f"# manifest_sha256={manifest['manifest_sha256']}\n")
        writer = csv.DictWriter(output, fieldnames=list(SWEEP_COLUMNS), lineterminator="\n")
        writer.writeheader()
        for point in sweep["points"]:
            writer.writerow(_row(point, unruh_bench))

        return {
            "filename": "sweep.csv",
            "content": output.getvalue(),
        }
