"""Sampled spread CSV renderer plugin."""

import csv
import io
from types import ModuleType

from unruh_bench import hookimpl
from unruh_bench.models.results import SPREAD_COLUMNS

COLUMNS = ("a_proper_m_per_s2", *SPREAD_COLUMNS)


def write_spread_rows(rows: list[dict], manifest: dict, unruh_bench: ModuleType) -> str:
    """CSV text of spread rows under the manifest hash line."""
    with io.StringIO() as output:
        output.write(f"# manifest_sha256={manifest['manifest_sha256']}\n")
        writer = csv.DictWriter(output, fieldnames=list(COLUMNS), lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({column: unruh_bench.format_float(row[column]) for column in COLUMNS})
        return output.getvalue()


@hookimpl
def register_spread_renderer(unruh_bench: ModuleType, spread: dict, manifest: dict) -> dict:
    """Render |X_R| and |X_L| at the detector centre, one row per acceleration.

    Args:
        unruh_bench: The unruh_bench module (for format_float)
        spread: SpreadReport dict
        manifest: RunManifest dict

    Returns:
        Dict with filename and content for spread_sampled.csv
    """
    return {
        "filename": "spread_sampled.csv",
        "content": write_spread_rows(spread["samples"], manifest, unruh_bench),
    }
