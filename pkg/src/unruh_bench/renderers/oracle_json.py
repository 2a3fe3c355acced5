"""Oracle report JSON renderer plugin."""

import json

from unruh_bench import hookimpl


@hookimpl
def register_oracle_renderer(report: dict, manifest: dict) -> dict:
    """Render trace distances and the cost table, with the run manifest.

    Returns:
        Dict with filename and content for oracle_report.json
    """
    return {
        "filename": "oracle_report.json",
        "content": json.dumps({**manifest, "oracle": report}, indent=2) + "\n",
    }
