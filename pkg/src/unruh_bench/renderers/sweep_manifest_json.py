"""Sweep manifest JSON renderer plugin."""

import json

from unruh_bench import hookimpl


@hookimpl
def register_sweep_renderer(sweep: dict, manifest: dict) -> dict:
    """Render the run manifest next to the sweep CSV.

    Carries the resolved configuration and hash from the manifest, plus the sweep's status
    counts, Parseval defects and every point with its status and error message.

    Args:
        sweep: SweepResult dict
        manifest: RunManifest dict

    Returns:
        Dict with filename and content for sweep_manifest.json
    """
    return {
        "filename": "sweep_manifest.json",
        "content": json.dumps({**manifest, "sweep": sweep}, indent=2) + "\n",
    }
