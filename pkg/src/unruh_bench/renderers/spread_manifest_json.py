"""Spread manifest JSON renderer plugin."""

import json

from unruh_bench import hookimpl


@hookimpl
def register_spread_renderer(spread: dict, manifest: dict) -> dict:
    """Render the run manifest plus the Parseval defect of each full profile.

    Returns:
        Dict with filename and content for spread_manifest.json
    """
    data = {
        **manifest,
        "samples": len(spread["samples"]),
        "profile_defects": spread["profile_defects"],
    }
    return {
        "filename": "spread_manifest.json",
        "content": json.dumps(data, indent=2) + "\n",
    }
