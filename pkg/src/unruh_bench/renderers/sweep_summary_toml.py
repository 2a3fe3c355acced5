"""Sweep TOML summary renderer plugin."""

import tomlkit

from unruh_bench import hookimpl


@hookimpl
def register_sweep_renderer(sweep: dict, manifest: dict) -> dict:
    """Render a short TOML summary: peak location, interior-maximum flag and status counts.

    Missing peak values are omitted since TOML has no null.

    Args:
        sweep: SweepResult dict
        manifest: RunManifest dict

    Returns:
        Dict with filename and content for sweep_summary.toml
    """
    doc = tomlkit.document()
    doc["manifest_sha256"] = manifest["manifest_sha256"]
    doc["engine"] = sweep["engine"]

    peak = tomlkit.table()
    if sweep["peak_negativity"] is not None:
        peak["a_proper_m_per_s2"] = sweep["peak_a_proper_m_per_s2"]
        peak["negativity"] = sweep["peak_negativity"]
    peak["interior_maximum"] = sweep["interior_maximum"]
    doc["peak"] = peak

    counts = tomlkit.table()
    for status, count in sweep["counts"].items():
        counts[status] = count
    doc["counts"] = counts

    return {
        "filename": "sweep_summary.toml",
        "content": tomlkit.dumps(doc),
    }
