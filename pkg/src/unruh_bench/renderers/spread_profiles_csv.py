"""Full spread profile CSV renderer plugin."""

from types import ModuleType

from unruh_bench import hookimpl
from unruh_bench.renderers.spread_sampled_csv import write_spread_rows


@hookimpl
def register_spread_renderer(unruh_bench: ModuleType, spread: dict, manifest: dict) -> dict | None:
    """Render every full profile into one CSV, keyed by acceleration.

    Skipped when no profile accelerations were configured.

    Returns:
        Dict with filename and content for spread_profiles.csv, or None
    """
    if not spread["profiles"]:
        return None
    return {
        "filename": "spread_profiles.csv",
        "content": write_spread_rows(spread["profiles"], manifest, unruh_bench),
    }
