"""unruh-bench: polarization entanglement seen by an accelerated band-limited detector."""

import pluggy

from unruh_bench.config import __version__
from unruh_bench.logging import get_logger
from unruh_bench.utils import canonical_json, format_float, manifest_hash

# Convenience export for plugins: from unruh_bench import hookimpl
hookimpl = pluggy.HookimplMarker("unruh_bench")

__all__ = [
    "__version__",
    "hookimpl",
    "canonical_json",
    "format_float",
    "manifest_hash",
    "get_logger",
]
