"""Utility functions for unruh-bench."""

from __future__ import annotations

import hashlib
import json
import math
from collections.abc import Mapping
from typing import Any

from expandvars import expandvars


def expandvars_dict(data: dict[str, Any]) -> dict[str, Any]:
    """Recursively expand environment references in every string value of a scenario table."""

    def expand_item(item: Any) -> Any:
        if isinstance(item, str):
            return expandvars(item)
        if isinstance(item, Mapping):
            return expandvars_dict(dict(item))
        if isinstance(item, list):
            return [expand_item(i) for i in item]
        return item

    return {key: expand_item(value) for key, value in data.items()}


def flatten(data: Mapping[str, Any], prefix: str = "") -> dict[str, Any]:
    """Flatten nested tables into dotted keys ({"a": {"b": 1}} -> {"a.b": 1})."""
    flat: dict[str, Any] = {}
    for key, value in data.items():
        dotted = f"{prefix}.{key}" if prefix else str(key)
        if isinstance(value, Mapping):
            flat.update(flatten(value, dotted))
        else:
            flat[dotted] = value
    return flat


def canonical_json(data: Any) -> str:
    """Serialize with sorted keys and compact separators so equal data hashes equally."""
    return json.dumps(data, sort_keys=True, separators=(",", ":"), allow_nan=False)


def manifest_hash(data: Any) -> str:
    """sha256 hex digest of the canonical JSON form of data."""
    return hashlib.sha256(canonical_json(data).encode("utf-8")).hexdigest()


def format_float(value: float | None) -> str:
    """Format a number for CSV output.

    repr() of a float round-trips exactly, which keeps reruns byte-identical; None and
    non-finite values become empty cells.
    """
    if value is None:
        return ""
    value = float(value)
    if not math.isfinite(value):
        return ""
    return repr(value)
