"""Scenario file loader.

Scenario files are TOML. Tables and dotted keys are flattened to dotted names
(detector.center_per_s), string values go through ${VAR:-default} expansion, and every value is
coerced to the type of its key. Keys not listed in KEYS are rejected.
"""

from __future__ import annotations

import re
from collections.abc import Callable, Mapping
from pathlib import Path
from typing import Any

import tomlkit
from tomlkit.exceptions import ParseError

from unruh_bench.logging import get_logger
from unruh_bench.models.scenario import (
    DetectorShape,
    DetectorSpec,
    EngineConfig,
    EngineKind,
    GridConfig,
    ProfileSpec,
    ScenarioConfig,
    StateSpec,
    SweepConfig,
)
from unruh_bench.squeezing import AccelerationContext, TruncationConfig
from unruh_bench.utils import expandvars_dict, flatten

logger = get_logger(__name__)


class ConfigError(ValueError):
    """Scenario file cannot be parsed or describes an impossible scenario."""


def _as_bool(value: Any) -> bool:
    if isinstance(value, bool):
        return value
    if isinstance(value, str) and value.strip().lower() in ("true", "false"):
        return value.strip().lower() == "true"
    raise TypeError


def _as_int(value: Any) -> int:
    if isinstance(value, bool):
        raise TypeError
    if isinstance(value, int):
        return value
    number = float(value)
    if not number.is_integer():
        raise TypeError
    return int(number)


def _as_float(value: Any) -> float:
    if isinstance(value, bool):
        raise TypeError
    return float(value)


def _as_str(value: Any) -> str:
    if not isinstance(value, str):
        raise TypeError
    return value


def _as_float_list(value: Any) -> tuple[float, ...]:
    if isinstance(value, str):
        value = [item for item in value.split(",") if item.strip()]
    if not isinstance(value, list):
        raise TypeError
    return tuple(_as_float(item) for item in value)


_PROFILE_KEYS: dict[str, Callable[[Any], Any]] = {
    "omega0_rad_per_s": _as_float,
    "sigma_rad_per_s": _as_float,
    "chirp_log_rate": _as_float,
    "chirp_quadratic": _as_float,
}

KEYS: dict[str, Callable[[Any], Any]] = {
    "state.p_real": _as_float,
    "state.p_imag": _as_float,
    "state.q_real": _as_float,
    "state.q_imag": _as_float,
    **{f"profile_x.{key}": coerce for key, coerce in _PROFILE_KEYS.items()},
    **{f"profile_y.{key}": coerce for key, coerce in _PROFILE_KEYS.items()},
    "detector.center_per_s": _as_float,
    "detector.width_per_s": _as_float,
    "detector.q_factor": _as_float,
    "detector.shape": _as_str,
    "acceleration.a_proper_m_per_s2": _as_float,
    "acceleration.c_m_per_s": _as_float,
    "sweep.a_min_m_per_s2": _as_float,
    "sweep.a_max_m_per_s2": _as_float,
    "sweep.points": _as_int,
    "sweep.workers": _as_int,
    "sweep.profile_a_m_per_s2": _as_float_list,
    "truncation.n_max": _as_int,
    "truncation.tail_tol": _as_float,
    "grid.omega_nodes": _as_int,
    "grid.spread_nodes": _as_int,
    "grid.band_nodes": _as_int,
    "grid.bins": _as_int,
    "grid.bins_cap": _as_int,
    "engine.kind": _as_str,
    "engine.allow_invalid": _as_bool,
    "engine.budget_terms": _as_int,
    "engine.oracle_tolerance": _as_float,
    "engine.constant_r": _as_bool,
    "engine.tamper_l_convention": _as_bool,
    "units.frequency_convention": _as_str,
}
"""Accepted dotted keys and their coercions"""

SUPPORTED_CONVENTIONS = ("angular",)


def _line_of(text: str, key: str) -> int | None:
    """First line that assigns the key's last component, for error messages."""
    leaf = re.escape(key.rsplit(".", 1)[-1])
    pattern = re.compile(rf"^\s*(?:[\w.]+\.)?{leaf}\s*=")
    for number, line in enumerate(text.splitlines(), start=1):
        if pattern.match(line):
            return number
    return None


def _where(source: str, text: str, key: str) -> str:
    line = _line_of(text, key)
    return f"{source}:{line}" if line is not None else source


def parse_flat(text: str, source: str = "<string>") -> dict[str, Any]:
    """Parse scenario TOML into coerced dotted keys.

    Raises:
        ConfigError: On malformed TOML (citing line and column), unknown keys or values that
            cannot be coerced (citing the key)
    """
    try:
        doc = tomlkit.parse(text)
    except ParseError as e:
        raise ConfigError(f"{source}:{e.line}:{e.col}: malformed TOML: {e}") from e

    raw = flatten(expandvars_dict(doc.unwrap()))
    flat: dict[str, Any] = {}
    for key, value in raw.items():
        coerce = KEYS.get(key)
        if coerce is None:
            raise ConfigError(f"{_where(source, text, key)}: unknown key '{key}'")
        try:
            flat[key] = coerce(value)
        except (TypeError, ValueError) as e:
            raise ConfigError(f"{_where(source, text, key)}: cannot read {key} = {value!r}") from e
    return flat


def _section(flat: Mapping[str, Any], name: str) -> dict[str, Any]:
    prefix = f"{name}."
    return {key[len(prefix) :]: value for key, value in flat.items() if key.startswith(prefix)}


def _detector(values: dict[str, Any]) -> DetectorSpec:
    try:
        shape = DetectorShape(values.pop("shape", DetectorShape.TOP_HAT.value))
    except ValueError as e:
        choices = ", ".join(s.value for s in DetectorShape)
        raise ConfigError(f"detector.shape must be one of {choices}") from e

    if "q_factor" in values:
        if "width_per_s" in values:
            raise ConfigError("detector.width_per_s and detector.q_factor are mutually exclusive")
        q_factor = values.pop("q_factor")
        return DetectorSpec.from_q_factor(values.pop("center_per_s", DetectorSpec.center_per_s), q_factor, shape)
    return DetectorSpec(**values, shape=shape)


def _engine(values: dict[str, Any]) -> EngineConfig:
    try:
        kind = EngineKind(values.pop("kind", EngineKind.PEAKED.value))
    except ValueError as e:
        choices = ", ".join(k.value for k in EngineKind)
        raise ConfigError(f"engine.kind must be one of {choices}") from e
    return EngineConfig(kind=kind, **values)


def scenario_from_flat(flat: Mapping[str, Any]) -> ScenarioConfig:
    """Build a ScenarioConfig from coerced dotted keys; missing keys take their defaults.

    Every profile_y key falls back to the corresponding profile_x value.

    Raises:
        ConfigError: If the values violate a physical or structural precondition
    """
    convention = flat.get("units.frequency_convention", SUPPORTED_CONVENTIONS[0])
    if convention not in SUPPORTED_CONVENTIONS:
        raise ConfigError(f"units.frequency_convention must be one of {', '.join(SUPPORTED_CONVENTIONS)}")

    try:
        state = _section(flat, "state")
        profile_x = _section(flat, "profile_x")
        profile_y = {**profile_x, **_section(flat, "profile_y")}
        acceleration = _section(flat, "acceleration")
        return ScenarioConfig(
            state=StateSpec(
                p=complex(state.get("p_real", StateSpec.p.real), state.get("p_imag", 0.0)),
                q=complex(state.get("q_real", StateSpec.q.real), state.get("q_imag", 0.0)),
                profile_x=ProfileSpec(**profile_x),
                profile_y=ProfileSpec(**profile_y),
            ),
            detector=_detector(_section(flat, "detector")),
            acceleration=AccelerationContext(**acceleration),
            truncation=TruncationConfig(**_section(flat, "truncation")),
            grid=GridConfig(**_section(flat, "grid")),
            sweep=SweepConfig(**_section(flat, "sweep")),
            engine=_engine(_section(flat, "engine")),
            frequency_convention=convention,
        )
    except ConfigError:
        raise
    except (TypeError, ValueError) as e:
        raise ConfigError(str(e)) from e


def parse_scenario(text: str, source: str = "<string>") -> ScenarioConfig:
    """Parse scenario TOML text."""
    return scenario_from_flat(parse_flat(text, source))


def load_scenario(path: Path) -> ScenarioConfig:
    """Load a scenario file.

    Raises:
        ConfigError: If the file cannot be read or describes an invalid scenario
    """
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"cannot read scenario file {path}: {e}") from e
    logger.debug(f"Loading scenario {path}")
    return parse_scenario(text, str(path))
