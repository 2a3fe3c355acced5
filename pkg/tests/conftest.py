"""Pytest configuration and fixtures for unruh-bench tests."""

import logging
from pathlib import Path

import pytest

from unruh_bench.models.scenario import (
    DetectorSpec,
    GridConfig,
    ProfileSpec,
    ScenarioConfig,
    StateSpec,
    SweepConfig,
)
from unruh_bench.squeezing import AccelerationContext, TruncationConfig

CONFIGS_DIR = Path(__file__).parent.parent / "configs"


@pytest.fixture(autouse=True)
def reset_logging():
    """Reset logging configuration after each test.

    This ensures that tests which call setup_logging() don't affect
    other tests that rely on caplog fixture for log capture.
    """
    yield

    # Reset the unruh_bench and captured-warnings loggers after test
    for name in ("unruh_bench", "py.warnings"):
        logger = logging.getLogger(name)
        logger.handlers.clear()
        logger.setLevel(logging.NOTSET)
        logger.propagate = True
    logging.captureWarnings(False)


@pytest.fixture
def configs_dir() -> Path:
    """Directory of the shipped scenario files."""
    return CONFIGS_DIR


@pytest.fixture
def chirped_scenario() -> ScenarioConfig:
    """Small chirped scenario: spread centred at Omega = 3, detector at Omega_det = 3.

    c = 3e8, so the sweep window 3e16..3e17 m/s^2 maps the detector to Omega_det = 10..1.
    """
    profile = ProfileSpec(omega0_rad_per_s=1.0e9, sigma_rad_per_s=1.0e8, chirp_log_rate=3.0)
    return ScenarioConfig(
        state=StateSpec(profile_x=profile, profile_y=profile),
        detector=DetectorSpec.from_q_factor(1.0e9, 500.0),
        acceleration=AccelerationContext(1.0e17, 3.0e8),
        truncation=TruncationConfig(n_max=6, tail_tol=1.0e-3),
        grid=GridConfig(band_nodes=16, spread_nodes=800),
        sweep=SweepConfig(a_min_m_per_s2=3.0e16, a_max_m_per_s2=3.0e17, points=4),
    )


@pytest.fixture
def oracle_scenario() -> ScenarioConfig:
    """Cross-engine scenario at Omega_det = 2 with two bins and n_max = 3."""
    profile = ProfileSpec(omega0_rad_per_s=1.0e9, sigma_rad_per_s=1.0e8, chirp_log_rate=2.0)
    return ScenarioConfig(
        state=StateSpec(profile_x=profile, profile_y=profile),
        detector=DetectorSpec.from_q_factor(1.0e9, 50.0),
        acceleration=AccelerationContext(1.5e17, 3.0e8),
        truncation=TruncationConfig(n_max=3, tail_tol=1.0e-3),
        grid=GridConfig(bins=2, bins_cap=3),
    )
