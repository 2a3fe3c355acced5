"""Tests for the scenario file loader."""

from pathlib import Path

import pytest

from unruh_bench.config import DEFAULT_A_PROPER_M_PER_S2, SPEED_OF_LIGHT_M_PER_S, VALIDITY_THRESHOLD
from unruh_bench.loader import ConfigError, load_scenario, parse_flat, parse_scenario, scenario_from_flat
from unruh_bench.models.scenario import DetectorShape, EngineKind
from unruh_bench.squeezing import acceleration_to_band, peaked_validity


class TestParseFlat:
    """Tests for TOML parsing and key coercion."""

    def test_tables_and_dotted_keys(self):
        """Tables and dotted keys flatten to the same names."""
        flat = parse_flat('truncation.n_max = 8\n[grid]\nbins = 2\n')
        assert flat == {"truncation.n_max": 8, "grid.bins": 2}

    def test_malformed_toml_cites_position(self):
        """Syntax errors name the source, line and column."""
        with pytest.raises(ConfigError, match=r"scenario.toml:2:\d+: malformed TOML"):
            parse_flat("[grid]\nbins = = 2\n", "scenario.toml")

    def test_unknown_key_cites_line(self):
        """Unknown keys are rejected with their line."""
        with pytest.raises(ConfigError, match=r"s.toml:3: unknown key 'grid.nodes'"):
            parse_flat("[grid]\nbins = 2\nnodes = 4\n", "s.toml")

    def test_uncoercible_value(self):
        """Values of the wrong type name their key."""
        with pytest.raises(ConfigError, match="cannot read truncation.n_max"):
            parse_flat("[truncation]\nn_max = 2.5\n")

    def test_booleans_from_strings(self):
        """Expanded strings can carry booleans."""
        assert parse_flat('engine.constant_r = "true"\n') == {"engine.constant_r": True}

    def test_float_list_from_string(self):
        """A comma-separated string is read as a list."""
        flat = parse_flat('sweep.profile_a_m_per_s2 = "1e17, 2e17"\n')
        assert flat["sweep.profile_a_m_per_s2"] == (1.0e17, 2.0e17)

    def test_environment_expansion(self, monkeypatch):
        """${VAR:-default} references are expanded before coercion."""
        monkeypatch.setenv("UNRUH_TEST_N_MAX", "9")
        flat = parse_flat('truncation.n_max = "${UNRUH_TEST_N_MAX:-3}"\ngrid.bins = "${UNRUH_TEST_UNSET:-2}"\n')
        assert flat == {"truncation.n_max": 9, "grid.bins": 2}


class TestParseScenario:
    """Tests for building scenarios from files."""

    def test_defaults(self):
        """An empty file gives the default scenario."""
        cfg = parse_scenario("")
        assert cfg.truncation.n_max == 15
        assert cfg.engine.kind is EngineKind.PEAKED
        assert cfg.detector.shape is DetectorShape.TOP_HAT

    def test_profile_y_falls_back_to_profile_x(self):
        """Missing profile_y keys copy profile_x."""
        cfg = parse_scenario("[profile_x]\nsigma_rad_per_s = 1e8\n[profile_y]\nchirp_log_rate = 2.0\n")
        assert cfg.state.profile_y.sigma_rad_per_s == 1.0e8
        assert cfg.state.profile_y.chirp_log_rate == 2.0
        assert cfg.state.profile_x.chirp_log_rate == 0.0

    def test_q_factor(self):
        """The detector width may be given as a quality factor."""
        cfg = parse_scenario("[detector]\ncenter_per_s = 2e9\nq_factor = 100\n")
        assert cfg.detector.width_per_s == pytest.approx(2.0e7)

    def test_q_factor_and_width_conflict(self):
        """Width and quality factor cannot both be set."""
        with pytest.raises(ConfigError, match="mutually exclusive"):
            parse_scenario("[detector]\nwidth_per_s = 1e6\nq_factor = 100\n")

    @pytest.mark.parametrize(
        ("text", "message"),
        [
            ('detector.shape = "lorentzian"', "detector.shape must be one of"),
            ('engine.kind = "exact"', "engine.kind must be one of"),
            ('units.frequency_convention = "cyclic"', "frequency_convention"),
        ],
    )
    def test_rejects_unknown_choices(self, text, message):
        """Enumerated keys list their choices."""
        with pytest.raises(ConfigError, match=message):
            parse_scenario(text + "\n")

    def test_physical_precondition(self):
        """Impossible values surface as configuration errors."""
        with pytest.raises(ConfigError, match="expected 1"):
            parse_scenario("[state]\np_real = 1.0\nq_real = 1.0\n")

    def test_missing_acceleration_table(self):
        """Without an [acceleration] table the default proper acceleration applies."""
        cfg = parse_scenario("[truncation]\nn_max = 8\n")
        assert cfg.acceleration.a_proper_m_per_s2 == DEFAULT_A_PROPER_M_PER_S2
        assert cfg.acceleration.c_m_per_s == SPEED_OF_LIGHT_M_PER_S

    def test_acceleration_table_with_only_c(self):
        """A table that sets only c keeps the default proper acceleration."""
        cfg = parse_scenario("[acceleration]\nc_m_per_s = 3e8\n")
        assert cfg.acceleration.a_proper_m_per_s2 == DEFAULT_A_PROPER_M_PER_S2
        assert cfg.acceleration.a == pytest.approx(1.0e9)

    def test_unexpected_section_key_is_config_error(self):
        """A key the section dataclass does not take is reported, not raised as TypeError."""
        with pytest.raises(ConfigError):
            scenario_from_flat({"grid.nodes": 3})

    def test_complex_amplitudes(self):
        """Imaginary parts are read separately."""
        cfg = parse_scenario("[state]\np_real = 0.6\nq_real = 0.0\nq_imag = 0.8\n")
        assert cfg.state.q == 0.8j


class TestShippedScenarios:
    """Tests that the shipped scenario files load."""

    @pytest.mark.parametrize("name", ["standard.toml", "chirped.toml", "oracle.toml", "disjoint.toml"])
    def test_loads(self, configs_dir: Path, name):
        """Every shipped scenario parses."""
        assert load_scenario(configs_dir / name).sweep.points >= 1

    def test_standard_defaults(self, configs_dir: Path, monkeypatch):
        """The standard scenario has Q = 500 and c = 3e8."""
        monkeypatch.delenv("UNRUH_N_MAX", raising=False)
        cfg = load_scenario(configs_dir / "standard.toml")
        assert cfg.detector.q_factor == pytest.approx(500.0)
        assert cfg.acceleration.c_m_per_s == 3.0e8
        assert cfg.truncation.n_max == 15
        assert cfg.sweep.profile_a_m_per_s2 == (3.0e17,)

    def test_oracle_scenario(self, configs_dir: Path):
        """The cross-check scenario uses constant r at Omega_det = 2."""
        cfg = load_scenario(configs_dir / "oracle.toml")
        assert cfg.engine.constant_r
        assert cfg.acceleration.a * 2.0 == pytest.approx(cfg.detector.center_per_s)
        omega_det, delta = acceleration_to_band(cfg.detector, cfg.acceleration)
        assert peaked_validity(omega_det, delta) > VALIDITY_THRESHOLD

    def test_missing_file(self, tmp_path: Path):
        """Unreadable files are configuration errors."""
        with pytest.raises(ConfigError, match="cannot read"):
            load_scenario(tmp_path / "missing.toml")
