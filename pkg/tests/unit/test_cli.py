"""Tests for CLI commands."""

import json
from pathlib import Path
from unittest.mock import patch

import pytest
from typer.testing import CliRunner

from unruh_bench.cli import EXIT_CONFIG, EXIT_ORACLE, EXIT_VALIDITY, _create_progress_display, app
from unruh_bench.engine.complexity import BudgetExceededError
from unruh_bench.models.results import (
    OracleReport,
    OracleRow,
    PointStatus,
    SpreadReport,
    SpreadSample,
    SweepPoint,
    SweepResult,
)
from unruh_bench.models.scenario import EngineKind
from unruh_bench.plugins import reset_plugins
from unruh_bench.spectral.transform import SpreadResolutionError
from unruh_bench.squeezing import TruncationError

runner = CliRunner()


def _output(result) -> str:
    """Command output with Rich line wrapping undone."""
    return " ".join(result.stdout.split())


SMALL_SCENARIO = """
[profile_x]
omega0_rad_per_s = 1e9
sigma_rad_per_s = 1e8
chirp_log_rate = 3.0

[detector]
center_per_s = 1e9
q_factor = 500

[acceleration]
a_proper_m_per_s2 = 1e17
c_m_per_s = 3e8

[sweep]
a_min_m_per_s2 = 3e16
a_max_m_per_s2 = 3e17
points = 3

[truncation]
n_max = 6
"""


@pytest.fixture
def scenario_file(tmp_path: Path) -> Path:
    path = tmp_path / "scenario.toml"
    path.write_text(SMALL_SCENARIO)
    return path


def _ok_sweep() -> SweepResult:
    return SweepResult(
        "peaked",
        [SweepPoint(1.0e17, PointStatus.OK, omega_det=3.0, negativity=1e-4, log_negativity=3e-4)],
    )


class TestCLIHelp:
    """Test CLI help output."""

    def test_main_help(self):
        """Test main help displays commands."""
        result = runner.invoke(app, ["--help"])
        assert result.exit_code == 0
        for command in ("validate", "spread", "sweep", "oracle-check"):
            assert command in _output(result)

    def test_sweep_help(self):
        """Test sweep command help."""
        result = runner.invoke(app, ["sweep", "--help"])
        assert result.exit_code == 0
        assert "--engine" in _output(result)
        assert "--points" in _output(result)
        assert "--record-timing" in _output(result)

    def test_hidden_test_hooks(self):
        """Test hooks stay out of the help text."""
        result = runner.invoke(app, ["oracle-check", "--help"])
        assert "--tamper-l-convention" not in _output(result)


class TestCommonOptions:
    """Test options shared by every command."""

    def test_mutually_exclusive_verbose_quiet(self, scenario_file):
        """Test that --verbose and --quiet are mutually exclusive."""
        result = runner.invoke(app, ["validate", str(scenario_file), "--verbose", "--quiet"])
        assert result.exit_code == EXIT_CONFIG
        assert "mutually exclusive" in _output(result)

    def test_mutually_exclusive_quiet_log_level(self, scenario_file):
        """Test that --quiet and --log-level are mutually exclusive."""
        result = runner.invoke(app, ["validate", str(scenario_file), "--quiet", "--log-level", "DEBUG"])
        assert result.exit_code == EXIT_CONFIG

    @pytest.mark.parametrize("command", ["validate", "spread", "sweep", "oracle-check"])
    def test_seedless_is_rejected(self, scenario_file, command):
        """No command uses randomness, so --seedless is an error."""
        result = runner.invoke(app, [command, str(scenario_file), "--seedless"])
        assert result.exit_code == EXIT_CONFIG
        assert "--seedless" in _output(result)

    def test_unknown_key(self, tmp_path):
        """Scenario errors exit with status 1."""
        path = tmp_path / "bad.toml"
        path.write_text("[grid]\nnodes = 3\n")
        result = runner.invoke(app, ["validate", str(path)])
        assert result.exit_code == EXIT_CONFIG
        assert "unknown key" in _output(result)

    def test_missing_file(self, tmp_path):
        """A missing scenario file is a configuration error."""
        result = runner.invoke(app, ["validate", str(tmp_path / "missing.toml")])
        assert result.exit_code == EXIT_CONFIG


class TestValidate:
    """Test the validate command."""

    def test_passing_window(self, scenario_file):
        """Q = 500 up to Omega_det = 10 passes."""
        result = runner.invoke(app, ["validate", str(scenario_file)])
        assert result.exit_code == 0
        assert "pass the validity gate" in _output(result)

    def test_failing_window(self, tmp_path):
        """Q = 50 at Omega_det = 10 fails with status 2."""
        path = tmp_path / "broad.toml"
        path.write_text(SMALL_SCENARIO.replace("q_factor = 500", "q_factor = 50"))
        result = runner.invoke(app, ["validate", str(path)])
        assert result.exit_code == EXIT_VALIDITY
        assert "fail the validity gate" in _output(result)

    def test_scenario_without_acceleration_table(self, tmp_path):
        """The default proper acceleration fills a missing [acceleration] table."""
        path = tmp_path / "no_acceleration.toml"
        path.write_text(SMALL_SCENARIO.replace("[acceleration]\na_proper_m_per_s2 = 1e17\nc_m_per_s = 3e8\n", ""))
        result = runner.invoke(app, ["validate", str(path)])
        assert result.exit_code == 0
        assert "pass the validity gate" in _output(result)

    def test_shipped_standard_scenario(self, configs_dir):
        """The standard scenario stays in the peaked regime."""
        result = runner.invoke(app, ["validate", str(configs_dir / "standard.toml"), "--points", "5"])
        assert result.exit_code == 0


class TestSweep:
    """Test the sweep command."""

    def setup_method(self):
        """Reset plugins before each test."""
        reset_plugins()

    def test_writes_outputs(self, scenario_file, tmp_path):
        """A clean sweep writes the CSV, manifest and summary."""
        out = tmp_path / "out"
        with patch("unruh_bench.engine.sweep.sweep_negativity", return_value=_ok_sweep()):
            result = runner.invoke(app, ["sweep", str(scenario_file), "--out", str(out)])

        assert result.exit_code == 0
        assert {p.name for p in out.iterdir()} == {"sweep.csv", "sweep_manifest.json", "sweep_summary.toml"}
        manifest = json.loads((out / "sweep_manifest.json").read_text())
        assert (out / "sweep.csv").read_text().splitlines()[0] == f"# manifest_sha256={manifest['manifest_sha256']}"
        assert "timing" not in manifest

    def test_overrides_reach_the_engine(self, scenario_file, tmp_path):
        """--engine and --points change the scenario and the manifest."""
        with patch("unruh_bench.engine.sweep.sweep_negativity", return_value=_ok_sweep()) as mock_sweep:
            result = runner.invoke(
                app, ["sweep", str(scenario_file), "--out", str(tmp_path), "--engine", "brute", "--points", "7"]
            )

        assert result.exit_code == 0
        cfg = mock_sweep.call_args.args[0]
        assert cfg.engine.kind is EngineKind.BRUTE
        assert cfg.sweep.points == 7
        manifest = json.loads((tmp_path / "sweep_manifest.json").read_text())
        assert manifest["config"]["sweep.points"] == 7

    def test_record_timing(self, scenario_file, tmp_path):
        """--record-timing adds timings without changing the hash."""
        with patch("unruh_bench.engine.sweep.sweep_negativity", return_value=_ok_sweep()):
            runner.invoke(app, ["sweep", str(scenario_file), "--out", str(tmp_path / "a")])
            runner.invoke(app, ["sweep", str(scenario_file), "--out", str(tmp_path / "b"), "--record-timing"])

        plain = json.loads((tmp_path / "a" / "sweep_manifest.json").read_text())
        timed = json.loads((tmp_path / "b" / "sweep_manifest.json").read_text())
        assert "sweep_s" in timed["timing"]
        assert plain["manifest_sha256"] == timed["manifest_sha256"]

    def test_failed_points_exit_two(self, scenario_file, tmp_path):
        """Failed points are written and the exit status is 2."""
        sweep = _ok_sweep()
        sweep.add_point(SweepPoint(3.0e17, PointStatus.FAILED, error_message="truncation"))
        with patch("unruh_bench.engine.sweep.sweep_negativity", return_value=sweep):
            result = runner.invoke(app, ["sweep", str(scenario_file), "--out", str(tmp_path)])

        assert result.exit_code == EXIT_VALIDITY
        assert len((tmp_path / "sweep.csv").read_text().splitlines()) == 4

    @pytest.mark.parametrize(
        ("exc", "code"),
        [
            (SpreadResolutionError("Parseval defect too large"), EXIT_VALIDITY),
            (TruncationError("tail too large"), EXIT_VALIDITY),
            (BudgetExceededError("refused"), EXIT_ORACLE),
            (ValueError("bad detector"), EXIT_CONFIG),
        ],
    )
    def test_errors_map_to_exit_codes(self, scenario_file, tmp_path, exc, code):
        """Errors escaping the sweep map to their exit status."""
        with patch("unruh_bench.engine.sweep.sweep_negativity", side_effect=exc):
            result = runner.invoke(app, ["sweep", str(scenario_file), "--out", str(tmp_path)])

        assert result.exit_code == code
        assert str(exc) in _output(result)


class TestSpread:
    """Test the spread command."""

    def setup_method(self):
        """Reset plugins before each test."""
        reset_plugins()

    def test_writes_sampled_table(self, scenario_file, tmp_path):
        """Without profile accelerations only the sampled table and manifest are written."""
        report = SpreadReport(samples=[SpreadSample(1.0e17, 3.0, 0.2 + 0.1j, 0.05j)])
        with patch("unruh_bench.engine.sweep.spread_report", return_value=report):
            result = runner.invoke(app, ["spread", str(scenario_file), "--out", str(tmp_path)])

        assert result.exit_code == 0
        assert {p.name for p in tmp_path.iterdir()} == {"spread_sampled.csv", "spread_manifest.json"}

    def test_unresolved_spread(self, scenario_file, tmp_path):
        """An unresolved spread exits with status 2."""
        with patch("unruh_bench.engine.sweep.spread_report", side_effect=SpreadResolutionError("defect")):
            result = runner.invoke(app, ["spread", str(scenario_file), "--out", str(tmp_path)])
        assert result.exit_code == EXIT_VALIDITY


class TestOracleCheck:
    """Test the oracle-check command."""

    def setup_method(self):
        """Reset plugins before each test."""
        reset_plugins()

    @staticmethod
    def _report(*rows: OracleRow) -> OracleReport:
        return OracleReport(1.0e17, 3.0, 6, rows=list(rows))

    def test_agreement(self, scenario_file, tmp_path):
        """Agreeing engines exit 0 and write the report."""
        report = self._report(OracleRow(1, 1e-14, 1e-10, False))
        with patch("unruh_bench.engine.sweep.cross_check", return_value=report):
            result = runner.invoke(app, ["oracle-check", str(scenario_file), "--out", str(tmp_path)])

        assert result.exit_code == 0
        assert "Engines agree" in _output(result)
        assert json.loads((tmp_path / "oracle_report.json").read_text())["oracle"]["passed"] is True

    def test_mismatch(self, scenario_file, tmp_path):
        """A distance above tolerance exits 3."""
        report = self._report(OracleRow(1, 1e-3, 1e-10, False))
        with patch("unruh_bench.engine.sweep.cross_check", return_value=report):
            result = runner.invoke(app, ["oracle-check", str(scenario_file), "--out", str(tmp_path)])
        assert result.exit_code == EXIT_ORACLE

    def test_refused(self, scenario_file, tmp_path):
        """A refused run exits 3."""
        report = self._report(OracleRow(1, 1e-14, 1e-10, False), OracleRow(2, None, 1e-10, True, "refused"))
        with patch("unruh_bench.engine.sweep.cross_check", return_value=report):
            result = runner.invoke(app, ["oracle-check", str(scenario_file), "--out", str(tmp_path)])
        assert result.exit_code == EXIT_ORACLE
        assert "refused" in _output(result)

    def test_test_hooks_reach_the_scenario(self, scenario_file, tmp_path):
        """--constant-r and --tamper-l-convention set the engine hooks."""
        report = self._report(OracleRow(1, 1e-14, 1e-10, False))
        with patch("unruh_bench.engine.sweep.cross_check", return_value=report) as mock_check:
            runner.invoke(
                app,
                ["oracle-check", str(scenario_file), "--out", str(tmp_path), "--constant-r", "--tamper-l-convention"],
            )

        cfg = mock_check.call_args.args[0]
        assert cfg.engine.constant_r
        assert cfg.engine.tamper_l_convention


class TestHelperFunctions:
    """Test CLI helpers."""

    def test_create_progress_display(self):
        """The progress display has a bar and a counter."""
        progress = _create_progress_display()
        assert len(progress.columns) == 5
