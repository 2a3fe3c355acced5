"""Command-line interface for unruh-bench."""

import time
from dataclasses import replace
from pathlib import Path
from typing import Annotated

import typer
from dotenv import load_dotenv
from rich.progress import (
    BarColumn,
    MofNCompleteColumn,
    Progress,
    TaskProgressColumn,
    TextColumn,
    TimeRemainingColumn,
)
from rich.table import Table

from unruh_bench.config import OUTPUT_DIR
from unruh_bench.console import console, error, styled_status, success, warning
from unruh_bench.logging import get_logger, setup_logging
from unruh_bench.models.scenario import EngineKind, ScenarioConfig

load_dotenv()

logger = get_logger(__name__)

app = typer.Typer(
    help="Negativity of polarization entanglement seen by an accelerated band-limited detector.",
    no_args_is_help=True,
)

EXIT_CONFIG = 1
EXIT_VALIDITY = 2
EXIT_ORACLE = 3


ConfigPath = Annotated[Path, typer.Argument(help="Scenario TOML file")]

OutputDir = Annotated[
    Path,
    typer.Option("-o", "--out", help="Directory for output files"),
]

Points = Annotated[
    int | None,
    typer.Option("--points", min=1, help="Number of log-spaced accelerations (default: sweep.points)"),
]

Seedless = Annotated[
    bool,
    typer.Option("--seedless", help="Reserved; nothing is random, so setting it is an error"),
]

RecordTiming = Annotated[
    bool,
    typer.Option("--record-timing", help="Add wall-clock timings to the manifest"),
]

Verbose = Annotated[
    bool,
    typer.Option("-v", "--verbose", help="Enable verbose output (DEBUG level)"),
]

Quiet = Annotated[
    bool,
    typer.Option("-q", "--quiet", help="Show only warnings and errors"),
]

LogLevel = Annotated[
    str | None,
    typer.Option(
        "--log-level",
        help="Explicit log level (DEBUG, INFO, WARNING, ERROR, CRITICAL)",
        case_sensitive=False,
    ),
]

ConstantR = Annotated[
    bool,
    typer.Option("--constant-r", hidden=True, help="Test hook: use the band-centre r in every bin"),
]


def _setup_logging_from_options(verbose: bool, quiet: bool, log_level: str | None) -> None:
    """Configure logging based on CLI options."""
    if sum([verbose, quiet, log_level is not None]) > 1:
        error("--verbose, --quiet, and --log-level are mutually exclusive")
        raise typer.Exit(EXIT_CONFIG)
    setup_logging(verbose=verbose, quiet=quiet, log_level=log_level)


def _reject_seedless(seedless: bool) -> None:
    if seedless:
        error("--seedless is reserved: unruh-bench uses no randomness")
        raise typer.Exit(EXIT_CONFIG)


def _load_config(config: Path, points: int | None = None) -> ScenarioConfig:
    """Load a scenario, applying a --points override so the manifest records it."""
    from unruh_bench.loader import ConfigError, load_scenario

    try:
        cfg = load_scenario(config)
        if points is not None:
            cfg = replace(cfg, sweep=replace(cfg.sweep, points=points))
    except ConfigError as e:
        error(str(e))
        raise typer.Exit(EXIT_CONFIG) from e
    return cfg


def _exit_code(e: Exception) -> int:
    """Exit code for an exception escaping a command."""
    from unruh_bench.engine.complexity import BudgetExceededError
    from unruh_bench.spectral.transform import SpreadResolutionError
    from unruh_bench.squeezing import TruncationError, ValidityError

    if isinstance(e, ValidityError | TruncationError | SpreadResolutionError):
        return EXIT_VALIDITY
    if isinstance(e, BudgetExceededError):
        return EXIT_ORACLE
    return EXIT_CONFIG


def _fail(e: Exception) -> typer.Exit:
    error(str(e))
    return typer.Exit(_exit_code(e))


def _create_progress_display() -> Progress:
    """Create the sweep progress bar."""
    return Progress(
        TextColumn("[progress.description]{task.description}"),
        BarColumn(),
        TaskProgressColumn(),
        MofNCompleteColumn(),
        TimeRemainingColumn(),
        console=console,
    )


@app.command()
def validate(
    config: ConfigPath,
    points: Points = None,
    seedless: Seedless = False,
    verbose: Verbose = False,
    quiet: Quiet = False,
    log_level: LogLevel = None,
) -> None:
    """Check the peaked-detector validity ratio across the sweep window.

    Prints the dimensionless detector centre, the squeezing parameter and the validity
    ratio per acceleration. Exits with status 2 if any acceleration fails.

    Example:
        unruh-bench validate configs/standard.toml
    """
    from unruh_bench.squeezing import (
        ValidityStatus,
        acceleration_to_band,
        minimum_acceleration,
        peaked_validity,
        squeeze_param,
        validity_status,
    )

    _setup_logging_from_options(verbose, quiet, log_level)
    _reject_seedless(seedless)
    cfg = _load_config(config, points)

    if cfg.detector.width_per_s == 0:
        warning("Detector width is zero: the validity ratio is 0 but no engine can assemble this band")

    table = Table(title=f"Peaked validity, Q = {cfg.detector.q_factor:.4g}")
    table.add_column("ã (m/s²)", justify="right")
    table.add_column("Ω_det", justify="right")
    table.add_column("r", justify="right")
    table.add_column("ratio", justify="right")
    table.add_column("status")

    failed = 0
    try:
        for a_proper in cfg.sweep.accelerations():
            omega_det, delta = acceleration_to_band(cfg.detector, cfg.at(a_proper))
            ratio = peaked_validity(omega_det, delta)
            status = validity_status(ratio)
            if status is ValidityStatus.FAIL:
                failed += 1
            table.add_row(
                f"{a_proper:.4e}",
                f"{omega_det:.6g}",
                f"{squeeze_param(omega_det).r:.6g}",
                f"{ratio:.4g}",
                styled_status(status.value),
            )
        floor = minimum_acceleration(cfg.detector, cfg.acceleration.c_m_per_s) if cfg.detector.width_per_s > 0 else None
    except ValueError as e:
        raise _fail(e) from e

    console.print(table)
    if floor is not None:
        console.print(f"Smallest acceleration in the peaked regime: {floor:.4e} m/s²")

    if failed:
        error(f"{failed} acceleration(s) fail the validity gate")
        raise typer.Exit(EXIT_VALIDITY)
    success("All accelerations pass the validity gate")


@app.command()
def spread(
    config: ConfigPath,
    output_dir: OutputDir = OUTPUT_DIR,
    points: Points = None,
    seedless: Seedless = False,
    record_timing: RecordTiming = False,
    verbose: Verbose = False,
    quiet: Quiet = False,
    log_level: LogLevel = None,
) -> None:
    """Write the Rindler-frequency spread of the helicity-up photon.

    spread_sampled.csv holds the spread at the detector centre per acceleration;
    spread_profiles.csv holds full profiles at sweep.profile_a_m_per_s2.

    Example:
        unruh-bench spread configs/standard.toml --out output/spread
    """
    from unruh_bench.engine.sweep import spread_report
    from unruh_bench.models.manifest import RunManifest
    from unruh_bench.plugins import initialize_plugins
    from unruh_bench.renderers import render_spread

    _setup_logging_from_options(verbose, quiet, log_level)
    _reject_seedless(seedless)
    cfg = _load_config(config, points)
    initialize_plugins()

    start = time.perf_counter()
    try:
        report = spread_report(cfg)
    except (ValueError, RuntimeError) as e:
        raise _fail(e) from e

    manifest = RunManifest(
        config=cfg.to_dict(),
        command="spread",
        diagnostics=report.diagnostics(),
        timing={"spread_s": time.perf_counter() - start} if record_timing else None,
    )
    render_spread(report, manifest, output_dir)
    logger.info(f"Spread sampled at {len(report.samples)} accelerations, {len(report.profiles)} full profile(s)")


@app.command()
def sweep(
    config: ConfigPath,
    output_dir: OutputDir = OUTPUT_DIR,
    engine: Annotated[
        EngineKind | None,
        typer.Option("--engine", help="Engine to run (default: engine.kind)"),
    ] = None,
    points: Points = None,
    constant_r: ConstantR = False,
    seedless: Seedless = False,
    record_timing: RecordTiming = False,
    verbose: Verbose = False,
    quiet: Quiet = False,
    log_level: LogLevel = None,
) -> None:
    """Sweep the negativity over the configured acceleration window.

    Writes sweep.csv, sweep_manifest.json and sweep_summary.toml. Points that cannot be
    evaluated are kept with empty cells; if any point failed the exit status is 2.

    Example:
        unruh-bench sweep configs/chirped.toml --points 50
    """
    from unruh_bench.engine.sweep import sweep_negativity
    from unruh_bench.models.manifest import RunManifest
    from unruh_bench.plugins import initialize_plugins
    from unruh_bench.renderers import render_sweep

    _setup_logging_from_options(verbose, quiet, log_level)
    _reject_seedless(seedless)
    cfg = _load_config(config, points)
    if engine is not None or constant_r:
        cfg = replace(
            cfg,
            engine=replace(
                cfg.engine,
                kind=engine or cfg.engine.kind,
                constant_r=constant_r or cfg.engine.constant_r,
            ),
        )
    initialize_plugins()

    logger.info(f"Engine: {cfg.engine.kind.value}")
    logger.info(f"Output dir: {output_dir}")

    progress = _create_progress_display()
    task = progress.add_task("Sweeping accelerations", total=cfg.sweep.points)

    def progress_callback(point, completed: int, total: int) -> None:
        """Advance the bar after each point."""
        progress.update(task, completed=completed, total=total)

    start = time.perf_counter()
    try:
        with progress:
            result = sweep_negativity(cfg, progress_callback=progress_callback)
    except (ValueError, RuntimeError) as e:
        raise _fail(e) from e

    manifest = RunManifest(
        config=cfg.to_dict(),
        command="sweep",
        diagnostics=result.diagnostics(),
        timing={"sweep_s": time.perf_counter() - start} if record_timing else None,
    )
    render_sweep(result, manifest, output_dir)

    console.print()
    result.print_summary()

    failed = result.counts()["failed"]
    if failed:
        error(f"{failed} point(s) failed")
        raise typer.Exit(EXIT_VALIDITY)


@app.command("oracle-check")
def oracle_check(
    config: ConfigPath,
    output_dir: OutputDir = OUTPUT_DIR,
    constant_r: ConstantR = False,
    tamper_l_convention: Annotated[
        bool,
        typer.Option(
            "--tamper-l-convention",
            hidden=True,
            help="Test hook: conjugate the left capture amplitude in the peaked engine",
        ),
    ] = False,
    seedless: Seedless = False,
    record_timing: RecordTiming = False,
    verbose: Verbose = False,
    quiet: Quiet = False,
    log_level: LogLevel = None,
) -> None:
    """Compare the peaked engine against the brute-force engine.

    Runs both engines for 1..grid.bins frequency bins at the reference acceleration, prints
    the trace distances and the brute-force cost table and writes oracle_report.json. Exits
    with status 3 if any distance exceeds engine.oracle_tolerance or a run was refused.

    Example:
        unruh-bench oracle-check configs/oracle.toml --record-timing
    """
    from unruh_bench.engine.sweep import cross_check
    from unruh_bench.models.manifest import RunManifest
    from unruh_bench.plugins import initialize_plugins
    from unruh_bench.renderers import render_oracle

    _setup_logging_from_options(verbose, quiet, log_level)
    _reject_seedless(seedless)
    cfg = _load_config(config)
    if constant_r or tamper_l_convention:
        cfg = replace(
            cfg,
            engine=replace(
                cfg.engine,
                constant_r=constant_r or cfg.engine.constant_r,
                tamper_l_convention=tamper_l_convention or cfg.engine.tamper_l_convention,
            ),
        )
    initialize_plugins()

    start = time.perf_counter()
    try:
        report = cross_check(cfg, record_timing=record_timing)
    except (ValueError, RuntimeError) as e:
        raise _fail(e) from e

    manifest = RunManifest(
        config=cfg.to_dict(),
        command="oracle-check",
        diagnostics=report.diagnostics(),
        timing={"oracle_s": time.perf_counter() - start} if record_timing else None,
    )
    render_oracle(report, manifest, output_dir)

    console.print()
    report.print_report()

    if report.refused:
        error("Brute-force run refused by the cost budget")
        raise typer.Exit(EXIT_ORACLE)
    if not report.passed:
        error("Engines disagree beyond engine.oracle_tolerance")
        raise typer.Exit(EXIT_ORACLE)
    success("Engines agree")


def main() -> None:
    """Entry point for unruh-bench command."""
    app()


if __name__ == "__main__":
    main()
