"""Logging configuration for unruh-bench."""

import logging

from rich.logging import RichHandler

from unruh_bench.console import console

LOGGER_NAME = "unruh_bench"

WARNINGS_LOGGER_NAME = "py.warnings"
"""numpy/scipy RuntimeWarnings are routed here by logging.captureWarnings"""


def setup_logging(verbose: bool = False, quiet: bool = False, log_level: str | None = None) -> None:
    """Configure logging for unruh-bench.

    Numerical warnings raised by numpy and scipy (overflow in a kernel, ill-conditioned
    eigenproblems) are captured and shown through the same Rich handler.

    Args:
        verbose: Enable DEBUG level logging (per-point numerical diagnostics)
        quiet: Show only WARNING and above
        log_level: Explicit log level (overrides verbose/quiet)
    """
    if log_level:
        level = getattr(logging, log_level.upper())
    elif verbose:
        level = logging.DEBUG
    elif quiet:
        level = logging.WARNING
    else:
        level = logging.INFO

    handler = RichHandler(
        console=console,
        show_time=False,
        show_path=False,
        rich_tracebacks=True,
    )
    handler.setLevel(level)

    logger = logging.getLogger(LOGGER_NAME)
    logger.setLevel(level)
    logger.handlers.clear()
    logger.addHandler(handler)
    logger.propagate = False

    logging.captureWarnings(True)
    warnings_logger = logging.getLogger(WARNINGS_LOGGER_NAME)
    warnings_logger.handlers.clear()
    warnings_logger.addHandler(handler)
    warnings_logger.propagate = False


def get_logger(name: str) -> logging.Logger:
    """Get a logger for a specific module.

    Args:
        name: Module name (typically __name__)

    Returns:
        Logger instance namespaced under the package logger
    """
    if not name.startswith(LOGGER_NAME):
        name = f"{LOGGER_NAME}.{name}"

    return logging.getLogger(name)
