"""Tests for logging configuration."""

import logging
import warnings

from unruh_bench.logging import LOGGER_NAME, WARNINGS_LOGGER_NAME, get_logger, setup_logging


class TestLoggingConfiguration:
    """Test logging setup and configuration."""

    def test_default_log_level(self):
        """Test that default log level is INFO."""
        setup_logging()
        logger = logging.getLogger(LOGGER_NAME)
        assert logger.level == logging.INFO

    def test_verbose_flag(self):
        """Test that verbose flag sets DEBUG level."""
        setup_logging(verbose=True)
        assert logging.getLogger(LOGGER_NAME).level == logging.DEBUG

    def test_quiet_flag(self):
        """Test that quiet flag sets WARNING level."""
        setup_logging(quiet=True)
        assert logging.getLogger(LOGGER_NAME).level == logging.WARNING

    def test_log_level_overrides_verbose(self):
        """Test that explicit log level overrides verbose flag."""
        setup_logging(verbose=True, log_level="warning")
        assert logging.getLogger(LOGGER_NAME).level == logging.WARNING

    def test_repeated_setup_keeps_one_handler(self):
        """Calling setup twice does not duplicate output."""
        setup_logging()
        setup_logging(quiet=True)
        assert len(logging.getLogger(LOGGER_NAME).handlers) == 1

    def test_numerical_warnings_are_captured(self):
        """Python warnings go through the package handler."""
        setup_logging()
        warnings_logger = logging.getLogger(WARNINGS_LOGGER_NAME)
        assert warnings_logger.handlers == logging.getLogger(LOGGER_NAME).handlers
        assert not warnings_logger.propagate

    def test_warning_reaches_handler(self, capsys):
        """A RuntimeWarning is printed by the Rich handler."""
        setup_logging()
        with warnings.catch_warnings():
            warnings.simplefilter("always")
            warnings.warn("overflow encountered in exp", RuntimeWarning, stacklevel=1)
        assert "overflow encountered in exp" in " ".join(capsys.readouterr().out.split())

    def test_get_logger_with_module_name(self):
        """Test getting logger with module name."""
        assert get_logger("engine").name == f"{LOGGER_NAME}.engine"

    def test_get_logger_preserves_full_name(self):
        """Test that get_logger preserves names that already start with package name."""
        full_name = f"{LOGGER_NAME}.engine.sweep"
        assert get_logger(full_name).name == full_name
