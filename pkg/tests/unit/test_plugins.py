"""Tests for plugin system."""

from unittest.mock import patch

from unruh_bench.plugins import (
    DEFAULT_PLUGINS,
    get_plugins,
    initialize_plugins,
    pm,
    reset_plugins,
)


class TestPluginInitialization:
    """Tests for plugin initialization."""

    def setup_method(self):
        """Reset plugins before each test."""
        reset_plugins()

    def test_initialize_plugins(self):
        """Test plugin initialization registers every bundled renderer."""
        initialize_plugins()

        names = {plugin["name"] for plugin in get_plugins()}
        assert set(DEFAULT_PLUGINS) <= names

    def test_initialize_plugins_idempotent(self):
        """Test that initialize_plugins is idempotent."""
        initialize_plugins()
        first = get_plugins()

        initialize_plugins()
        second = get_plugins()

        assert first == second

    def test_reset_plugins(self):
        """Test plugin reset."""
        initialize_plugins()
        assert len(pm.get_plugins()) > 0

        reset_plugins()
        assert len(pm.get_plugins()) == 0

        # After reset, next call should re-initialize
        assert len(get_plugins()) >= len(DEFAULT_PLUGINS)

    def test_external_plugin_errors_are_logged(self, caplog):
        """A broken entry point does not stop initialization."""
        with patch.object(pm, "load_setuptools_entrypoints", side_effect=RuntimeError("bad plugin")):
            initialize_plugins()

        assert "bad plugin" in caplog.text
        assert len(pm.get_plugins()) == len(DEFAULT_PLUGINS)


class TestRendererHooks:
    """Tests for the bundled renderer hooks."""

    def setup_method(self):
        """Reset and initialize plugins."""
        reset_plugins()
        initialize_plugins()

    def test_sweep_renderers(self):
        """Three sweep renderers answer the sweep hook."""
        assert len(pm.hook.register_sweep_renderer.get_hookimpls()) == 3

    def test_spread_renderers(self):
        """Three spread renderers answer the spread hook."""
        assert len(pm.hook.register_spread_renderer.get_hookimpls()) == 3

    def test_oracle_renderer(self):
        """One renderer answers the oracle hook."""
        assert len(pm.hook.register_oracle_renderer.get_hookimpls()) == 1
