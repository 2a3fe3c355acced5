"""Sweep runner."""

from unruh_bench.runner.runner import SweepRunner

__all__ = ["SweepRunner"]
