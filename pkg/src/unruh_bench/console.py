"""Shared Rich console for unruh-bench CLI output."""

from rich.console import Console

console = Console()

STATUS_STYLES = {
    "pass": "green",
    "warn": "yellow",
    "fail": "red bold",
    "failed": "red bold",
    "ok": "green",
    "mismatch": "red bold",
    "invalid": "yellow",
    "refused": "red",
}
"""Markup styles for validity and oracle statuses in report tables"""


def error(message: str, console: Console = console) -> None:
    """Print an error message in red."""
    console.print(f"[red bold]{message}[/red bold]")


def success(message: str, console: Console = console) -> None:
    """Print a success message in green."""
    console.print(f"[green]{message}[/green]")


def warning(message: str, console: Console = console) -> None:
    """Print a warning message in yellow."""
    console.print(f"[yellow]{message}[/yellow]")


def styled_status(status: str) -> str:
    """Wrap a status label in its table markup, upper-cased."""
    style = STATUS_STYLES.get(status.lower())
    label = status.upper()
    return f"[{style}]{label}[/{style}]" if style else label
