"""Terminal utilities for rich, colored output and logging."""

import logging
from datetime import datetime
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence

from rich.console import Console
from rich.logging import RichHandler
from rich.panel import Panel
from rich.table import Table


def configure_logging(level: str = "WARNING", log_file: Optional[Path] = None) -> None:
    """
    Route library log records through rich (and optionally a file).

    Args:
        level: Logging level name
        log_file: Optional file that receives DEBUG and above
    """
    handlers: list[logging.Handler] = [
        RichHandler(level=level.upper(), show_path=False, rich_tracebacks=True)
    ]
    if log_file:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_file)
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(
            logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
        )
        handlers.append(file_handler)

    logging.basicConfig(
        level=logging.DEBUG if log_file else level.upper(),
        format="%(message)s",
        datefmt="[%X]",
        handlers=handlers,
        force=True,
    )


def _format_cell(value: Any) -> str:
    if value is None:
        return "[dim]-[/dim]"
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


class TerminalLogger:
    """Rich terminal logger with colored output and status displays."""

    def __init__(self, name: str, log_file: Optional[Path] = None):
        """
        Initialize the terminal logger.

        Args:
            name: Name of the logger (e.g., command name)
            log_file: Optional path to log file
        """
        self.name = name
        self.console = Console()
        self.log_file = log_file
        self.logger = logging.getLogger(name) if log_file else None

    def _emit(self, icon: str, level: int, message: str):
        timestamp = datetime.now().strftime("%H:%M:%S")
        self.console.print(f"[dim]{timestamp}[/dim] {icon} {message}")
        if self.logger:
            self.logger.log(level, message)

    def success(self, message: str):
        self._emit("[green]✓[/]", logging.INFO, message)

    def warning(self, message: str):
        self._emit("[yellow]⚠[/]", logging.WARNING, message)

    def error(self, message: str):
        self._emit("[red]✗[/]", logging.ERROR, message)

    def status(self, message: str):
        """Return a context manager for showing status with spinner."""
        return self.console.status(f"[bold blue]{message}...", spinner="dots")

    def experiment_header(self, experiment_id: str, details: dict[str, Any]):
        """Display experiment header with its main settings."""
        table = Table(show_header=False, box=None, padding=(0, 1))
        table.add_row("[bold cyan]Experiment:[/]", experiment_id)
        for key, value in details.items():
            table.add_row(f"[bold cyan]{key}:[/]", _format_cell(value))

        self.console.print(
            Panel(
                table,
                title=f"[bold]{experiment_id}[/]",
                border_style="cyan",
                padding=(1, 2)
            )
        )

    def result_table(
        self,
        title: str,
        columns: Sequence[str],
        rows: Iterable[Sequence[Any]],
    ):
        """Display rows of results as a table (None shown as '-')."""
        table = Table(title=title, header_style="bold cyan")
        for column in columns:
            table.add_column(column, justify="right")
        for row in rows:
            table.add_row(*(_format_cell(v) for v in row))
        self.console.print(table)
