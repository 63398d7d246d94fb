"""Logging configuration for the toolkit.

Log records go to stderr so that stdout carries only results.
"""

from __future__ import annotations

import logging
import sys
from contextvars import ContextVar

_run_id_var: ContextVar[str] = ContextVar("run_id", default="")


def get_run_id() -> str:
    """Return the identifier of the active command invocation."""
    return _run_id_var.get()


def set_run_id(run_id: str) -> None:
    """Set the identifier of the active command invocation."""
    _run_id_var.set(run_id)


class _RunIdFilter(logging.Filter):
    """Inject ``run_id`` into every log record."""

    def filter(self, record: logging.LogRecord) -> bool:  # noqa: A003
        record.run_id = get_run_id()
        return True


def configure_logging(level: int | str = "WARNING", fmt: str = "text") -> None:
    """Configure root logging on stderr.

    Args:
        level: Log level (string name or int constant).
        fmt: ``"text"`` for human-readable output, ``"json"`` for structured
            JSON lines.

    """
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())

    handler = logging.StreamHandler(sys.stderr)
    if fmt == "json":
        from pythonjsonlogger.jsonlogger import JsonFormatter

        handler.setFormatter(
            JsonFormatter(  # type: ignore[no-untyped-call]
                fmt="%(asctime)s %(levelname)s %(name)s %(run_id)s %(message)s",
            )
        )
    else:
        handler.setFormatter(
            logging.Formatter("%(asctime)s %(levelname)s %(name)s [%(run_id)s] - %(message)s")
        )
    handler.addFilter(_RunIdFilter())
    root = logging.getLogger()
    root.setLevel(level)
    root.handlers.clear()
    root.addHandler(handler)
