"""Command-line interface.

Public API
----------
build_parser, run
"""

from coxaut.interface.cli.app import build_parser, run

__all__ = [
    "build_parser",
    "run",
]
