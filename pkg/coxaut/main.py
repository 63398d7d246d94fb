"""Console entry point.

Usage:
    coxaut reduce --n 3 "s1 s2 s2 s3"

This module allows running via ``python -m coxaut.main`` as well.
"""

from __future__ import annotations

import sys

from coxaut.interface.cli.app import run


def main() -> None:
    """Run the command line with ``sys.argv`` and exit with its status."""
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":  # pragma: no cover - runtime entry
    main()
