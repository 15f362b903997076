#!/usr/bin/env python3
"""
Coxeter Workbench

Command line entry point. Logs go to stderr (and optionally to
logs/workbench.log) so that stdout carries only the report.
"""

import sys
import logging
from pathlib import Path

BASE_DIR = Path(__file__).parent
sys.path.insert(0, str(BASE_DIR / "src"))

from common.errors import ConfigurationError  # noqa: E402
from common.settings import get_settings  # noqa: E402
from interface.cli import run  # noqa: E402


def setup_logging() -> None:
    """Configure the root logger once from the settings file."""
    try:
        settings = get_settings()
    except ConfigurationError as e:
        sys.stderr.write(f"error: {e.message}\n")
        sys.exit(e.exit_code)

    handlers = [logging.StreamHandler(sys.stderr)]
    if settings.app.log_to_file:
        logs_dir = settings.logs_path()
        logs_dir.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(str(logs_dir / "workbench.log")))

    logging.basicConfig(
        level=getattr(logging, settings.app.log_level),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=handlers,
    )


def main() -> int:
    setup_logging()
    return run(sys.argv[1:])


if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        sys.stderr.write("\nInterrupted.\n")
        sys.exit(130)
