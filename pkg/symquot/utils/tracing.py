"""Logging configuration.

Call ``setup_logging()`` once at start-up; library modules only create
their own loggers.
"""

from __future__ import annotations

import logging

from symquot.config import get_settings

LOG_FORMAT = "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s"


def setup_logging(level: str | None = None) -> None:
    """Configure the root logger for stderr output at ``level`` (default from settings)."""
    name = (level or get_settings().log_level).upper()
    numeric = getattr(logging, name, None)
    if not isinstance(numeric, int):
        logging.basicConfig(level=logging.INFO, format=LOG_FORMAT)
        logging.getLogger(__name__).warning("Unknown log level %r – using INFO.", level)
        return
    logging.basicConfig(level=numeric, format=LOG_FORMAT, force=True)
