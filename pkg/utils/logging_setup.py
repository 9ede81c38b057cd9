"""Logging setup for the command-line entry points."""

import logging
from typing import Optional

from utils.config import get_config

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


def configure_logging(level: Optional[str] = None) -> None:
    """Install one stderr handler on the root logger (idempotent)."""
    level_name = (level or get_config().log_level).upper()
    root = logging.getLogger()
    root.setLevel(getattr(logging, level_name, logging.WARNING))
    if not any(getattr(h, '_alpha_handler', False) for h in root.handlers):
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler._alpha_handler = True
        root.addHandler(handler)
