"""Structured logging + audit trail.

This module provides:
- File logging (rotating log file)
- Console logging to stderr (stdout is reserved for reports)

Design goal:
- The CLI prints short reports and friendly error messages.
- Detailed troubleshooting information goes to logs.

Audit log examples:
- count runs
- verify sweeps and their exit status
"""

from __future__ import annotations

import json
import logging
import os
from logging.handlers import RotatingFileHandler
from typing import Any, Dict, Optional

from backend.core.config_manager import get_config


_LOGGER: logging.Logger | None = None


def get_logger() -> logging.Logger:
    global _LOGGER

    if _LOGGER is not None:
        return _LOGGER

    cfg = get_config()
    logger = logging.getLogger("icecount")

    # Avoid duplicate handlers when the CLI is invoked repeatedly in one process (tests).
    if logger.handlers:
        _LOGGER = logger
        return logger

    logger.setLevel(getattr(logging, cfg.log_level, logging.INFO))
    logger.propagate = False

    formatter = logging.Formatter("%(asctime)s | %(levelname)s | %(message)s")

    try:
        os.makedirs(cfg.log_dir, exist_ok=True)
        log_path = os.path.join(cfg.log_dir, "icecount.log")
        handler = RotatingFileHandler(log_path, maxBytes=2_000_000, backupCount=5, encoding="utf-8")
        handler.setFormatter(formatter)
        logger.addHandler(handler)
    except OSError:
        # Read-only checkout: keep going with console logging only.
        pass

    console = logging.StreamHandler()
    console.setLevel(getattr(logging, cfg.console_log_level, logging.WARNING))
    console.setFormatter(formatter)
    logger.addHandler(console)

    _LOGGER = logger
    return logger


def audit_log(event_type: str, details: Dict[str, Any]) -> None:
    """Write an audit log entry for one CLI run."""

    logger = get_logger()
    record = {"env": get_config().app_env, **(details or {})}
    logger.info("AUDIT | %s | %s", event_type, json.dumps(record, default=str, sort_keys=True))


def log_exception(message: str, exc: Exception, context: Optional[Dict[str, Any]] = None) -> None:
    logger = get_logger()
    logger.error("%s | context=%s", message, json.dumps(context or {}, default=str), exc_info=exc)
