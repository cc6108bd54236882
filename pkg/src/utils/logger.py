"""
Console logging with short uppercase tags, e.g. "[VERIFY] Checking 3 tableau pairs".
"""

import logging
import sys

LOG_FORMAT = "[%(name)s] %(message)s"


def setup_logging(level: str = "INFO") -> None:
    """
    Route all tagged loggers to stderr so stdout stays machine-readable.

    Args:
        level: Logging level name from config.yaml
    """
    numeric = getattr(logging, str(level).upper(), None)
    if not isinstance(numeric, int):
        raise ValueError(f"Unknown logging level {level!r}")
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)
    root.setLevel(numeric)


def get_logger(tag: str) -> logging.Logger:
    return logging.getLogger(tag.upper())
