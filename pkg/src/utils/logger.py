"""
Component loggers. Everything goes to stderr so stdout stays free for reports.
Records print as "[capture] INFO Parsed 3 probe requests".
"""
import logging
import os
import sys

ROOT = "probescope"
_FORMAT = "[%(tag)s] %(levelname)s %(message)s"


class _StderrHandler(logging.StreamHandler):
    """Writes to whatever sys.stderr is at emit time."""

    @property
    def stream(self):
        return sys.stderr

    @stream.setter
    def stream(self, value):
        pass


class _TagFilter(logging.Filter):
    def filter(self, record):
        record.tag = record.name.split(".", 1)[-1]
        return True


def setup_logging(level: str = None) -> None:
    """Install the stderr handler once; later calls only change the level."""
    level = (level or os.getenv("PROBESCOPE_LOG_LEVEL", "INFO")).upper()
    root = logging.getLogger(ROOT)
    if not root.handlers:
        handler = _StderrHandler()
        handler.setFormatter(logging.Formatter(_FORMAT))
        handler.addFilter(_TagFilter())
        root.addHandler(handler)
    root.setLevel(getattr(logging, level, logging.INFO))


def get_logger(tag: str) -> logging.Logger:
    return logging.getLogger(f"{ROOT}.{tag}")
