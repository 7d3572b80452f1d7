"""
Loguru sink setup shared by the command-line entry points.

The library itself only calls ``logger.debug/info/warning``; sinks are
configured here, once per process.
"""

import sys

from loguru import logger

LOG_FORMAT = (
    "<green>{time:HH:mm:ss.SSS}</green> | <level>{level: <8}</level> | "
    "<cyan>{name}</cyan>:<cyan>{function}</cyan> - <level>{message}</level>"
)


def configure_logging(level: str = "INFO", serialize: bool = False) -> None:
    """
    Route mapwalk logs to stderr.

    Args:
        level: Minimum level name ("DEBUG", "INFO", "WARNING", ...)
        serialize: Emit one JSON record per line instead of the text format
    """
    logger.remove()
    logger.add(
        sys.stderr,
        level=level.upper(),
        format=LOG_FORMAT,
        serialize=serialize,
        backtrace=False,
        diagnose=False,
    )
