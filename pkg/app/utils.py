# app/utils.py

import logging
import sys

import colorama
from colorama import Fore, Style

# Initialize colorama for colored output
colorama.init()

_LEVEL_COLORS = {
    logging.ERROR: Fore.RED,
    logging.CRITICAL: Fore.RED,
    logging.WARNING: Fore.YELLOW,
    logging.INFO: Fore.GREEN,
}


class ColoredFormatter(logging.Formatter):
    """Custom formatter with colors"""

    def format(self, record: logging.LogRecord) -> str:
        color = _LEVEL_COLORS.get(record.levelno, Fore.WHITE)
        return f"{color}{super().format(record)}{Style.RESET_ALL}"


def setup_logging(level: str = "WARNING") -> logging.Logger:
    """
    Attach a colored stderr handler to the package logger.

    Calling it again rebinds the handler to the current stderr and updates the level.

    Args:
        level: Logging level name (DEBUG, INFO, WARNING, ...)

    Returns:
        The configured ``app`` logger
    """
    root = logging.getLogger("app")
    handler = next((h for h in root.handlers if getattr(h, "_stablechar", False)), None)
    if handler is None:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(ColoredFormatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s'))
        handler._stablechar = True
        root.addHandler(handler)
    else:
        handler.setStream(sys.stderr)
    root.setLevel(getattr(logging, str(level).upper(), logging.WARNING))
    return root
