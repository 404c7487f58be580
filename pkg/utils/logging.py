"""
Logging utilities for the simultaneous root finder.
"""

import sys
from datetime import datetime
from typing import Optional, Callable, TextIO


LEVELS = {"DEBUG": 10, "INFO": 20, "WARNING": 30, "ERROR": 40}


class Logger:
    """
    Simple logger with callback support.

    Messages go to stderr so that report output on stdout stays
    deterministic.
    """

    def __init__(
        self,
        callback: Optional[Callable[[str], None]] = None,
        min_level: str = "INFO",
        stream: Optional[TextIO] = None,
        max_messages: int = 1000
    ):
        """
        Initialize logger.

        Args:
            callback: Optional callback for formatted log messages
            min_level: Messages below this level are dropped
            stream: Output stream (stderr if None)
            max_messages: Size of the in-memory message buffer
        """
        self._callback = callback
        self._messages = []
        self._max_messages = max_messages
        self._stream = stream
        self.min_level = min_level.upper()

    def set_callback(self, callback: Callable[[str], None]):
        """Set callback for log messages."""
        self._callback = callback

    def is_enabled_for(self, level: str) -> bool:
        return LEVELS.get(level.upper(), 20) >= LEVELS.get(self.min_level, 20)

    def log(self, message: str, level: str = "INFO"):
        """
        Log a message.

        Args:
            message: Log message
            level: Log level (DEBUG, INFO, WARNING, ERROR)
        """
        level = level.upper()
        if not self.is_enabled_for(level):
            return

        timestamp = datetime.now().strftime("%H:%M:%S")
        formatted = f"[{timestamp}] [{level}] {message}"

        self._messages.append(formatted)
        if len(self._messages) > self._max_messages:
            del self._messages[:-self._max_messages]

        print(formatted, file=self._stream or sys.stderr)

        if self._callback:
            self._callback(formatted)

    def debug(self, message: str):
        """Log debug message."""
        self.log(message, "DEBUG")

    def info(self, message: str):
        """Log info message."""
        self.log(message, "INFO")

    def warning(self, message: str):
        """Log warning message."""
        self.log(message, "WARNING")

    def error(self, message: str):
        """Log error message."""
        self.log(message, "ERROR")

    def get_messages(self, count: int = 100) -> list:
        """Get recent log messages."""
        return self._messages[-count:]

    def clear(self):
        """Clear log messages."""
        self._messages = []


_default: Optional[Logger] = None


def default_logger() -> Logger:
    """Shared library logger; only warnings and errors are emitted."""
    global _default
    if _default is None:
        _default = Logger(min_level="WARNING")
    return _default
