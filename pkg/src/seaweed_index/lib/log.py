"""
Application logging.
"""

import logging
from datetime import datetime
from pathlib import Path
from typing import Optional

from seaweed_index.lib.constants import APP_NAME, LOG_DIR, LOG_FORMAT


class AppLogger:
    @staticmethod
    def get_instance():
        if not hasattr(AppLogger, "_instance"):
            AppLogger._instance = AppLogger()
        return AppLogger._instance

    def __init__(self):
        if hasattr(AppLogger, "_instance"):
            raise Exception("This class is a singleton! Use get_instance() instead.")

        # Create logger
        self._logger = logging.getLogger(APP_NAME)
        self._logger.setLevel(logging.DEBUG)

        # Create formatter
        self._formatter = logging.Formatter(LOG_FORMAT)

        # Create stream handler (standard error)
        self._stream_handler = logging.StreamHandler()
        self._stream_handler.setLevel(logging.WARN)
        self._stream_handler.setFormatter(self._formatter)
        self._logger.addHandler(self._stream_handler)

        # File handler is opt-in
        self._file_handler: Optional[logging.FileHandler] = None

    @property
    def logger(self):
        return self._logger

    def set_stream_level(self, level):
        self._stream_handler.setLevel(level)

    def set_file_level(self, level):
        if self._file_handler is not None:
            self._file_handler.setLevel(level)

    def add_file_handler(self, path: Optional[Path] = None) -> Path:
        """
        Start logging to a file. Without a path, a dated file in the user log directory is used.

        Args:
            path: The log file path.

        Returns:
            The path being logged to.
        """
        if path is None:
            LOG_DIR.mkdir(parents=True, exist_ok=True)
            path = LOG_DIR / (datetime.now().strftime("%Y-%m-%d") + ".txt")

        self.remove_file_handler()
        self._file_handler = logging.FileHandler(str(path))
        self._file_handler.setLevel(logging.DEBUG)
        self._file_handler.setFormatter(self._formatter)
        self._logger.addHandler(self._file_handler)
        return Path(path)

    def remove_file_handler(self):
        """
        Stop logging to the current file, if any, and close it.
        """
        if self._file_handler is None:
            return
        self._logger.removeHandler(self._file_handler)
        self._file_handler.close()
        self._file_handler = None


LOGGER = AppLogger.get_instance().logger
