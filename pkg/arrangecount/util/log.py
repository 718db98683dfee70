"""Logger setup shared by every ArrangeCount module"""
import logging
import time
from typing import Optional, Union


class ElapsedTimeFilter(logging.Filter):
    """Adds the wall-clock seconds since logging was set up as ``elapsed``."""

    def __init__(self, start: float) -> None:
        super().__init__()
        self._start = start

    def filter(self, record):
        record.elapsed = time.perf_counter() - self._start
        return True


class LogManager:
    """
    Class for setting up and obtaining a logger that has been setup for ArrangeCount
    use.
    The logger writes to stderr and includes the elapsed run time for each message,
    so that payloads on stdout are never interleaved with diagnostics.
    """

    ROOT_LOGGER = "ArrangeCount"
    FORMAT = "%(levelname)s:%(elapsed).3fs:%(name)s:%(message)s"
    _LOGGER_HAS_BEEN_SETUP = False
    _START: float = 0.0

    @classmethod
    def _setup_root_logger(cls) -> None:
        cls._START = time.perf_counter()
        logger = logging.getLogger(cls.ROOT_LOGGER)
        syslog = logging.StreamHandler()
        syslog.setFormatter(logging.Formatter(cls.FORMAT))
        syslog.addFilter(ElapsedTimeFilter(cls._START))
        logger.addHandler(syslog)
        logger.setLevel(logging.WARNING)
        logger.propagate = False
        cls._LOGGER_HAS_BEEN_SETUP = True

    @classmethod
    def get_logger(cls, sub_logger: Optional[str] = None) -> logging.Logger:
        """Obtain the ArrangeCount logger.

        :param sub_logger: If used, it will return a child logger of the main logger
        :return: The ArrangeCount logger
        """
        if not cls._LOGGER_HAS_BEEN_SETUP:
            cls._setup_root_logger()
        logger = logging.getLogger(cls.ROOT_LOGGER)
        if sub_logger is None:
            return logger
        else:
            return logger.getChild(sub_logger)

    @classmethod
    def set_log_level(cls, level: Union[int, str]) -> None:
        """
        Sets the log level of the ArrangeCount logger.
        """
        logger = cls.get_logger()
        logger.setLevel(level)

    @classmethod
    def get_log_level(cls) -> int:
        """Get the log level of the ArrangeCount logger."""
        return cls.get_logger().level

    @classmethod
    def log_to_file(cls, path: str) -> None:
        """Sets up sending the logs to an output file. Does not affect other log
        output methods.

        :param path: Location of output file. Overwrites existing file.
        """
        logger = cls.get_logger()
        file_handler = logging.FileHandler(path, mode="w")
        file_handler.setFormatter(logging.Formatter(cls.FORMAT))
        file_handler.addFilter(ElapsedTimeFilter(cls._START))
        logger.addHandler(file_handler)
