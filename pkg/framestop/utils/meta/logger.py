import logging
import os
import sys
from collections import OrderedDict

from .env_var import is_debug_mode


logger_initialized = OrderedDict()


class CustomFormatter(logging.Formatter):

    grey = "\x1b[38;21m"
    yellow = "\x1b[33;21m"
    red = "\x1b[31;21m"
    bold_red = "\x1b[31;1m"
    reset = "\x1b[0m"
    format = "%(name)s - (%(filename)s:%(lineno)d) - %(levelname)s - %(asctime)s - %(message)s"

    FORMATS = {
        logging.DEBUG: grey + format + reset,
        logging.INFO: grey + format + reset,
        logging.WARNING: yellow + format + reset,
        logging.ERROR: red + format + reset,
        logging.CRITICAL: bold_red + format + reset,
    }

    def format(self, record):
        log_fmt = self.FORMATS.get(record.levelno)
        formatter = logging.Formatter(log_fmt, datefmt="%Y-%m-%d,%H:%M:%S")
        return formatter.format(record)


def get_logger_name():
    return os.environ.get("FRAMESTOP_LOGGER_NAME", "framestop")


def get_logger(name=None, with_stream=True, log_file=None, log_level=logging.INFO):
    """Initialize and get a logger by name.

    The first call for a name attaches a stream handler (stderr) and, when `log_file` is given, a file handler.
    Later calls return the configured logger. Children of an initialized logger ("framestop.loop" under
    "framestop") share the level of their parent and skip initialization.

    Args:
        name (str | None): Logger name, defaults to `get_logger_name()`.
        with_stream (bool): Attach a stderr handler.
        log_file (str | None): Optional log filename.
        log_level (int | str): Level of the logger. Debug mode forces DEBUG.
    Returns:
        logging.Logger: The expected logger.
    """
    if name is None:
        name = get_logger_name()

    logger = logging.getLogger(name)
    for logger_name, logger_level in logger_initialized.items():
        if name == logger_name or name.startswith(logger_name + "."):
            return logger

    logger.propagate = False
    logger.handlers = []

    if with_stream:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(CustomFormatter())
        logger.addHandler(handler)

    if log_file is not None:
        file_handler = logging.FileHandler(log_file, "w")
        log_fmt = "%(name)s - (%(filename)s:%(lineno)d) - %(levelname)s - %(asctime)s - %(message)s"
        file_handler.setFormatter(logging.Formatter(log_fmt, datefmt="%Y-%m-%d,%H:%M:%S"))
        logger.addHandler(file_handler)

    if is_debug_mode():
        log_level = logging.DEBUG
    logger.setLevel(log_level)
    logger_initialized[name] = log_level
    return logger

