# coding=utf-8
# Copyright (c) dppf contributors
"""Logging setup. Standard out carries reports and records, so log lines go to standard error."""
from __future__ import annotations

import datetime
import logging
import pathlib
import sys

from dppf.types import PathLike

# Indexed by the number of -v flags, saturating at the last entry.
VERBOSITY_LEVELS = ("WARNING", "INFO", "DEBUG")
LOG_LEVELS = (*VERBOSITY_LEVELS, "ERROR")
LOG_FORMAT = "[%(asctime)s | %(name)s | %(levelname)s] - %(message)s"


def setup_logging(
    filename: pathlib.Path | None = None, log_level: str = "INFO", formatter_str: str = LOG_FORMAT
) -> None:
    """
    Attach a standard error handler, and optionally a file handler, to the root logger.

    Parameters
    ----------
    filename : pathlib.Path, optional
        Log file; its parent directory is created when missing.
    log_level : str
        One of ``LOG_LEVELS``.
    formatter_str : str
        Format of every log line.
    """
    if log_level not in LOG_LEVELS:
        raise ValueError(f"Unexpected log level got {log_level}.")

    logging.captureWarnings(True)
    level = getattr(logging, log_level)
    formatter = logging.Formatter(formatter_str)

    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if filename:
        filename.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(filename))

    root = logging.getLogger("")
    root.setLevel(level)
    for handler in handlers:
        handler.setLevel(level)
        handler.setFormatter(formatter)
        root.addHandler(handler)


def build_cli_logger(name: str, log_to_file: bool, verbosity_level: int, log_directory: PathLike = ".") -> None:
    """
    Logging for one ``dppf`` invocation.

    The log file, when requested, is ``<log_directory>/<timestamp>_<name>.log``.
    """
    stamp = datetime.datetime.now().strftime("%Y%m%d_%H%M%S")
    log_filename = pathlib.Path(log_directory) / f"{stamp}_{name}.log"
    log_level = VERBOSITY_LEVELS[min(len(VERBOSITY_LEVELS) - 1, verbosity_level)]
    setup_logging(filename=log_filename if log_to_file else None, log_level=log_level)
    logging.getLogger(__name__).info("Logging for '%s' at level %s.", name, log_level)
