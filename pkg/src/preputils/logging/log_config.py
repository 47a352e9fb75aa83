import logging
import sys
from logging import FileHandler, Handler, StreamHandler
from typing import Dict, List, Optional, Union

from preputils import constants
from preputils.logging import log_level
from preputils.logging.log_format import AbstractFormatter, JSONFormatter, LogFormat, PlainFormatter
from preputils.logging.log_level import LogLevel

logger = logging.getLogger(__name__)


def make_formatter(log_format: LogFormat, level: int = constants.DEFAULT_LOG_LEVEL) -> AbstractFormatter:
    if log_format == LogFormat.JSON:
        return JSONFormatter()
    if log_format == LogFormat.PLAIN:
        pattern = constants.DEBUG_LOG_FORMAT_PATTERN if level <= LogLevel.DEBUG else constants.INFO_LOG_FORMAT_PATTERN
        return PlainFormatter(fmt=pattern)
    raise ValueError("Unknown log format: {}".format(log_format))


def create_logger(
        global_logger_name: Optional[str],
        level: int = constants.DEFAULT_LOG_LEVEL,
        log_format: LogFormat = constants.DEFAULT_LOG_FORMAT,
) -> None:
    """
    Replaces the handlers of `global_logger_name` (None: the root logger) with one stderr handler.
    Stdout stays reserved for command output such as `inject` writing text.
    """
    handler = StreamHandler(sys.stderr)
    handler.setFormatter(make_formatter(log_format, level))
    target = logging.getLogger(global_logger_name)
    target.propagate = False
    target.handlers = [handler]
    target.setLevel(level)


def attach_run_log(path: str, log_format: LogFormat = constants.DEFAULT_LOG_FORMAT) -> Handler:
    """
    Copies every record reaching the root logger into `path` as well, in the detailed format.
    """
    handler = FileHandler(path, encoding="utf-8")
    handler.setFormatter(make_formatter(log_format, LogLevel.DEBUG))
    logging.getLogger().addHandler(handler)
    return handler


def detach_run_log(handler: Handler) -> None:
    logging.getLogger().removeHandler(handler)
    handler.close()


def set_run_label(run_label: Optional[str]) -> None:
    for handler in logging.getLogger().handlers:
        if isinstance(handler.formatter, AbstractFormatter):
            handler.formatter.run_label = run_label


def set_level(logger_names: List[Optional[str]], level: LogLevel) -> None:
    for logger_name in logger_names:
        logging.getLogger(logger_name).setLevel(level)


def set_log_levels(levels: Dict[str, Union[LogLevel, str]]) -> None:
    for name, level in levels.items():
        try:
            logging.getLogger(name).setLevel(log_level.from_string(level) if isinstance(level, str) else level)
        except (KeyError, ValueError):
            logger.error("Ignoring invalid log level {!r} for {}", level, name)


def str_to_log_options(value: str) -> Dict[str, LogLevel]:
    """
    Parses `name=LEVEL,name=LEVEL` into a level per logger name.
    """
    options = {}
    for pair in filter(None, (item.strip() for item in (value or "").split(","))):
        name, level = pair.split("=", 1)
        try:
            options[name.strip()] = log_level.from_string(level)
        except KeyError:
            raise ValueError("unknown log level {!r} for {}".format(level, name))
    return options


def setup_logging(
        log_format: LogFormat,
        default_log_level: LogLevel,
        default_logger_names: List[str],
        log_level_overrides: Dict[str, LogLevel],
        root_log_level: LogLevel = LogLevel.WARNING,
        run_label: Optional[str] = None,
) -> None:
    """
    Root handler at `root_log_level` for third-party libraries; the named loggers get `default_log_level`
    unless overridden. `run_label` (the verb) prefixes every record.
    """
    create_logger(None, level=root_log_level, log_format=log_format)
    levels: Dict[str, Union[LogLevel, str]] = {name: default_log_level for name in default_logger_names}
    levels.update(log_level_overrides)
    set_log_levels(levels)
    set_run_label(run_label)
