import logging
from enum import IntEnum


class LogLevel(IntEnum):
    """
    Standard levels plus STATS, between INFO and WARNING so stage statistics survive a quiet run,
    and TRACE, below DEBUG, for per-patch and per-beam detail.
    """
    CRITICAL = logging.CRITICAL
    FATAL = CRITICAL
    ERROR = logging.ERROR
    WARNING = logging.WARNING
    WARN = WARNING
    STATS = 25
    INFO = logging.INFO
    DEBUG = logging.DEBUG
    TRACE = 5
    NOTSET = logging.NOTSET

    def __str__(self):
        return self.name


for _custom in (LogLevel.STATS, LogLevel.TRACE):
    logging.addLevelName(_custom, _custom.name)


def from_string(level: str) -> LogLevel:
    """
    Case-insensitive level name or numeric value; raises KeyError for anything else.
    """
    level = level.strip()
    if level.isdigit():
        return LogLevel(int(level))
    return LogLevel[level.upper()]
