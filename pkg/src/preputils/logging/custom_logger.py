import logging
from typing import Type

from preputils.logging.log_level import LogLevel

_BaseLogger: Type[logging.Logger] = logging.getLoggerClass()
_BaseRecord: Type[logging.LogRecord] = logging.getLogRecordFactory()  # pyre-ignore


class CustomLogRecord(_BaseRecord):
    """
    Messages use "{}" placeholders; arguments are applied with `str.format` only when the record is emitted.
    """

    def getMessage(self):
        if not self.args:
            return str(self.msg)
        return str(self.msg).format(*self.args)


class CustomLogger(_BaseLogger):

    def fatal(self, msg, *args, exc_info=True, **kwargs):
        """
        Logs at FATAL with the active exception attached unless `exc_info` is False.
        """
        self._log_enabled(LogLevel.FATAL, msg, args, exc_info=exc_info, **kwargs)

    def stats(self, msg, *args, **kwargs):
        self._log_enabled(LogLevel.STATS, msg, args, **kwargs)

    def trace(self, msg, *args, **kwargs):
        self._log_enabled(LogLevel.TRACE, msg, args, **kwargs)

    def _log_enabled(self, level: LogLevel, msg, args, **kwargs):
        if self.isEnabledFor(level):
            self._log(level, msg, args, **kwargs)


def install() -> None:
    logging.setLogRecordFactory(CustomLogRecord)  # pyre-ignore
    logging.setLoggerClass(CustomLogger)
