import json
import logging
import os
from datetime import datetime, timezone
from enum import Enum
from logging import Formatter
from typing import Any, Dict, Optional

from preputils.encoding.json_encoder import EnhancedJSONEncoder

# attributes every LogRecord carries; anything else on a record came in through `extra=`
_RECORD_ATTRS = frozenset(vars(logging.LogRecord("", 0, "", 0, "", (), None))) | {"message", "asctime", "taskName"}


class LogFormat(Enum):
    JSON = "JSON"
    PLAIN = "PLAIN"

    def __str__(self):
        return self.name


class AbstractFormatter(Formatter):
    """
    Renders `extra` fields of a record next to its message and prefixes records with the running verb
    once `run_label` is set.
    """

    def __init__(self, fmt: Optional[str] = None, run_label: Optional[str] = None):
        super().__init__(fmt=fmt)
        self.run_label = run_label

    @staticmethod
    def extra_fields(record: logging.LogRecord) -> Dict[str, Any]:
        return {key: value for key, value in vars(record).items() if key not in _RECORD_ATTRS}

    @staticmethod
    def payload(record: logging.LogRecord) -> Any:
        # statistics services log dicts; those pass through unformatted
        if isinstance(record.msg, dict):
            return record.msg
        return record.getMessage()


class JSONFormatter(AbstractFormatter):
    """
    One JSON document per record.
    """

    def format(self, record: logging.LogRecord) -> str:
        document = self.extra_fields(record)
        document.update({
            "timestamp": datetime.fromtimestamp(record.created, timezone.utc).isoformat(),
            "pid": os.getpid(),
            "thread": record.threadName,
            "name": record.name,
            "level": record.levelname,
            "msg": self.payload(record),
        })
        if record.exc_info:
            document["exc_info"] = self.formatException(record.exc_info)
        if self.run_label:
            document["run"] = self.run_label
        return json.dumps(document, cls=EnhancedJSONEncoder)


class PlainFormatter(AbstractFormatter):
    """
    Single-line text records; several handlers may format the same record, so the record itself is never modified.
    """
    encoder = EnhancedJSONEncoder()

    def format(self, record: logging.LogRecord) -> str:
        message = self.payload(record)
        if not isinstance(message, str):
            message = self.encoder.encode(message)
        for key, value in sorted(self.extra_fields(record).items()):
            message += " {}={}".format(key, self.encoder.encode(value))
        if self.run_label:
            message = "[{}] {}".format(self.run_label, message)
        rendered = logging.makeLogRecord(vars(record))
        rendered.msg = message
        rendered.args = ()
        return super(PlainFormatter, self).format(rendered)

    def formatTime(self, record: logging.LogRecord, datefmt: Optional[str] = None) -> str:
        created = datetime.fromtimestamp(record.created)
        return created.strftime(datefmt) if datefmt else created.isoformat()
