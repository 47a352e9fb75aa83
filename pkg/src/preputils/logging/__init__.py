import logging
import typing
from typing import Optional, Union

from preputils.logging import custom_logger
from preputils.logging.custom_logger import CustomLogger
from preputils.logging.log_record_type import LogRecordType

custom_logger.install()


def get_logger(name: Optional[Union[str, LogRecordType]] = None) -> CustomLogger:
    """
    Module loggers pass `__name__`; statistics services pass their `LogRecordType` stream.
    """
    return typing.cast(CustomLogger, logging.getLogger(name.value if isinstance(name, LogRecordType) else name))
