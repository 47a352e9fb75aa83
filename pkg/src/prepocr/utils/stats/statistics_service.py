import time
from abc import ABCMeta, abstractmethod
from collections import deque
from dataclasses import dataclass
from typing import Any, Deque, Dict, Optional

from preputils import logging
from preputils.logging.custom_logger import CustomLogger
from preputils.logging.log_level import LogLevel


@dataclass
class StatsIntervalData:
    start_time: float
    end_time: Optional[float] = None


class StatisticsService(metaclass=ABCMeta):
    """
    Collects measurements over an interval and logs them as one `{"type": name, "data": ...}` record when flushed.

    Statistics only ever reach the log; run reports stay free of timings so they remain reproducible.
    """

    INTERVAL_DATA_CLASS = StatsIntervalData

    def __init__(self, name: str, stats_logger: CustomLogger, look_back: int = 1, reset: bool = True,
                 log_level: LogLevel = LogLevel.STATS):
        self.name = name
        self.logger = stats_logger
        self.log_level = log_level
        self.reset = reset
        # closed intervals, most recent last
        self.history: Deque[StatsIntervalData] = deque(maxlen=look_back)
        self.interval_data = self.INTERVAL_DATA_CLASS(time.time())

    @abstractmethod
    def get_info(self) -> Dict[str, Any]:
        pass

    def flush_info(self) -> Dict[str, Any]:
        self.interval_data.end_time = time.time()
        self.history.append(self.interval_data)
        info = self.get_info()
        self.logger.log(self.log_level, {"type": self.name, "data": info})
        if self.reset:
            self.interval_data = self.INTERVAL_DATA_CLASS(time.time())
        return info
