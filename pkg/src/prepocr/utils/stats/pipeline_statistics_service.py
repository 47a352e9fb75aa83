import threading
import time
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Any, Dict

import psutil

from prepocr import constants
from prepocr.utils.stats.statistics_service import StatisticsService, StatsIntervalData
from preputils import logging
from preputils.logging.log_record_type import LogRecordType


@dataclass
class StageStats:
    pages: int = 0
    failures: int = 0
    elapsed_s: float = 0.0


@dataclass
class PipelineStatsIntervalData(StatsIntervalData):
    stages: Dict[str, StageStats] = field(default_factory=lambda: defaultdict(StageStats))


class PipelineStatisticsService(StatisticsService):
    """
    Per-stage page counts, failures and wall time, plus the process resident memory.
    Safe to update from pool workers.
    """
    INTERVAL_DATA_CLASS = PipelineStatsIntervalData

    def __init__(self, name: str = "PipelineStats", record_type: LogRecordType = LogRecordType.PipelineStats):
        self._lock = threading.Lock()
        super(PipelineStatisticsService, self).__init__(name, logging.get_logger(record_type), look_back=5)

    def add_stage_result(self, stage: str, started_at: float, succeeded: bool = True) -> None:
        with self._lock:
            stage_stats = self.interval_data.stages[stage]
            stage_stats.pages += 1
            stage_stats.elapsed_s += time.time() - started_at
            if not succeeded:
                stage_stats.failures += 1

    def get_info(self) -> Dict[str, Any]:
        with self._lock:
            stages = {
                stage: {
                    "pages": stage_stats.pages,
                    "failures": stage_stats.failures,
                    "elapsed_s": round(stage_stats.elapsed_s, 3),
                }
                for stage, stage_stats in sorted(self.interval_data.stages.items())
            }
        end_time = self.interval_data.end_time or time.time()
        return {
            "stages": stages,
            "duration_s": round(end_time - self.interval_data.start_time, 3),
            "rss_mb": round(psutil.Process().memory_info().rss / constants.STATS_MEMORY_UNIT, 1),
        }


pipeline_statistics = PipelineStatisticsService()
restoration_statistics = PipelineStatisticsService("RestorationStats", LogRecordType.RestorationStats)
synthesis_statistics = PipelineStatisticsService("SynthesisStats", LogRecordType.SynthesisStats)
