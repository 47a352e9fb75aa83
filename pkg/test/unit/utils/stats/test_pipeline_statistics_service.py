import time

from prepocr.test_utils.abstract_test_case import AbstractTestCase
from prepocr.utils.stats.pipeline_statistics_service import PipelineStatisticsService


class PipelineStatisticsServiceTest(AbstractTestCase):

    def setUp(self):
        self.service = PipelineStatisticsService("TestStats")

    def test_stage_results_counted(self):
        started_at = time.time()
        self.service.add_stage_result("raw", started_at)
        self.service.add_stage_result("raw", started_at, succeeded=False)
        self.service.add_stage_result("pre", started_at)

        info = self.service.get_info()

        self.assertEqual(["pre", "raw"], list(info["stages"]))
        self.assertEqual(2, info["stages"]["raw"]["pages"])
        self.assertEqual(1, info["stages"]["raw"]["failures"])
        self.assertEqual(0, info["stages"]["pre"]["failures"])
        self.assertGreaterEqual(info["stages"]["raw"]["elapsed_s"], 0.0)
        self.assertGreater(info["rss_mb"], 0.0)

    def test_flush_starts_new_interval(self):
        self.service.add_stage_result("restore", time.time())

        flushed = self.service.flush_info()

        self.assertEqual(1, flushed["stages"]["restore"]["pages"])
        self.assertEqual({}, self.service.get_info()["stages"])
        self.assertEqual(1, len(self.service.history))
