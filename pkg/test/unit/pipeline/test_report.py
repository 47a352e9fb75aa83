import os

from prepocr import constants
from prepocr.alignment import error_rates
from prepocr.exceptions import ConfigError
from prepocr.models.config.fusion_config_model import FusionConfigModel
from prepocr.models.config.pipeline_config_model import PipelineConfigModel
from prepocr.models.page_eval import PageEval
from prepocr.models.pipeline_report import PipelineReport
from prepocr.models.stage_summary import StageSummary
from prepocr.pipeline import pages, pipeline_runner, report
from prepocr.test_utils import helpers
from prepocr.test_utils.abstract_test_case import AbstractTestCase


def read_bytes(path: str) -> bytes:
    with open(path, "rb") as artifact:
        return artifact.read()


class ReportTest(AbstractTestCase):

    def test_render_text(self):
        evals = [PageEval("a", 0.1, 0.2, 10), PageEval("b", 0.5, 0.6, 10, outlier=True)]
        pipeline_report = PipelineReport(
            page_count=3,
            partial_pages=["c"],
            outlier_threshold=0.25,
            engine="mock(lambda=0.0)",
            restorer="identity",
            corrector="",
            stages=[StageSummary("raw", report.STAGE_LABELS["raw"], 3, ["c"], error_rates.summarize(evals, 0.25))],
            amp={"raw": {"full": 20.0}, "pre": {"full": 25.5, "central-192": 26.0}},
            amp_pair_count=2,
            notes=[constants.MOCK_ENGINE_NOTE],
        )
        text = report.render_text(pipeline_report)

        self.assertIn("30.00 (10.00)", text)
        self.assertIn("40.00 (20.00)", text)
        self.assertIn("partial pages: c", text)
        self.assertIn("restored   full 25.50  central-192 26.00  central-128 n/a", text)
        self.assertIn("note: " + constants.MOCK_ENGINE_NOTE, text)
        self.assertTrue(text.endswith("\n"))

    def test_empty_stage_renders_not_available(self):
        pipeline_report = PipelineReport(
            page_count=1, partial_pages=["a"], outlier_threshold=0.25, engine="exec:ocr", restorer="otsu",
            corrector="", stages=[StageSummary("pre", "restore + OCR", 0, ["a"], error_rates.summarize([], 0.25))],
            amp={}, amp_pair_count=0, notes=[],
        )
        row = [line for line in report.render_text(pipeline_report).split("\n") if line.startswith("pre ")][0]

        self.assertEqual(["pre", "n/a", "n/a", "0", "0", "1", "restore", "+", "OCR"], row.split())

    def test_regenerate_reports_from_manifest(self):
        input_dir = self.make_temp_dir()
        output_dir = self.make_temp_dir()
        page_inputs = pages.load_pages(helpers.write_pages_manifest(input_dir, helpers.sample_sentences()[:2]))
        pipeline_runner.run_pipeline(page_inputs, PipelineConfigModel(fusion=FusionConfigModel(patch_size=64, trim=0)),
                                     output_dir)
        report_paths = [os.path.join(output_dir, name) for name in (constants.REPORT_JSON_FILE,
                                                                      constants.REPORT_TEXT_FILE)]
        written = [read_bytes(path) for path in report_paths]
        for path in report_paths:
            os.remove(path)

        regenerated = report.regenerate_reports(output_dir)

        self.assertEqual(written, [read_bytes(path) for path in report_paths])
        self.assertEqual(2, regenerated.page_count)
        self.assertIn(constants.MOCK_ENGINE_NOTE, regenerated.notes)

        manifest = report.load_manifest(output_dir)
        os.remove(os.path.join(output_dir, manifest.pages[0].texts[constants.STAGE_RAW]))
        self.assertEqual([manifest.pages[0].texts[constants.STAGE_RAW]], report.missing_artifacts(manifest, output_dir))
        with self.assertRaises(ConfigError):
            report.regenerate_reports(output_dir)

    def test_missing_manifest(self):
        with self.assertRaises(ConfigError):
            report.regenerate_reports(self.make_temp_dir())
