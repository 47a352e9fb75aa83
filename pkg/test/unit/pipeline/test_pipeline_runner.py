import os

from prepocr import constants
from prepocr.correction import char_lm
from prepocr.exceptions import ConfigError
from prepocr.models.config.corrector_config_model import CorrectorConfigModel
from prepocr.models.config.engine_config_model import EngineConfigModel
from prepocr.models.config.fusion_config_model import FusionConfigModel
from prepocr.models.config.pipeline_config_model import PipelineConfigModel
from prepocr.models.error_model import ErrorModel
from prepocr.models.page_input import PageInput
from prepocr.ocrnoise import error_model_io
from prepocr.pipeline import pages, pipeline_runner
from prepocr.test_utils import helpers
from prepocr.test_utils.abstract_test_case import AbstractTestCase
from prepocr.utils import text_files
from prepocr.utils.proxy import task_pool_proxy

CHANNEL = ErrorModel({"e": {"c": 0.05}, "h": {"b": 0.05}, "t": {"l": 0.03}})


def read_bytes(path: str) -> bytes:
    with open(path, "rb") as artifact:
        return artifact.read()


class PipelineRunnerTest(AbstractTestCase):

    def setUp(self):
        self.input_dir = self.make_temp_dir()
        self.texts = helpers.sample_sentences()[:4]
        self.pages = pages.load_pages(helpers.write_pages_manifest(self.input_dir, self.texts))

    def _config(self, **kwargs) -> PipelineConfigModel:
        kwargs.setdefault("fusion", FusionConfigModel(patch_size=64, trim=0))
        return PipelineConfigModel(**kwargs)

    def test_identity_run_is_error_free(self):
        output_dir = self.make_temp_dir()
        manifest = pipeline_runner.run_pipeline(self.pages, self._config(), output_dir)

        self.assertEqual([constants.STAGE_RAW, constants.STAGE_PRE], manifest.stages)
        self.assertEqual([page.page_id for page in self.pages], [record.page_id for record in manifest.pages])
        for record in manifest.pages:
            self.assertFalse(record.is_partial(), record.errors)
            self.assertFalse(record.book_level)
            for stage in manifest.stages:
                self.assertEqual(0.0, record.evals[stage].cer)
                self.assertEqual(0.0, record.evals[stage].wer)
                self.assertTrue(os.path.isfile(os.path.join(output_dir, record.texts[stage])))
            self.assertTrue(os.path.isfile(os.path.join(output_dir, record.restored)))

        self.assertEqual(len(self.pages), manifest.amp_pair_count)
        for amp_set in (pipeline_runner.AMP_RAW, pipeline_runner.AMP_PRE):
            self.assertAlmostEqual(constants.AMP_ZERO_ERROR_DB, manifest.amp[amp_set]["full"])
        for name in (constants.RUN_MANIFEST_FILE, constants.REPORT_JSON_FILE, constants.REPORT_TEXT_FILE):
            self.assertTrue(os.path.isfile(os.path.join(output_dir, name)))

    def test_failures_stay_on_their_page(self):
        broken = [
            PageInput("missing-image", os.path.join(self.input_dir, "absent.png"), gt_text="some text"),
            PageInput("no-gt", self.pages[0].image),
        ]
        output_dir = self.make_temp_dir()
        manifest = pipeline_runner.run_pipeline(self.pages + broken, self._config(), output_dir)
        records = {record.page_id: record for record in manifest.pages}

        missing_image = records["missing-image"]
        self.assertIn(constants.STAGE_RAW, missing_image.texts)
        self.assertIn("restoration", missing_image.errors[constants.STAGE_PRE])
        self.assertIsNone(missing_image.restored)
        self.assertEqual(0.0, missing_image.evals[constants.STAGE_RAW].cer)

        no_gt = records["no-gt"]
        self.assertIn(constants.STAGE_RAW, no_gt.errors)
        self.assertIn(constants.STAGE_PRE, no_gt.errors)
        self.assertEqual({}, no_gt.evals)

        for page in self.pages:
            self.assertFalse(records[page.page_id].is_partial())
        self.assertEqual(len(self.pages), manifest.amp_pair_count)

    def test_manifest_and_reports_independent_of_pool_size(self):
        config = self._config(engine=EngineConfigModel(error_model=self._save_channel(), rate_lambda=2.0), seed=5)
        first_dir = self.make_temp_dir()
        pipeline_runner.run_pipeline(self.pages, config, first_dir)
        task_pool_proxy.init(3)
        second_dir = self.make_temp_dir()
        pipeline_runner.run_pipeline(self.pages, config, second_dir)

        for name in (constants.RUN_MANIFEST_FILE, constants.REPORT_JSON_FILE, constants.REPORT_TEXT_FILE):
            self.assertEqual(read_bytes(os.path.join(first_dir, name)), read_bytes(os.path.join(second_dir, name)),
                             name)

    def test_mock_errors_are_measured(self):
        config = self._config(engine=EngineConfigModel(error_model=self._save_channel(), rate_lambda=3.0))
        manifest = pipeline_runner.run_pipeline(self.pages, config, self.make_temp_dir())

        raw_cers = [record.evals[constants.STAGE_RAW].cer for record in manifest.pages]
        pre_cers = [record.evals[constants.STAGE_PRE].cer for record in manifest.pages]
        self.assertGreater(sum(raw_cers), 0.0)
        self.assertEqual(raw_cers, pre_cers)

    def test_corrector_adds_prep_stage(self):
        lm_path = os.path.join(self.input_dir, "model.charlm")
        char_lm.save_char_lm(char_lm.train_char_lm(helpers.SAMPLE_CORPUS * 3, order=4), lm_path)
        config = self._config(
            engine=EngineConfigModel(error_model=self._save_channel(), rate_lambda=2.0),
            corrector=CorrectorConfigModel(enabled=True, lm=lm_path, channel=self._save_channel()),
        )
        output_dir = self.make_temp_dir()
        manifest = pipeline_runner.run_pipeline(self.pages, config, output_dir)

        self.assertEqual(list(constants.PIPELINE_STAGES), manifest.stages)
        self.assertEqual(constants.REFERENCE_CORRECTOR_LABEL, manifest.corrector)
        for record, text in zip(manifest.pages, self.texts):
            prep_text = text_files.read_text(os.path.join(output_dir, record.texts[constants.STAGE_PREP]))
            self.assertEqual(text.count("\n"), prep_text.count("\n"))
            self.assertIn(constants.STAGE_PREP, record.evals)

    def test_invalid_configs(self):
        output_dir = self.make_temp_dir()
        invalid = [
            self._config(version=2),
            self._config(outlier_threshold=-0.1),
            self._config(fusion=FusionConfigModel(trim=16)),
            self._config(corrector=CorrectorConfigModel(enabled=True, lm="model.charlm")),
            self._config(restorer="no-such-restorer"),
        ]
        for config in invalid:
            with self.assertRaises(ConfigError, msg=str(config)):
                pipeline_runner.run_pipeline(self.pages, config, output_dir)
        with self.assertRaises(ConfigError):
            pipeline_runner.run_pipeline([], self._config(), output_dir)
        with self.assertRaises(ConfigError):
            pipeline_runner.run_pipeline(self.pages, self._config())

    def _save_channel(self) -> str:
        path = os.path.join(self.input_dir, "channel.json")
        error_model_io.save_error_model(CHANNEL, path)
        return path
