from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from prepocr.models.config.pipeline_config_model import PipelineConfigModel
from prepocr.models.page_eval import PageEval
from prepocr.models.page_record import PageRecord
from prepocr.models.run_manifest import RunManifest
from prepocr.models.scan_direction import ScanDirection
from prepocr.test_utils.abstract_test_case import AbstractTestCase
from prepocr.utils import json_utils, model_loader


@dataclass
class Nested:
    direction: ScanDirection
    span: Tuple[int, int] = (0, 0)
    values: List[float] = field(default_factory=list)
    lookup: Dict[str, int] = field(default_factory=dict)
    note: Optional[str] = None


class ModelLoaderTest(AbstractTestCase):

    def test_load_nested_types(self):
        loaded = model_loader.load_model(Nested, {
            "direction": "tr-bl", "span": [3, 9], "values": [1, 2.5], "lookup": {"a": "4"}, "future": True,
        })

        self.assertEqual(ScanDirection.TR_BL, loaded.direction)
        self.assertEqual((3, 9), loaded.span)
        self.assertEqual([1.0, 2.5], loaded.values)
        self.assertIsInstance(loaded.values[0], float)
        self.assertEqual({"a": 4}, loaded.lookup)
        self.assertIsNone(loaded.note)

    def test_config_defaults_fill_missing_keys(self):
        config = model_loader.load_model_from_json(PipelineConfigModel, '{"version": 1, "fusion": {"trim": 32}}')

        self.assertEqual(32, config.fusion.trim)
        self.assertEqual(PipelineConfigModel().fusion.patch_size, config.fusion.patch_size)
        self.assertEqual(PipelineConfigModel().engine, config.engine)

    def test_manifest_reloads_equal(self):
        record = PageRecord("p1", "/in/p1.png", gt_source="gt_text", texts={"raw": "pages/p1/raw.txt"},
                            evals={"raw": PageEval("p1", 0.5, 1.0, 10, unmatched_spans=[(0, 3)])},
                            errors={"pre": "restoration: broken"})
        manifest = RunManifest(engine="mock(lambda=0.0)", restorer="identity", fusion="multi/median/trim 64",
                               corrector="", outlier_threshold=0.25, seed=0, stages=["raw", "pre"], pages=[record],
                               amp={"raw": {"full": 30.0}}, amp_pair_count=1)

        reloaded = model_loader.load_model_from_json(RunManifest, json_utils.serialize(manifest))

        self.assertEqual(manifest, reloaded)

    def test_rejects_non_models(self):
        with self.assertRaises(TypeError):
            model_loader.load_model(dict, {})
        with self.assertRaises(TypeError):
            model_loader.load_model(Nested, ["tr-bl"])
