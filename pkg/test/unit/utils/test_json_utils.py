import os
from dataclasses import dataclass, field
from typing import Dict, Optional

from prepocr.models.fusion_method import FusionMethod
from prepocr.test_utils.abstract_test_case import AbstractTestCase
from prepocr.utils import json_utils


@dataclass
class Sample:
    name: str
    method: FusionMethod = FusionMethod.MEDIAN
    weights: Dict[str, float] = field(default_factory=dict)
    note: Optional[str] = None


class JsonUtilsTest(AbstractTestCase):

    def test_serialize_sorts_keys(self):
        serialized = json_utils.serialize(Sample("é", weights={"b": 1.0, "a": 0.5}))

        self.assertEqual('{"method": "median", "name": "é", "note": null, "weights": {"a": 0.5, "b": 1.0}}',
                         serialized)
        self.assertEqual(serialized, json_utils.serialize(Sample("é", weights={"a": 0.5, "b": 1.0})))

    def test_jsonl(self):
        path = os.path.join(self.make_temp_dir(), "nested", "records.jsonl")
        json_utils.write_jsonl(path, [Sample("a"), {"name": "b"}])
        with open(path, "a", encoding="utf-8") as jsonl_file:
            jsonl_file.write("\n   \n")

        self.assertEqual([
            {"method": "median", "name": "a", "note": None, "weights": {}},
            {"name": "b"},
        ], json_utils.read_jsonl(path))
