import os

from prepocr.alignment.text_normalization import normalize_text
from prepocr.exceptions import ConfigError, EmptyCorpusError
from prepocr.models.error_model import ErrorModel
from prepocr.models.rate_scale import RateScale
from prepocr.ocrnoise import training_pairs
from prepocr.test_utils import helpers
from prepocr.test_utils.abstract_test_case import AbstractTestCase
from prepocr.utils import json_utils

MODEL = ErrorModel({"e": {"c": 0.1}, "m": {"rn": 0.1}, "t": {"@": 0.05}})
CORPUS = (helpers.SAMPLE_CORPUS + "\n\n") * 5


class TrainingPairsTest(AbstractTestCase):

    def test_chunk_prefers_sentences_then_spaces(self):
        self.assertEqual(["Aaa bbb.", "Ccc ddd eee"], training_pairs.chunk_text("Aaa bbb. Ccc ddd eee", 12))
        self.assertEqual(["aaaa bbbb", "cccc"], training_pairs.chunk_text("aaaa bbbb cccc", 10))
        self.assertEqual(["abcde", "fghij", "kl"], training_pairs.chunk_text("abcdefghijkl", 5))
        self.assertEqual(["Dr.Who is", "here"], training_pairs.chunk_text("Dr.Who is here", 9))
        self.assertEqual([], training_pairs.chunk_text(" \n ", 9))

    def test_chunks_cover_corpus(self):
        chunks = training_pairs.chunk_text(CORPUS, 100)
        self.assertTrue(all(0 < len(chunk) <= 100 for chunk in chunks))
        self.assertEqual(normalize_text(CORPUS), " ".join(chunks))

    def test_invalid_chunk_length(self):
        with self.assertRaises(ConfigError):
            training_pairs.chunk_text("abc", 0)

    def test_zero_rate_grid(self):
        pairs = training_pairs.make_training_pairs(CORPUS, MODEL, [0.0], seed=1)
        self.assertTrue(pairs)
        for pair in pairs:
            self.assertEqual(pair.clean, pair.noisy)
            self.assertLessEqual(len(pair.clean), 512)
            self.assertEqual(0.0, pair.rate_lambda)

    def test_manifest_is_deterministic(self):
        out_dir = self.make_temp_dir()
        scales = {0.05: RateScale(1.0, 0.05), 0.1: RateScale(2.0, 0.1)}
        first = os.path.join(out_dir, "first.jsonl")
        second = os.path.join(out_dir, "second.jsonl")
        training_pairs.make_training_pairs(CORPUS, MODEL, [0.05, 0.1], 200, 7, first, scales)
        training_pairs.make_training_pairs(CORPUS, MODEL, [0.05, 0.1], 200, 7, second, scales)
        with open(first, "rb") as a, open(second, "rb") as b:
            self.assertEqual(a.read(), b.read())

        records = json_utils.read_jsonl(first)
        self.assertEqual({"clean", "noisy", "target_cer", "lambda", "seed"}, set(records[0]))
        self.assertTrue(all(len(record["clean"]) <= 200 for record in records))
        self.assertTrue(any(record["clean"] != record["noisy"] for record in records))
        self.assertEqual({0.05, 0.1}, {record["target_cer"] for record in records})
        self.assertTrue(all("@" not in record["noisy"] for record in records))

    def test_calibrates_when_no_scales_given(self):
        pairs = training_pairs.make_training_pairs(CORPUS, MODEL, [0.02], seed=3)
        self.assertTrue(all(pair.rate_lambda > 0 for pair in pairs))

    def test_errors(self):
        with self.assertRaises(EmptyCorpusError):
            training_pairs.make_training_pairs("  ", MODEL, [0.0])
        with self.assertRaises(ConfigError):
            training_pairs.make_training_pairs(CORPUS, MODEL, [])
