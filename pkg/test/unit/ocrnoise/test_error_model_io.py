import os

from prepocr.exceptions import ModelFormatError
from prepocr.models.error_model import ErrorModel
from prepocr.ocrnoise import error_model_io
from prepocr.test_utils.abstract_test_case import AbstractTestCase


class ErrorModelIoTest(AbstractTestCase):

    def test_save_and_load(self):
        model = ErrorModel({"m": {"rn": 0.002, "n": 0.001}, "e": {"@": 0.01}}, insertion_rate=0.001)
        path = os.path.join(self.make_temp_dir(), "errors.json")
        error_model_io.save_error_model(model, path)
        self.assertEqual(model, error_model_io.load_error_model(path))
        with open(path, encoding="utf-8") as model_file:
            text = model_file.read()
        self.assertTrue(text.index('"e"') < text.index('"m"'))
        self.assertTrue(text.index('"n"') < text.index('"rn"'))
        self.assertIn('"format": "prepocr-error-model"', text)

    def test_rejects_bad_documents(self):
        bad_documents = [
            {"format": "other", "version": 1, "table": {}},
            {"format": "prepocr-error-model", "version": 2, "table": {}},
            {"format": "prepocr-error-model", "version": 1, "table": {"@": {"a": 0.1}}},
            {"format": "prepocr-error-model", "version": 1, "table": {"a": {"b": 0.7, "c": 0.5}}},
            {"format": "prepocr-error-model", "version": 1, "table": {"a": {"b": 0.0}}},
            {"format": "prepocr-error-model", "version": 1, "table": {"ab": {"b": 0.1}}},
            {"format": "prepocr-error-model", "version": 1, "table": ["a"]},
        ]
        for document in bad_documents:
            with self.assertRaises(ModelFormatError):
                error_model_io.from_document(document)

    def test_unreadable_file(self):
        path = os.path.join(self.make_temp_dir(), "broken.json")
        with open(path, "w") as broken:
            broken.write("{not json")
        with self.assertRaises(ModelFormatError):
            error_model_io.load_error_model(path)
