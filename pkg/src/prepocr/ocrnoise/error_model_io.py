"""
JSON document format of error models:

    {"format": "prepocr-error-model", "version": 1, "insertion_rate": 0.0,
     "table": {"m": {"n": 0.001, "rn": 0.002}, "e": {"@": 0.004}}}

Keys are written sorted, so equal models serialize to identical bytes.
"""
from typing import Any, Dict

from prepocr import constants
from prepocr.exceptions import ModelFormatError
from prepocr.models.error_model import ErrorModel
from prepocr.utils import json_utils
from preputils.encoding import json_encoder


def to_document(model: ErrorModel) -> Dict[str, Any]:
    return {
        "format": constants.ERROR_MODEL_FORMAT,
        "version": constants.ERROR_MODEL_VERSION,
        "insertion_rate": model.insertion_rate,
        "table": model.table,
    }


def from_document(document: Any) -> ErrorModel:
    if not isinstance(document, dict) or document.get("format") != constants.ERROR_MODEL_FORMAT:
        raise ModelFormatError("Not a {} document".format(constants.ERROR_MODEL_FORMAT))
    if document.get("version") != constants.ERROR_MODEL_VERSION:
        raise ModelFormatError("Unsupported error model version {}".format(document.get("version")))
    table = document.get("table", {})
    if not isinstance(table, dict) or any(not isinstance(value, dict) for value in table.values()):
        raise ModelFormatError("Error model table must map characters to candidate objects")
    model = ErrorModel(
        table={source: {candidate: float(p) for candidate, p in candidates.items()} for source, candidates in
               table.items()},
        insertion_rate=float(document.get("insertion_rate", 0.0)),
    )
    return model.validate()


def save_error_model(model: ErrorModel, path: str) -> None:
    json_utils.write_json(path, to_document(model))


def load_error_model(path: str) -> ErrorModel:
    try:
        document = json_encoder.load_json_from_file(path)
    except ValueError as e:
        raise ModelFormatError("Cannot read error model {}: {}".format(path, e))
    return from_document(document)
