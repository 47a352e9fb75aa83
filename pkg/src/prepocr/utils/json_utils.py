import json
import os
from typing import Any, Iterable, Iterator, List

from prepocr import constants
from preputils.encoding import json_encoder


def serialize(obj: Any) -> str:
    """
    Serializes object into a string JSON with sorted keys

    :param obj: object to serialize
    :return: JSON string
    """
    return json_encoder.to_json(obj)


def write_json(path: str, obj: Any) -> None:
    _ensure_parent(path)
    with open(path, "w", encoding=constants.DEFAULT_TEXT_ENCODING) as json_file:
        json_file.write(serialize(obj))
        json_file.write("\n")


def write_jsonl(path: str, records: Iterable[Any]) -> None:
    _ensure_parent(path)
    with open(path, "w", encoding=constants.DEFAULT_TEXT_ENCODING) as jsonl_file:
        for record in records:
            jsonl_file.write(serialize(record))
            jsonl_file.write("\n")


def iter_jsonl(path: str) -> Iterator[Any]:
    with open(path, encoding=constants.DEFAULT_TEXT_ENCODING) as jsonl_file:
        for line in jsonl_file:
            line = line.strip()
            if line:
                yield json.loads(line)


def read_jsonl(path: str) -> List[Any]:
    return list(iter_jsonl(path))


def _ensure_parent(path: str) -> None:
    parent = os.path.dirname(os.path.abspath(path))
    os.makedirs(parent, exist_ok=True)
