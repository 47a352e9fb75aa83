"""
JSON encoding of models, manifests, reports and structured log records.

Dataclasses encode field by field, enums by value and numpy scalars/arrays as plain numbers/lists. Keys are
sorted by default so that reruns over the same inputs produce byte-identical files.
"""
import dataclasses
import json
import os
from enum import Enum
from typing import Any, Dict

import numpy as np


def to_json(obj: Any, sort_keys: bool = True) -> str:
    return json.dumps(obj, cls=EnhancedJSONEncoder, sort_keys=sort_keys, ensure_ascii=False)


def to_dict(obj: Any) -> Dict[str, Any]:
    """
    Plain JSON-compatible structure of `obj`, with nested models converted as well.
    """
    return EnhancedJSONEncoder().as_dict(obj)


def load_json_from_file(json_file_path: str) -> Any:
    """
    :raises ValueError: the file is missing or is not valid JSON
    """
    if not os.path.isfile(json_file_path):
        raise ValueError("Could not locate json file: {}".format(json_file_path))
    with open(json_file_path, encoding="utf-8") as json_file:
        return json.load(json_file)


class EnhancedJSONEncoder(json.JSONEncoder):

    def default(self, o: Any) -> Any:
        if isinstance(o, np.generic):
            return o.item()
        if isinstance(o, np.ndarray):
            return o.tolist()
        if isinstance(o, Enum):
            return o.value
        if dataclasses.is_dataclass(o) and not isinstance(o, type):
            return {field.name: getattr(o, field.name) for field in dataclasses.fields(o)}
        if isinstance(o, (set, frozenset)):
            return sorted(o)
        if isinstance(o, type(dict().keys())) or isinstance(o, type(dict().values())):
            return list(o)
        if hasattr(o, "__dict__") and not isinstance(o, type):
            return {key: value for key, value in vars(o).items() if not key.startswith("_")}
        return str(o)

    def as_dict(self, obj: Any) -> Any:
        if isinstance(obj, dict):
            return {self._key(key): self.as_dict(value) for key, value in obj.items()}
        if isinstance(obj, (list, tuple)):
            return [self.as_dict(item) for item in obj]
        if obj is None or isinstance(obj, (str, int, float, bool)):
            return obj
        return self.as_dict(self.default(obj))

    def encode(self, o: Any) -> str:
        return super(EnhancedJSONEncoder, self).encode(self.as_dict(o))

    def _key(self, key: Any) -> Any:
        if key is None or isinstance(key, (str, int, float, bool)):
            return key
        return str(self.default(key))
