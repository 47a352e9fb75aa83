import sys
from typing import Optional, Type, TypeVar

from prepocr.exceptions import ConfigError
from prepocr.models.config.abstract_config_model import AbstractConfigModel
from prepocr.utils import model_loader, text_files
from preputils.encoding import json_encoder

T = TypeVar("T", bound=AbstractConfigModel)


def load_config(model_class: Type[T], path: Optional[str], overrides: Optional[T] = None) -> T:
    """
    The config file at `path` (defaults when absent) with every non-`None` override merged over it.
    """
    if path:
        try:
            config = model_loader.load_model(model_class, json_encoder.load_json_from_file(path))
        except (ValueError, TypeError) as e:
            raise ConfigError("Unable to read {} from {}: {}".format(model_class.__name__, path, e))
    else:
        config = model_class()
    if overrides is not None:
        config.merge(overrides)
    return config


def read_input_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return text_files.read_text(path)
    except (OSError, UnicodeDecodeError) as e:
        raise ConfigError("Cannot read text from {}: {}".format(path, e))


def write_output_text(path: Optional[str], text: str) -> None:
    """
    Writes to `path`, or to stdout when no path is given.
    """
    if path and path != "-":
        text_files.write_text(path, text)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()
