from dataclasses import dataclass
from typing import Optional

from prepocr import constants
from prepocr.models.config.abstract_config_model import AbstractConfigModel
from prepocr.models.ocr_engine_kind import OcrEngineKind


@dataclass
class EngineConfigModel(AbstractConfigModel):
    """
    OCR engine. `command` is the external template with `{image}` and `{output}` placeholders;
    the mock engine injects `error_model` errors at `rate_lambda` into the page ground truth.
    """
    kind: str = OcrEngineKind.MOCK.value
    command: Optional[str] = None
    error_model: Optional[str] = None
    rate_lambda: float = 0.0
    # falls back to the pipeline seed
    seed: Optional[int] = None
    timeout_s: int = constants.EXTERNAL_OCR_TIMEOUT_S
