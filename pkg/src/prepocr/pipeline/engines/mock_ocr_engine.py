from typing import Optional

from prepocr import constants
from prepocr.exceptions import ConfigError, OcrEngineError
from prepocr.models.error_model import ErrorModel
from prepocr.models.ocr_engine_kind import OcrEngineKind
from prepocr.models.ocr_job import OcrJob
from prepocr.ocrnoise.error_injector import ErrorInjector
from prepocr.pipeline.engines.abstract_ocr_engine import AbstractOcrEngine
from prepocr.utils import crypto, seeds, text_files

PAGE_SEED_HEX_DIGITS = 15


def page_seed(seed: int, page_id: str) -> int:
    """
    Seed of one page, derived from its id so that page order and pool size do not matter.
    """
    digest = crypto.sha256_hex(page_id.encode(constants.DEFAULT_TEXT_ENCODING))
    return seeds.mix(seed, int(digest[:PAGE_SEED_HEX_DIGITS], 16))


class MockOcrEngine(AbstractOcrEngine):
    """
    Emits the page ground truth with injected errors. Pixels are never looked at, so the same page
    reads identically before and after restoration.
    """
    error_model: Optional[ErrorModel]
    rate_lambda: float
    seed: int

    def __init__(self, error_model: Optional[ErrorModel] = None, rate_lambda: float = 0.0,
                 seed: int = constants.DEFAULT_SEED):
        super(MockOcrEngine, self).__init__(OcrEngineKind.MOCK)
        if rate_lambda < 0:
            raise ConfigError("Mock engine rate must be non-negative, got {}".format(rate_lambda))
        self.error_model = error_model
        self.rate_lambda = rate_lambda
        self.seed = seed
        self._injector = ErrorInjector(error_model) if error_model is not None else None

    def describe(self) -> str:
        return "{}(lambda={})".format(self.kind.value, self.rate_lambda)

    def recognize(self, job: OcrJob) -> str:
        if job.gt_text is None:
            raise OcrEngineError("mock engine needs the page ground truth", job.page_id)
        text = job.gt_text
        if self._injector is not None and self.rate_lambda > 0:
            text = self._injector.inject(text, self.rate_lambda, page_seed(self.seed, job.page_id))
        try:
            text_files.write_text(job.output_path, text)
        except OSError as e:
            raise OcrEngineError("Cannot write OCR text to {}: {}".format(job.output_path, e), job.page_id)
        return text
