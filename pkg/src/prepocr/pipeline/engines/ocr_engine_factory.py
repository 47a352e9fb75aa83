from prepocr import constants
from prepocr.exceptions import ConfigError
from prepocr.models.config.engine_config_model import EngineConfigModel
from prepocr.models.ocr_engine_kind import OcrEngineKind
from prepocr.ocrnoise import error_model_io
from prepocr.pipeline.engines.abstract_ocr_engine import AbstractOcrEngine
from prepocr.pipeline.engines.external_command_ocr_engine import ExternalCommandOcrEngine
from prepocr.pipeline.engines.mock_ocr_engine import MockOcrEngine


def create_engine(config: EngineConfigModel, default_seed: int = constants.DEFAULT_SEED) -> AbstractOcrEngine:
    kind = OcrEngineKind.from_string(config.kind)
    if kind == OcrEngineKind.EXTERNAL:
        if not config.command or not config.command.strip():
            raise ConfigError("exec OCR engine needs a command template")
        return ExternalCommandOcrEngine(config.command, config.timeout_s)

    if config.rate_lambda is None or config.rate_lambda < 0:
        raise ConfigError("Mock engine rate must be non-negative, got {}".format(config.rate_lambda))
    error_model = error_model_io.load_error_model(config.error_model) if config.error_model else None
    seed = config.seed if config.seed is not None else default_seed
    return MockOcrEngine(error_model, config.rate_lambda, seed)
