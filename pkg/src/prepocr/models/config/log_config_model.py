from dataclasses import dataclass, field
from typing import Dict

from prepocr.models.config.abstract_config_model import AbstractConfigModel
from preputils import constants as utils_constants


@dataclass
class LogConfigModel(AbstractConfigModel):
    log_level: str = str(utils_constants.DEFAULT_LOG_LEVEL)
    log_format: str = str(utils_constants.DEFAULT_LOG_FORMAT)
    log_level_overrides: Dict[str, str] = field(default_factory=dict)
