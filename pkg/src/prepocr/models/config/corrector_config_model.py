from dataclasses import dataclass
from typing import Optional

from prepocr import constants
from prepocr.models.config.abstract_config_model import AbstractConfigModel


@dataclass
class CorrectorConfigModel(AbstractConfigModel):
    enabled: bool = False
    lm: Optional[str] = None
    channel: Optional[str] = None
    beam_width: int = constants.DEFAULT_BEAM_WIDTH
    channel_weight: float = 1.0
    lm_weight: float = 1.0
    max_edits_per_window: int = constants.DEFAULT_MAX_EDITS_PER_WINDOW
    edit_window: int = constants.DEFAULT_EDIT_WINDOW
