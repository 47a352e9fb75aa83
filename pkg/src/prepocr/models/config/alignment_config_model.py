from dataclasses import dataclass

from prepocr import constants
from prepocr.models.config.abstract_config_model import AbstractConfigModel


@dataclass
class AlignmentConfigModel(AbstractConfigModel):
    anchor_n: int = constants.DEFAULT_ANCHOR_N
    band_width: int = constants.DEFAULT_BAND_WIDTH
    band_threshold: int = constants.DEFAULT_BAND_THRESHOLD
    fallback_cap: int = constants.DEFAULT_FALLBACK_CAP
    edge_max_cer: float = constants.DEFAULT_EDGE_MAX_CER
    min_unmatched_chars: int = constants.DEFAULT_MIN_UNMATCHED_CHARS
