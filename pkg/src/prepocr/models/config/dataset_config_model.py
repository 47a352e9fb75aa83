from dataclasses import dataclass, field
from typing import Dict, List, Optional

from prepocr import constants
from prepocr.models.config.abstract_config_model import AbstractConfigModel


def _default_level_weights() -> Dict[int, float]:
    return {level: 1.0 for level in constants.NOISE_LEVELS}


@dataclass
class DatasetConfigModel(AbstractConfigModel):
    count: int = 1
    level_weights: Dict[int, float] = field(default_factory=_default_level_weights)
    fonts: List[str] = field(default_factory=lambda: [constants.DEFAULT_FONT])
    master_seed: int = constants.DEFAULT_SEED
    stitch_fraction: float = constants.DEFAULT_STITCH_FRACTION
    lines_per_page: int = constants.DEFAULT_LINES_PER_PAGE
    font_size: int = constants.DEFAULT_FONT_SIZE
    wrap_width: int = constants.DEFAULT_WRAP_WIDTH
    noise_levels_path: Optional[str] = None
