from dataclasses import dataclass

from prepocr import constants
from prepocr.exceptions import ConfigError
from prepocr.models.config.abstract_config_model import AbstractConfigModel
from prepocr.models.fusion_method import FusionMethod
from prepocr.models.restoration_mode import RestorationMode
from prepocr.models.scan_direction import ScanDirection


@dataclass
class FusionConfigModel(AbstractConfigModel):
    """
    Patch restoration settings. `resize_width` 0 leaves the input width untouched.
    """
    mode: str = RestorationMode.MULTI.value
    fusion: str = FusionMethod.MEDIAN.value
    direction: str = ScanDirection.TL_BR.value
    trim: int = constants.DEFAULT_TRIM
    resize_width: int = 0
    patch_size: int = constants.PATCH_SIZE
    batch_size: int = constants.DEFAULT_PATCH_BATCH_SIZE

    def validate(self) -> "FusionConfigModel":
        RestorationMode.from_string(self.mode)
        FusionMethod.from_string(self.fusion)
        ScanDirection.from_string(self.direction)
        if self.trim not in constants.SUPPORTED_TRIMS:
            raise ConfigError("Unsupported trim {}; expected one of {}".format(self.trim, constants.SUPPORTED_TRIMS))
        if self.patch_size - 2 * self.trim < 1:
            raise ConfigError("Patch size {} leaves no retained center at trim {}".format(self.patch_size, self.trim))
        if self.resize_width < 0 or self.batch_size < 1:
            raise ConfigError("resize_width must be >= 0 and batch_size >= 1")
        return self
