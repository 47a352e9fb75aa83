from dataclasses import dataclass, fields
from typing import Tuple

from prepocr import constants
from prepocr.exceptions import ConfigError

FloatRange = Tuple[float, float]
IntRange = Tuple[int, int]

INTEGER_RANGES = ("max_stains", "white_patch_size", "line_artifacts", "dilation_iterations", "erosion_iterations")


@dataclass
class NoiseLevel:
    """
    Degradation parameter ranges of one noise level. Per-page counts of black spots and white patches
    are fractions of the page area H*W.
    """
    level: int
    noise_factor: FloatRange
    scale_factor: FloatRange
    blur_radius: FloatRange
    background_intensity: FloatRange
    stain_transparency: FloatRange
    max_stains: IntRange
    contrast_factor: FloatRange
    black_spots_per_page: FloatRange
    white_patch_size: IntRange
    white_patches_per_page: FloatRange
    line_artifacts: IntRange
    dilation_iterations: IntRange
    erosion_iterations: IntRange
    binarize_probability: float = constants.DEFAULT_BINARIZE_PROBABILITY

    def validate(self) -> "NoiseLevel":
        for level_field in fields(self):
            if level_field.name in ("level", "binarize_probability"):
                continue
            low, high = getattr(self, level_field.name)
            if low > high:
                raise ConfigError("Level {} {}: lo {} > hi {}".format(self.level, level_field.name, low, high))
            if level_field.name in INTEGER_RANGES and (int(low) != low or int(high) != high):
                raise ConfigError("Level {} {} must be integers".format(self.level, level_field.name))
        if not 0.0 <= self.binarize_probability <= 1.0:
            raise ConfigError("binarize_probability must be in [0, 1]")
        return self

    @classmethod
    def identity(cls, level: int = 1) -> "NoiseLevel":
        """
        A level whose every draw is a no-op, binarization included.
        """
        return cls(
            level=level,
            noise_factor=(0.0, 0.0),
            scale_factor=(1.0, 1.0),
            blur_radius=(0.0, 0.0),
            background_intensity=(0.0, 0.0),
            stain_transparency=(0.0, 0.0),
            max_stains=(0, 0),
            contrast_factor=(1.0, 1.0),
            black_spots_per_page=(0.0, 0.0),
            white_patch_size=(0, 0),
            white_patches_per_page=(0.0, 0.0),
            line_artifacts=(0, 0),
            dilation_iterations=(0, 0),
            erosion_iterations=(0, 0),
            binarize_probability=0.0,
        )
