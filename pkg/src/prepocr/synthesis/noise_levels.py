import dataclasses
from typing import Dict, Optional

from prepocr.exceptions import ConfigError
from prepocr.models.noise_level import NoiseLevel
from prepocr.utils import model_loader
from preputils import logging
from preputils.encoding import json_encoder

logger = logging.get_logger(__name__)

_DEFAULT_LEVELS = {
    1: NoiseLevel(
        level=1,
        noise_factor=(0.0, 10.0),
        scale_factor=(0.2, 1.0),
        blur_radius=(0.0, 1.0),
        background_intensity=(0.0, 0.1),
        stain_transparency=(0.0, 0.3),
        max_stains=(0, 1),
        contrast_factor=(0.6, 1.0),
        black_spots_per_page=(0.0, 1 / 3000),
        white_patch_size=(0, 3),
        white_patches_per_page=(0.0, 1 / 500),
        line_artifacts=(0, 4),
        dilation_iterations=(0, 2),
        erosion_iterations=(0, 2),
    ),
    2: NoiseLevel(
        level=2,
        noise_factor=(0.0, 30.0),
        scale_factor=(0.2, 1.0),
        blur_radius=(0.0, 1.0),
        background_intensity=(0.0, 0.3),
        stain_transparency=(0.0, 0.6),
        max_stains=(0, 3),
        contrast_factor=(0.6, 1.0),
        black_spots_per_page=(0.0, 1 / 2000),
        white_patch_size=(0, 5),
        white_patches_per_page=(0.0, 1 / 300),
        line_artifacts=(0, 6),
        dilation_iterations=(0, 2),
        erosion_iterations=(0, 2),
    ),
    3: NoiseLevel(
        level=3,
        noise_factor=(0.0, 50.0),
        scale_factor=(0.2, 1.0),
        blur_radius=(0.0, 2.0),
        background_intensity=(0.0, 0.6),
        stain_transparency=(0.0, 0.8),
        max_stains=(0, 5),
        contrast_factor=(0.6, 1.0),
        black_spots_per_page=(0.0, 1 / 1000),
        white_patch_size=(0, 5),
        white_patches_per_page=(0.0, 1 / 200),
        line_artifacts=(0, 8),
        dilation_iterations=(0, 2),
        erosion_iterations=(0, 2),
    ),
    4: NoiseLevel(
        level=4,
        noise_factor=(0.0, 50.0),
        scale_factor=(0.2, 1.0),
        blur_radius=(0.0, 2.0),
        background_intensity=(0.0, 0.6),
        stain_transparency=(0.0, 0.8),
        max_stains=(0, 5),
        contrast_factor=(0.3, 1.0),
        black_spots_per_page=(0.0, 1 / 1000),
        white_patch_size=(0, 5),
        white_patches_per_page=(0.0, 1 / 100),
        line_artifacts=(0, 10),
        dilation_iterations=(0, 2),
        erosion_iterations=(0, 2),
    ),
}


def default_level(level: int) -> NoiseLevel:
    if level not in _DEFAULT_LEVELS:
        raise ConfigError("Unknown noise level {}; expected one of {}".format(level, sorted(_DEFAULT_LEVELS)))
    return dataclasses.replace(_DEFAULT_LEVELS[level])


def default_levels() -> Dict[int, NoiseLevel]:
    return {level: default_level(level) for level in _DEFAULT_LEVELS}


def load_noise_levels(path: Optional[str] = None) -> Dict[int, NoiseLevel]:
    """
    Default levels, optionally overridden per field by a JSON file shaped like
    `{"3": {"noise_factor": [0, 40], "binarize_probability": 0}}`.
    """
    levels = default_levels()
    if path is None:
        return levels
    try:
        overrides = json_encoder.load_json_from_file(path)
    except ValueError as e:
        raise ConfigError("Unable to read noise levels from {}: {}".format(path, e))

    for level_key, level_overrides in overrides.items():
        level = int(level_key)
        base = json_encoder.to_dict(levels.get(level, default_level(level)))
        base.update(level_overrides)
        base["level"] = level
        levels[level] = model_loader.load_model(NoiseLevel, base).validate()
        logger.debug("Noise level {} overridden from {}: {}", level, path, sorted(level_overrides))
    return levels
