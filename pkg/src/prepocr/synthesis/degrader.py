import math
from typing import Any, Dict, List, Tuple

from prepocr.imaging.gray_image import GrayImage
from prepocr.models.degradation_result import DegradationResult
from prepocr.models.noise_level import NoiseLevel
from prepocr.synthesis import degradation_operators as ops
from prepocr.utils import seeds
from preputils import logging

logger = logging.get_logger(__name__)


def sample_parameters(level: NoiseLevel, width: int, height: int, rng) -> Dict[str, Tuple]:
    """
    One draw per operator, always in the same order so a seed maps to one parameter set.
    Values are the positional arguments of the operator after the image.
    """
    area = width * height
    return {
        ops.NOISE: (rng.uniform(*level.noise_factor),),
        ops.RESOLUTION: (rng.uniform(*level.scale_factor),),
        ops.BLUR: (rng.uniform(*level.blur_radius),),
        ops.BACKGROUND: (rng.uniform(*level.background_intensity),),
        ops.STAINS: (_sample_int(rng, level.max_stains), rng.uniform(*level.stain_transparency)),
        ops.BLACK_SPOTS: (_sample_count(rng, level.black_spots_per_page, area),),
        ops.WHITE_PATCHES: (_sample_count(rng, level.white_patches_per_page, area), tuple(level.white_patch_size)),
        ops.LINES: (_sample_int(rng, level.line_artifacts),),
        ops.CONTRAST: (rng.uniform(*level.contrast_factor),),
        ops.DILATION: (_sample_int(rng, level.dilation_iterations),),
        ops.EROSION: (_sample_int(rng, level.erosion_iterations),),
    }


def is_identity(op_id: str, params: Tuple) -> bool:
    if op_id == ops.RESOLUTION:
        return params[0] == 1.0
    if op_id == ops.CONTRAST:
        return params[0] == 1.0
    if op_id == ops.STAINS:
        return params[0] == 0 or params[1] == 0.0
    if op_id == ops.WHITE_PATCHES:
        return params[0] == 0 or params[1][1] == 0
    return params[0] == 0


def degrade(img: GrayImage, level: NoiseLevel, seed: int) -> DegradationResult:
    """
    Applies the degradation suite of `level` in a seeded random order, then binarizes at the Otsu
    threshold with the level's binarization probability. Operators whose sampled parameter is a
    no-op are skipped, so a level with collapsed identity ranges returns the input unchanged.
    """
    rng = seeds.create_rng(seed)
    params = sample_parameters(level, img.width, img.height, rng)
    binarize = bool(rng.random() < level.binarize_probability)
    order = [ops.OPERATOR_IDS[i] for i in rng.permutation(len(ops.OPERATOR_IDS))]

    applied: List[str] = []
    degraded = img
    for op_id in order:
        if is_identity(op_id, params[op_id]):
            continue
        degraded = ops.OPERATORS[op_id](degraded, *params[op_id], rng)
        applied.append(op_id)
    if binarize:
        degraded = ops.otsu_binarize(degraded, rng)
        applied.append(ops.OTSU_BINARIZE)

    logger.trace("Level {} degradation (seed {}): {}", level.level, seed, applied)
    return DegradationResult(degraded, applied, _describe(params), binarize)


def _sample_int(rng, value_range) -> int:
    return int(rng.integers(int(value_range[0]), int(value_range[1]) + 1))


def _sample_count(rng, fraction_range, area: int) -> int:
    low = int(math.ceil(fraction_range[0] * area))
    high = int(math.floor(fraction_range[1] * area))
    if high < low:
        return low
    return int(rng.integers(low, high + 1))


def _describe(params: Dict[str, Tuple]) -> Dict[str, Any]:
    return {op_id: list(values) if len(values) > 1 else values[0] for op_id, values in params.items()}
