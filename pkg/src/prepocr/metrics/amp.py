"""
Aggregated masked PSNR: per-pixel PSNR restricted to the text mask of each patch pair, averaged
per pixel position over a test set and then over the covered positions of a region.
"""
import math
import os
from typing import Iterable, List, Optional, Tuple

import numpy as np

from prepocr import constants
from prepocr.exceptions import ImageDimensionError, RegionEmptyError
from prepocr.imaging import geometry, image_io, otsu
from prepocr.imaging.gray_image import GrayImage
from prepocr.metrics.psnr_accumulator import PsnrAccumulator
from prepocr.models.amp_region import AmpRegion
from prepocr.models.amp_report import AmpReport
from prepocr.models.rect import Rect
from prepocr.utils.proxy import task_pool_proxy
from preputils import logging

logger = logging.get_logger(__name__)

PEAK_SQUARED = float(constants.MAX_INTENSITY ** 2)
IMAGE_EXTENSIONS = (".png", ".jpg", ".jpeg", ".tif", ".tiff", ".bmp")


def masked_psnr_map(gt: GrayImage, pred: GrayImage) -> Tuple[np.ndarray, np.ndarray]:
    """
    :return: (mask, psnr map); the mask is the union of both images' Otsu foregrounds, the map is
             0 outside it and capped at 100 dB where a masked pixel is reproduced exactly
    """
    if not gt.same_size(pred):
        raise ImageDimensionError("Ground truth {} and prediction {} differ in size".format(gt, pred))
    mask = otsu.foreground_mask(gt) | otsu.foreground_mask(pred)
    diff = gt.data.astype(np.int64) - pred.data.astype(np.int64)
    squared = diff * diff
    psnr_map = np.zeros(squared.shape, dtype=np.float64)
    exact = mask & (squared == 0)
    lossy = mask & (squared > 0)
    psnr_map[exact] = constants.AMP_ZERO_ERROR_DB
    psnr_map[lossy] = 10.0 * np.log10(PEAK_SQUARED / squared[lossy])
    return mask, psnr_map


def accumulate(acc: PsnrAccumulator, psnr_map: np.ndarray, mask: np.ndarray) -> PsnrAccumulator:
    return acc.accumulate(psnr_map, mask)


def accumulate_pair(acc: PsnrAccumulator, gt: GrayImage, pred: GrayImage) -> PsnrAccumulator:
    mask, psnr_map = masked_psnr_map(gt, pred)
    return acc.accumulate(psnr_map, mask)


def finalize_amp(acc: PsnrAccumulator, region: AmpRegion = AmpRegion.FULL) -> Tuple[float, np.ndarray]:
    """
    :return: (AMP in dB, mean map of the region with NaN at uncovered positions)
    """
    margin = region.margin()
    if margin:
        acc = acc.crop(margin)
    mean = acc.mean_map()
    covered = acc.count_map > 0
    if not covered.any():
        raise RegionEmptyError("No masked pixel contributed to region {}".format(region))
    return float(np.mean(mean[covered])), mean


def fixed_patch_rects(width: int, height: int, count: int = constants.AMP_PATCHES_PER_IMAGE,
                      patch_size: int = constants.PATCH_SIZE) -> List[Rect]:
    """
    `count` evaluation patches centered at evenly spaced points of the main diagonal, shifted
    inwards where they would cross the border.
    """
    if width < patch_size or height < patch_size:
        raise ImageDimensionError(
            "{}x{} image is smaller than a {}px evaluation patch".format(width, height, patch_size)
        )
    rects = []
    for index in range(count):
        fraction = (index + 1) / (count + 1)
        x0 = int(math.floor(width * fraction + 0.5)) - patch_size // 2
        y0 = int(math.floor(height * fraction + 0.5)) - patch_size // 2
        x0 = min(max(0, x0), width - patch_size)
        y0 = min(max(0, y0), height - patch_size)
        rects.append(Rect(x0, y0, patch_size, patch_size))
    return rects


def evaluation_patches(gt: GrayImage, pred: GrayImage, count: int = constants.AMP_PATCHES_PER_IMAGE,
                       patch_size: int = constants.PATCH_SIZE) -> List[Tuple[GrayImage, GrayImage]]:
    if not gt.same_size(pred):
        raise ImageDimensionError("Ground truth {} and prediction {} differ in size".format(gt, pred))
    if gt.width == patch_size and gt.height == patch_size:
        return [(gt, pred)]
    return [
        (geometry.crop(gt, rect), geometry.crop(pred, rect))
        for rect in fixed_patch_rects(gt.width, gt.height, count, patch_size)
    ]


def evaluate_pairs(pairs: Iterable[Tuple[GrayImage, GrayImage]], count: int = constants.AMP_PATCHES_PER_IMAGE,
                   patch_size: int = constants.PATCH_SIZE) -> Tuple[PsnrAccumulator, int]:
    """
    Accumulates every evaluation patch of every pair; partial accumulators are built per pair on
    the worker pool and merged.

    :return: (accumulator, number of patches)
    """
    def accumulate_one(pair: Tuple[GrayImage, GrayImage]) -> Tuple[PsnrAccumulator, int]:
        partial = PsnrAccumulator(patch_size, patch_size)
        patches = evaluation_patches(pair[0], pair[1], count, patch_size)
        for gt_patch, pred_patch in patches:
            accumulate_pair(partial, gt_patch, pred_patch)
        return partial, len(patches)

    total = PsnrAccumulator(patch_size, patch_size)
    patch_count = 0
    for partial, patches in task_pool_proxy.map_tasks(accumulate_one, pairs):
        total.merge(partial)
        patch_count += patches
    return total, patch_count


def amp_by_region(acc: PsnrAccumulator) -> dict:
    result = {}
    for region in AmpRegion:
        try:
            result[region.value] = finalize_amp(acc, region)[0]
        except (RegionEmptyError, ImageDimensionError) as e:
            logger.warning("AMP for region {} undefined: {}", region, e)
    return result


def list_images(directory: str) -> List[str]:
    return sorted(
        name for name in os.listdir(directory)
        if os.path.isfile(os.path.join(directory, name)) and name.lower().endswith(IMAGE_EXTENSIONS)
    )


def evaluate_directories(gt_dir: str, pred_dir: str, count: int = constants.AMP_PATCHES_PER_IMAGE,
                         patch_size: int = constants.PATCH_SIZE,
                         heat_path: Optional[str] = None) -> AmpReport:
    """
    Pairs images of both directories by file name and reports AMP for every region. With
    `heat_path` the full-region mean map is also written as a heat PNG.
    """
    gt_names = set(list_images(gt_dir))
    pred_names = set(list_images(pred_dir))
    paired = sorted(gt_names & pred_names)
    unpaired = sorted(gt_names ^ pred_names)
    if unpaired:
        logger.warning("{} images have no counterpart and are skipped: {}", len(unpaired), unpaired[:10])
    if not paired:
        raise RegionEmptyError("No image names shared by {} and {}".format(gt_dir, pred_dir))

    def load_pair(name: str) -> Tuple[GrayImage, GrayImage]:
        return image_io.load_gray(os.path.join(gt_dir, name)), image_io.load_gray(os.path.join(pred_dir, name))

    acc, patch_count = evaluate_pairs(task_pool_proxy.map_tasks(load_pair, paired), count, patch_size)
    report = AmpReport(
        amp=amp_by_region(acc),
        pair_count=len(paired),
        patch_count=patch_count,
        patch_size=patch_size,
        unpaired=unpaired,
    )
    if heat_path:
        image_io.save_png(heat_image(acc), heat_path)
        report.heat_image = heat_path
    logger.info("AMP over {} pairs ({} patches): {}", report.pair_count, report.patch_count, report.amp)
    return report


def heat_image(acc: PsnrAccumulator) -> GrayImage:
    """
    Mean map with 0..100 dB mapped linearly to 0..255; uncovered positions are black.
    """
    mean = np.nan_to_num(acc.mean_map(), nan=0.0)
    scaled = np.clip(mean, 0.0, constants.AMP_ZERO_ERROR_DB) * constants.MAX_INTENSITY / constants.AMP_ZERO_ERROR_DB
    return GrayImage.from_values(scaled)
