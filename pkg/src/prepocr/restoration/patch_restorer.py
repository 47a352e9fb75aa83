import time
from typing import List, Optional, Tuple

import numpy as np

from prepocr import constants
from prepocr.exceptions import ConfigError, ImageDimensionError, RestorerError
from prepocr.imaging import geometry, image_io
from prepocr.imaging.gray_image import GrayImage
from prepocr.models.config.fusion_config_model import FusionConfigModel
from prepocr.models.fusion_method import FusionMethod
from prepocr.models.restoration_mode import RestorationMode
from prepocr.models.restoration_report import RestorationReport
from prepocr.models.scan_direction import ScanDirection
from prepocr.restoration import patch_plan
from prepocr.restoration.patch_plan import PatchPlan
from prepocr.restoration.restorers.abstract_restorer import AbstractRestorer
from prepocr.utils.proxy import task_pool_proxy
from prepocr.utils.stats.pipeline_statistics_service import restoration_statistics
from preputils import logging

logger = logging.get_logger(__name__)

PASS_COUNT = len(ScanDirection)


def restore_pass(img: GrayImage, plan: PatchPlan, restorer: AbstractRestorer,
                 batch_size: int = constants.DEFAULT_PATCH_BATCH_SIZE) -> GrayImage:
    """
    Pads `img` per `plan`, restores every patch and keeps only each patch's retained center.
    Centers are disjoint, so batches may complete in any order.
    """
    if (plan.width, plan.height) != (img.width, img.height):
        raise ImageDimensionError("Plan for {}x{} used on {}".format(plan.width, plan.height, img))
    top, left, bottom, right = plan.padding
    padded = geometry.pad_replicate(img, top, left, bottom, right)
    batch_size = max(1, batch_size)
    batches = [
        (start, plan.patches[start:start + batch_size]) for start in range(0, len(plan.patches), batch_size)
    ]

    def restore_one_batch(batch: Tuple[int, list]) -> List[GrayImage]:
        start, rects = batch
        patches = [GrayImage(padded.data[r.y0:r.y0 + r.height, r.x0:r.x0 + r.width]) for r in rects]
        restored = restorer.restore_batch(patches, start)
        if len(restored) != len(patches):
            raise RestorerError("restorer returned {} patches for {}".format(len(restored), len(patches)), start)
        for offset, (patch, output) in enumerate(zip(patches, restored)):
            if not output.same_size(patch):
                raise RestorerError(
                    "restorer returned {}x{} instead of {}x{}".format(
                        output.width, output.height, patch.width, patch.height
                    ),
                    start + offset,
                )
        return restored

    canvas = np.array(padded.data, copy=True)
    trim = plan.trim
    stride = plan.stride
    for (_, rects), restored in zip(batches, task_pool_proxy.map_tasks(restore_one_batch, batches)):
        for rect, output in zip(rects, restored):
            canvas[rect.y0 + trim:rect.y0 + trim + stride, rect.x0 + trim:rect.x0 + trim + stride] = \
                output.data[trim:trim + stride, trim:trim + stride]
    return GrayImage(canvas[top:top + img.height, left:left + img.width])


def fuse(passes: List[GrayImage], method: FusionMethod = FusionMethod.MEDIAN) -> GrayImage:
    """
    Pixel-wise fusion of the four directional passes. The median of four values is the mean of the
    two middle values; both it and the mean round half away from zero.
    """
    if len(passes) != PASS_COUNT:
        raise ImageDimensionError("Fusion needs exactly {} passes, got {}".format(PASS_COUNT, len(passes)))
    if any(not image.same_size(passes[0]) for image in passes[1:]):
        raise ImageDimensionError("Fusion passes differ in size: {}".format(passes))

    stack = np.stack([image.data for image in passes]).astype(np.int32)
    if method == FusionMethod.MEDIAN:
        stack.sort(axis=0)
        fused = (stack[1] + stack[2] + 1) // 2
    elif method == FusionMethod.MEAN:
        fused = (stack.sum(axis=0) + 2) // 4
    else:
        raise ConfigError("Unknown fusion method {}".format(method))
    return GrayImage(fused.astype(np.uint8))


def restore_image(img: GrayImage, restorer: AbstractRestorer, mode: RestorationMode = RestorationMode.MULTI,
                  trim: int = constants.DEFAULT_TRIM, fusion: FusionMethod = FusionMethod.MEDIAN,
                  direction: ScanDirection = ScanDirection.TL_BR,
                  batch_size: int = constants.DEFAULT_PATCH_BATCH_SIZE,
                  patch_size: int = constants.PATCH_SIZE) -> GrayImage:
    return restore_image_with_report(
        img, restorer, mode, trim, fusion, direction, batch_size, patch_size
    )[0]


def restore_image_with_report(img: GrayImage, restorer: AbstractRestorer,
                              mode: RestorationMode = RestorationMode.MULTI,
                              trim: int = constants.DEFAULT_TRIM,
                              fusion: FusionMethod = FusionMethod.MEDIAN,
                              direction: ScanDirection = ScanDirection.TL_BR,
                              batch_size: int = constants.DEFAULT_PATCH_BATCH_SIZE,
                              patch_size: int = constants.PATCH_SIZE,
                              resize_width: int = 0) -> Tuple[GrayImage, RestorationReport]:
    """
    Single mode runs one pass in `direction`; multi mode runs all four directions and fuses them.
    With `resize_width` > 0 the image is first resized to that width (aspect preserved) and the
    result keeps the resized dimensions.
    """
    started_at = time.time()
    if resize_width:
        img = geometry.resize_to_width(img, resize_width)
    directions = list(ScanDirection) if mode == RestorationMode.MULTI else [direction]
    plans = [patch_plan.plan_patches(img.width, img.height, scan, trim, patch_size) for scan in directions]
    passes = task_pool_proxy.map_tasks(lambda plan: restore_pass(img, plan, restorer, batch_size), plans)
    restored = fuse(passes, fusion) if mode == RestorationMode.MULTI else passes[0]

    report = RestorationReport(
        mode=mode.value,
        fusion=fusion.value if mode == RestorationMode.MULTI else "",
        trim=trim,
        restorer=restorer.describe(),
        deterministic=restorer.deterministic,
        width=img.width,
        height=img.height,
        directions=[scan.value for scan in directions],
        patches_per_pass=len(plans[0].patches),
        pass_checksums=[image_io.checksum(image) for image in passes],
        output_checksum=image_io.checksum(restored),
    )
    restoration_statistics.add_stage_result(mode.value, started_at)
    logger.debug("Restored {} with {} ({} passes x {} patches)", img, restorer, len(passes), report.patches_per_pass)
    return restored, report


def restore_with_config(img: GrayImage, restorer: AbstractRestorer,
                        config: Optional[FusionConfigModel] = None) -> Tuple[GrayImage, RestorationReport]:
    config = (config or FusionConfigModel()).validate()
    return restore_image_with_report(
        img,
        restorer,
        mode=RestorationMode.from_string(config.mode),
        trim=config.trim,
        fusion=FusionMethod.from_string(config.fusion),
        direction=ScanDirection.from_string(config.direction),
        batch_size=config.batch_size,
        patch_size=config.patch_size,
        resize_width=config.resize_width,
    )
