import argparse
import os
from typing import Tuple

from prepocr import constants
from prepocr.imaging import image_io
from prepocr.metrics import amp
from prepocr.models.config.fusion_config_model import FusionConfigModel
from prepocr.models.fusion_method import FusionMethod
from prepocr.models.restoration_mode import RestorationMode
from prepocr.models.restoration_report import RestorationReport
from prepocr.models.scan_direction import ScanDirection
from prepocr.restoration import patch_restorer
from prepocr.restoration.restorers import restorer_factory
from prepocr.restoration.restorers.abstract_restorer import AbstractRestorer
from prepocr.utils import convert, json_utils
from prepocr.utils.cli import Handler
from prepocr.utils.proxy import task_pool_proxy
from preputils import logging

logger = logging.get_logger(__name__)


def add_restore_arguments(arg_parser: argparse.ArgumentParser) -> Handler:
    arg_parser.add_argument("--input", required=True, help="Image file or directory of images")
    arg_parser.add_argument("--output", required=True, help="Output PNG, or directory when --input is one")
    arg_parser.add_argument("--restorer", default="otsu", help="identity | otsu | median3 | exec:<template>")
    arg_parser.add_argument("--mode", default=RestorationMode.MULTI.value,
                            choices=[mode.value for mode in RestorationMode])
    arg_parser.add_argument("--fusion", default=FusionMethod.MEDIAN.value,
                            choices=[method.value for method in FusionMethod])
    arg_parser.add_argument("--direction", default=ScanDirection.TL_BR.value,
                            choices=[direction.value for direction in ScanDirection],
                            help="Scan direction of single mode")
    arg_parser.add_argument("--trim", type=int, default=constants.DEFAULT_TRIM, choices=constants.SUPPORTED_TRIMS)
    arg_parser.add_argument("--resize-width", type=convert.str_to_resize_width, default=0,
                            help="Resize to this width before restoring ({} is customary), or off".format(
                                constants.DEFAULT_RESIZE_WIDTH))
    arg_parser.add_argument("--batch-size", type=int, default=constants.DEFAULT_PATCH_BATCH_SIZE)
    arg_parser.add_argument("--report", help="Optional JSON receiving the restoration reports")
    return run_restore


def run_restore(opts: argparse.Namespace) -> None:
    fusion = FusionConfigModel(
        mode=opts.mode,
        fusion=opts.fusion,
        direction=opts.direction,
        trim=opts.trim,
        resize_width=opts.resize_width,
        batch_size=opts.batch_size,
    ).validate()
    restorer = restorer_factory.create_restorer(opts.restorer)

    if os.path.isdir(opts.input):
        os.makedirs(opts.output, exist_ok=True)
        jobs = [
            (os.path.join(opts.input, name), os.path.join(opts.output, os.path.splitext(name)[0] + ".png"))
            for name in amp.list_images(opts.input)
        ]
    else:
        jobs = [(opts.input, opts.output)]
    reports = task_pool_proxy.map_tasks(lambda job: _restore_file(job, restorer, fusion), jobs)
    if opts.report:
        json_utils.write_json(opts.report, {os.path.basename(job[0]): report for job, report in zip(jobs, reports)})
    logger.info("Restored {} images with {}", len(jobs), restorer)


def _restore_file(job: Tuple[str, str], restorer: AbstractRestorer, fusion: FusionConfigModel) -> RestorationReport:
    source, target = job
    restored, report = patch_restorer.restore_with_config(image_io.load_gray(source), restorer, fusion)
    image_io.save_png(restored, target)
    return report


def add_amp_arguments(arg_parser: argparse.ArgumentParser) -> Handler:
    arg_parser.add_argument("--gt", required=True, help="Directory of ground truth images")
    arg_parser.add_argument("--pred", required=True, help="Directory of restored images with the same names")
    arg_parser.add_argument("--out", required=True, help="JSON report to write")
    arg_parser.add_argument("--heat", help="Optional heat PNG of the per-position mean PSNR")
    arg_parser.add_argument("--patches-per-image", type=int, default=constants.AMP_PATCHES_PER_IMAGE,
                            help="Evaluation patches taken from images larger than a patch")
    arg_parser.add_argument("--patch-size", type=int, default=constants.PATCH_SIZE)
    return run_amp


def run_amp(opts: argparse.Namespace) -> None:
    report = amp.evaluate_directories(opts.gt, opts.pred, opts.patches_per_image, opts.patch_size, opts.heat)
    json_utils.write_json(opts.out, report)
