import argparse
import os

from prepocr import constants
from prepocr.alignment import error_rates
from prepocr.commands import command_utils
from prepocr.models.config.alignment_config_model import AlignmentConfigModel
from prepocr.models.config.engine_config_model import EngineConfigModel
from prepocr.models.ocr_engine_kind import OcrEngineKind
from prepocr.models.ocr_job import OcrJob
from prepocr.pipeline import ocr_runner, pages as pages_reader
from prepocr.pipeline.engines import ocr_engine_factory
from prepocr.utils import json_utils
from prepocr.utils.cli import Handler
from prepocr.utils.proxy import task_pool_proxy
from preputils import logging

logger = logging.get_logger(__name__)


def add_engine_arguments(arg_parser: argparse.ArgumentParser) -> None:
    arg_parser.add_argument("--engine", choices=[kind.value for kind in OcrEngineKind],
                            help="mock (ground truth with injected errors) or exec (external command)")
    arg_parser.add_argument("--engine-command", help="OCR command template with {image} and {output}")
    arg_parser.add_argument("--error-model", help="Error model the mock engine injects")
    arg_parser.add_argument("--rate-lambda", type=float, help="Rate multiplier of the mock engine")


def engine_overrides(opts: argparse.Namespace) -> EngineConfigModel:
    overrides = EngineConfigModel.unset()
    overrides.kind = opts.engine
    overrides.command = opts.engine_command
    overrides.error_model = opts.error_model
    overrides.rate_lambda = opts.rate_lambda
    return overrides


def add_alignment_arguments(arg_parser: argparse.ArgumentParser) -> None:
    arg_parser.add_argument("--anchor-n", type=int, help="Word n-gram length of alignment anchors")
    arg_parser.add_argument("--band-width", type=int, help="Diagonal band of long-span alignment")
    arg_parser.add_argument("--fallback-cap", type=int,
                            help="Longest text aligned exactly when no anchor is found")


def alignment_overrides(opts: argparse.Namespace) -> AlignmentConfigModel:
    overrides = AlignmentConfigModel.unset()
    overrides.anchor_n = opts.anchor_n
    overrides.band_width = opts.band_width
    overrides.fallback_cap = opts.fallback_cap
    return overrides


def add_ocr_arguments(arg_parser: argparse.ArgumentParser) -> Handler:
    arg_parser.add_argument("--pages", required=True, help="Pages manifest (JSONL) or synth manifest.jsonl")
    arg_parser.add_argument("--out", required=True, help="Directory receiving <page_id>.txt and ocr_results.jsonl")
    arg_parser.add_argument("--seed", type=int, default=constants.DEFAULT_SEED)
    add_engine_arguments(arg_parser)
    return run_ocr


def run_ocr(opts: argparse.Namespace) -> None:
    engine_config = EngineConfigModel().merge(engine_overrides(opts))
    engine = ocr_engine_factory.create_engine(engine_config, opts.seed)
    pages = pages_reader.load_pages(opts.pages)
    jobs = [
        OcrJob(page.page_id, page.image, os.path.join(opts.out, page.page_id + ".txt"),
               pages_reader.read_ground_truth(page))
        for page in pages
    ]
    os.makedirs(opts.out, exist_ok=True)
    results = ocr_runner.run_ocr(jobs, engine)
    json_utils.write_jsonl(os.path.join(opts.out, constants.OCR_RESULTS_FILE),
                           ({"page_id": result.page_id, "error": result.error} for result in results))


def add_align_arguments(arg_parser: argparse.ArgumentParser) -> Handler:
    arg_parser.add_argument("--gt", required=True, help="Ground truth text (a page or a whole book)")
    arg_parser.add_argument("--hyp", required=True, help="OCR text; pages separated by form feeds")
    arg_parser.add_argument("--out", help="JSONL of per-page evaluations (default: stdout summary only)")
    arg_parser.add_argument("--page-level", action="store_true",
                            help="Score each page against the full ground truth instead of its anchored span")
    arg_parser.add_argument("--threshold", type=float, default=constants.OUTLIER_CER_THRESHOLD,
                            help="Pages with CER strictly above this are outliers")
    add_alignment_arguments(arg_parser)
    return run_align


def run_align(opts: argparse.Namespace) -> None:
    alignment = AlignmentConfigModel().merge(alignment_overrides(opts))
    gt = command_utils.read_input_text(opts.gt)
    hyp_pages = command_utils.read_input_text(opts.hyp).split(constants.PAGE_SEPARATOR)
    book_level = not opts.page_level

    evals = task_pool_proxy.map_tasks(
        lambda item: error_rates.evaluate_page("{:04d}".format(item[0] + 1), gt, item[1], book_level, alignment,
                                               opts.threshold),
        list(enumerate(hyp_pages)),
    )
    if opts.out:
        json_utils.write_jsonl(opts.out, evals)
    summary = error_rates.summarize(evals, opts.threshold)
    command_utils.write_output_text(None, json_utils.serialize(summary) + "\n")
