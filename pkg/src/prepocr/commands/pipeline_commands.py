import argparse
import os
from logging import Handler as LogHandler
from typing import Optional

from prepocr import constants
from prepocr.commands import evaluation_commands
from prepocr.models.config.corrector_config_model import CorrectorConfigModel
from prepocr.models.config.fusion_config_model import FusionConfigModel
from prepocr.models.config.log_config_model import LogConfigModel
from prepocr.models.config.pipeline_config_model import PipelineConfigModel
from prepocr.models.fusion_method import FusionMethod
from prepocr.models.restoration_mode import RestorationMode
from prepocr.pipeline import pages as pages_reader, pipeline_runner, report
from prepocr.utils import config, convert
from prepocr.utils.cli import Handler
from prepocr.utils.proxy import task_pool_proxy
from preputils import logging
from preputils.logging import log_config, log_level
from preputils.logging.log_format import LogFormat

logger = logging.get_logger(__name__)


def add_pipeline_arguments(arg_parser: argparse.ArgumentParser) -> Handler:
    arg_parser.add_argument("--config", help="Versioned pipeline config JSON; the flags below override it")
    arg_parser.add_argument("--pages", required=True, help="Pages manifest (JSONL) or synth manifest.jsonl")
    arg_parser.add_argument("--out", help="Run output directory")
    arg_parser.add_argument("--restorer", help="identity | otsu | median3 | exec:<template>")
    arg_parser.add_argument("--mode", choices=[mode.value for mode in RestorationMode])
    arg_parser.add_argument("--fusion", choices=[method.value for method in FusionMethod])
    arg_parser.add_argument("--trim", type=int, choices=constants.SUPPORTED_TRIMS)
    arg_parser.add_argument("--resize-width", type=convert.str_to_resize_width)
    arg_parser.add_argument("--corrector-lm", help="Language model; enables the prep stage with --corrector-channel")
    arg_parser.add_argument("--corrector-channel", help="Error model used as the corrector's channel")
    arg_parser.add_argument("--threshold", type=float, help="Outlier CER threshold")
    arg_parser.add_argument("--seed", type=int)
    evaluation_commands.add_engine_arguments(arg_parser)
    evaluation_commands.add_alignment_arguments(arg_parser)
    return run_pipeline


def pipeline_overrides(opts: argparse.Namespace) -> PipelineConfigModel:
    overrides = PipelineConfigModel.unset()
    overrides.engine = evaluation_commands.engine_overrides(opts)
    overrides.alignment = evaluation_commands.alignment_overrides(opts)
    overrides.fusion = FusionConfigModel.unset()
    overrides.fusion.mode = opts.mode
    overrides.fusion.fusion = opts.fusion
    overrides.fusion.trim = opts.trim
    overrides.fusion.resize_width = opts.resize_width
    overrides.corrector = CorrectorConfigModel.unset()
    overrides.corrector.lm = opts.corrector_lm
    overrides.corrector.channel = opts.corrector_channel
    if opts.corrector_lm and opts.corrector_channel:
        overrides.corrector.enabled = True
    overrides.log_config = LogConfigModel.unset()
    overrides.restorer = opts.restorer
    overrides.outlier_threshold = opts.threshold
    overrides.seed = opts.seed
    overrides.workers = opts.workers
    overrides.output_dir = opts.out
    return overrides


def run_pipeline(opts: argparse.Namespace) -> None:
    if opts.config:
        pipeline_config = config.load_pipeline_config(opts.config)
        _apply_file_logging(opts, pipeline_config.log_config)
    else:
        pipeline_config = PipelineConfigModel()
    pipeline_config.merge(pipeline_overrides(opts))
    if opts.workers is None:
        task_pool_proxy.init(config.get_thread_pool_parallelism_degree(str(pipeline_config.workers)))
    pages = pages_reader.load_pages(opts.pages)
    run_log = _attach_run_log(opts, pipeline_config)
    try:
        pipeline_runner.run_pipeline(pages, pipeline_config)
    finally:
        if run_log is not None:
            log_config.detach_run_log(run_log)


def _attach_run_log(opts: argparse.Namespace, pipeline_config: PipelineConfigModel) -> Optional[LogHandler]:
    output_dir = pipeline_config.output_dir
    if not output_dir:
        return None
    try:
        os.makedirs(output_dir, exist_ok=True)
    except OSError:
        # run_pipeline reports the unwritable directory
        return None
    log_format = opts.log_format if opts.log_format is not None else \
        LogFormat[pipeline_config.log_config.log_format.upper()]
    handler = log_config.attach_run_log(os.path.join(output_dir, constants.RUN_LOG_FILE), log_format)
    log_config.set_run_label(opts.verb)
    return handler


def _apply_file_logging(opts: argparse.Namespace, file_log_config: LogConfigModel) -> None:
    """
    Logging settings of the config file apply where no command line flag was given.
    """
    if opts.log_level is not None and opts.log_format is not None:
        return
    level = opts.log_level if opts.log_level is not None else log_level.from_string(file_log_config.log_level)
    log_format = opts.log_format if opts.log_format is not None else LogFormat[file_log_config.log_format.upper()]
    overrides = {name: log_level.from_string(str(value))
                 for name, value in file_log_config.log_level_overrides.items()}
    overrides.update(opts.log_level_overrides)
    log_config.setup_logging(log_format, level, opts.logger_names, overrides, run_label=opts.verb)


def add_report_arguments(arg_parser: argparse.ArgumentParser) -> Handler:
    arg_parser.add_argument("--out", required=True, help="Output directory of a finished pipeline run")
    return run_report


def run_report(opts: argparse.Namespace) -> None:
    report.regenerate_reports(opts.out)
