import argparse
from typing import Callable, Dict, List, Optional

from prepocr import constants
from prepocr.commands import (correction_commands, evaluation_commands, noise_commands, pipeline_commands,
                              restoration_commands, synthesis_commands)
from prepocr.exceptions import PrepError
from prepocr.utils import cli
from prepocr.utils.proxy import task_pool_proxy
from preputils import constants as utils_constants
from preputils import logging
from preputils.logging import log_config

logger = logging.get_logger(__name__)

VERBS: Dict[str, Callable[[argparse.ArgumentParser], cli.Handler]] = {
    "synth": synthesis_commands.add_synth_arguments,
    "degrade": synthesis_commands.add_degrade_arguments,
    "restore": restoration_commands.add_restore_arguments,
    "amp": restoration_commands.add_amp_arguments,
    "ocr": evaluation_commands.add_ocr_arguments,
    "align": evaluation_commands.add_align_arguments,
    "extract-errors": noise_commands.add_extract_errors_arguments,
    "calibrate": noise_commands.add_calibrate_arguments,
    "inject": noise_commands.add_inject_arguments,
    "make-pairs": noise_commands.add_make_pairs_arguments,
    "lm-train": correction_commands.add_lm_train_arguments,
    "correct": correction_commands.add_correct_arguments,
    "pipeline": pipeline_commands.add_pipeline_arguments,
    "report": pipeline_commands.add_report_arguments,
}

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_UNHANDLED = 2


def run(args: Optional[List[str]] = None, logger_names: Optional[List[str]] = None) -> int:
    opts = cli.get_argument_parser(VERBS).parse_args(args)
    opts.logger_names = logger_names or cli.LOGGER_NAMES
    log_config.setup_logging(
        opts.log_format if opts.log_format is not None else utils_constants.DEFAULT_LOG_FORMAT,
        opts.log_level if opts.log_level is not None else utils_constants.DEFAULT_LOG_LEVEL,
        opts.logger_names,
        opts.log_level_overrides,
        run_label=opts.verb,
    )

    try:
        task_pool_proxy.init(opts.workers or constants.DEFAULT_THREAD_POOL_PARALLELISM_DEGREE)
        logger.debug("Initialized task thread pool parallelism degree to {}.", task_pool_proxy.get_pool_size())
        logger.trace("Running {} with {}", opts.verb, opts)
        opts.handler(opts)
        return EXIT_OK
    except PrepError as e:
        logger.fatal("{} failed: {}", opts.verb, e, exc_info=False)
        return EXIT_FAILED
    except Exception as e:  # pylint: disable=broad-except
        logger.fatal("Unhandled exception {} raised, terminating!", e)
        return EXIT_UNHANDLED
    finally:
        task_pool_proxy.shutdown()
