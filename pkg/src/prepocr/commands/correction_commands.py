import argparse

from prepocr import constants
from prepocr.commands import command_utils
from prepocr.correction import char_lm, noisy_channel_corrector
from prepocr.models.beam_config import BeamConfig
from prepocr.ocrnoise import error_model_io
from prepocr.utils.cli import Handler
from preputils import logging

logger = logging.get_logger(__name__)


def add_lm_train_arguments(arg_parser: argparse.ArgumentParser) -> Handler:
    arg_parser.add_argument("--corpus", required=True, help="In-domain clean text")
    arg_parser.add_argument("--order", type=int, default=constants.DEFAULT_LM_ORDER)
    arg_parser.add_argument("--k", type=float, default=constants.DEFAULT_LM_K, help="Add-k smoothing constant")
    arg_parser.add_argument("--out", required=True, help="Language model file to write")
    return run_lm_train


def run_lm_train(opts: argparse.Namespace) -> None:
    model = char_lm.train_char_lm(command_utils.read_input_text(opts.corpus), opts.order, opts.k)
    char_lm.save_char_lm(model, opts.out)
    logger.info("Wrote {} to {}", model, opts.out)


def add_correct_arguments(arg_parser: argparse.ArgumentParser) -> Handler:
    arg_parser.add_argument("--lm", required=True, help="Language model written by lm-train")
    arg_parser.add_argument("--channel", required=True, help="Error model JSON used as the noisy channel")
    arg_parser.add_argument("--input", required=True, help="Noisy text, - for stdin; lines are corrected apart")
    arg_parser.add_argument("--output", help="Corrected text (default: stdout)")
    arg_parser.add_argument("--beam-width", type=int, default=constants.DEFAULT_BEAM_WIDTH)
    arg_parser.add_argument("--channel-weight", type=float, default=1.0)
    arg_parser.add_argument("--lm-weight", type=float, default=1.0)
    arg_parser.add_argument("--max-edits", type=int, default=constants.DEFAULT_MAX_EDITS_PER_WINDOW,
                            help="Edits allowed within any --edit-window input characters")
    arg_parser.add_argument("--edit-window", type=int, default=constants.DEFAULT_EDIT_WINDOW)
    return run_correct


def run_correct(opts: argparse.Namespace) -> None:
    lm = char_lm.load_char_lm(opts.lm)
    channel = error_model_io.load_error_model(opts.channel)
    beam = BeamConfig(
        beam_width=opts.beam_width,
        channel_weight=opts.channel_weight,
        lm_weight=opts.lm_weight,
        max_edits_per_window=opts.max_edits,
        edit_window=opts.edit_window,
    ).validate()
    lines = command_utils.read_input_text(opts.input).split("\n")
    corrected = noisy_channel_corrector.correct_lines(lines, lm, channel, beam)
    changed = sum(before != after for before, after in zip(lines, corrected))
    logger.info("{} corrected {} of {} lines", constants.REFERENCE_CORRECTOR_LABEL, changed, len(lines))
    command_utils.write_output_text(opts.output, "\n".join(corrected))
