import argparse
from typing import List, Tuple

from prepocr import constants
from prepocr.alignment.text_normalization import normalize_text
from prepocr.commands import command_utils
from prepocr.exceptions import ConfigError
from prepocr.models.config.alignment_config_model import AlignmentConfigModel
from prepocr.ocrnoise import error_extraction, error_model_io, rate_calibration, training_pairs
from prepocr.ocrnoise.error_injector import ErrorInjector
from prepocr.utils import convert, json_utils
from prepocr.utils.cli import Handler
from preputils import logging

logger = logging.get_logger(__name__)


def add_extract_errors_arguments(arg_parser: argparse.ArgumentParser) -> Handler:
    arg_parser.add_argument("--pairs", help="JSONL of {\"gt\": ..., \"ocr\": ...} records")
    arg_parser.add_argument("--gt", help="Ground truth text, paired with --ocr")
    arg_parser.add_argument("--ocr", help="OCR text of the same content as --gt")
    arg_parser.add_argument("--insertion-rate", type=float, default=0.0,
                            help="Global spurious insertion rate stored with the model")
    arg_parser.add_argument("--out", required=True, help="Error model JSON to write")
    return run_extract_errors


def _read_pairs(opts: argparse.Namespace) -> List[Tuple[str, str]]:
    pairs = []
    if opts.pairs:
        for record in json_utils.iter_jsonl(opts.pairs):
            if not isinstance(record, dict) or "gt" not in record or "ocr" not in record:
                raise ConfigError("Every record of {} needs \"gt\" and \"ocr\"".format(opts.pairs))
            pairs.append((record["gt"], record["ocr"]))
    if opts.gt or opts.ocr:
        if not (opts.gt and opts.ocr):
            raise ConfigError("--gt and --ocr go together")
        pairs.append((command_utils.read_input_text(opts.gt), command_utils.read_input_text(opts.ocr)))
    if not pairs:
        raise ConfigError("Give --pairs or --gt/--ocr")
    return pairs


def run_extract_errors(opts: argparse.Namespace) -> None:
    if opts.insertion_rate < 0:
        raise ConfigError("Insertion rate must be non-negative")
    model = error_extraction.extract_error_model_from_texts(_read_pairs(opts), AlignmentConfigModel())
    model.insertion_rate = opts.insertion_rate
    error_model_io.save_error_model(model, opts.out)
    logger.info("Error model with {} sources written to {}", len(model.sources()), opts.out)


def add_calibrate_arguments(arg_parser: argparse.ArgumentParser) -> Handler:
    arg_parser.add_argument("--model", required=True, help="Error model JSON")
    arg_parser.add_argument("--sample", required=True, help="Clean text the rate is measured on")
    arg_parser.add_argument("--target-cer", type=float, required=True)
    arg_parser.add_argument("--seed", type=int, default=constants.DEFAULT_SEED)
    arg_parser.add_argument("--max-lambda", type=float, default=constants.DEFAULT_MAX_LAMBDA)
    arg_parser.add_argument("--out", help="JSON receiving the rate scale (default: stdout)")
    return run_calibrate


def run_calibrate(opts: argparse.Namespace) -> None:
    model = error_model_io.load_error_model(opts.model)
    sample = normalize_text(command_utils.read_input_text(opts.sample))
    scale = rate_calibration.calibrate_rate(model, opts.target_cer, sample, opts.seed, max_lambda=opts.max_lambda)
    if scale.saturated:
        logger.warning("Target CER {} is out of reach; lambda capped at {} (measured {})", opts.target_cer,
                       scale.rate_lambda, scale.measured_cer)
    if opts.out:
        json_utils.write_json(opts.out, scale)
    else:
        command_utils.write_output_text(None, json_utils.serialize(scale) + "\n")


def add_inject_arguments(arg_parser: argparse.ArgumentParser) -> Handler:
    arg_parser.add_argument("--model", required=True, help="Error model JSON")
    arg_parser.add_argument("--input", required=True, help="Clean text, - for stdin")
    arg_parser.add_argument("--output", help="Noisy text (default: stdout)")
    rate = arg_parser.add_mutually_exclusive_group(required=True)
    rate.add_argument("--rate-lambda", type=float, help="Rate multiplier")
    rate.add_argument("--target-cer", type=float, help="Calibrate the multiplier on the input first")
    arg_parser.add_argument("--seed", type=int, default=constants.DEFAULT_SEED)
    return run_inject


def run_inject(opts: argparse.Namespace) -> None:
    model = error_model_io.load_error_model(opts.model)
    text = command_utils.read_input_text(opts.input)
    injector = ErrorInjector(model)
    rate_lambda = opts.rate_lambda
    if rate_lambda is None:
        sample = normalize_text(text)[:training_pairs.CALIBRATION_SAMPLE_LENGTH]
        scale = rate_calibration.calibrate_rate(model, opts.target_cer, sample, opts.seed, injector=injector)
        rate_lambda = scale.rate_lambda
        logger.info("Calibrated lambda {} for target CER {} (measured {})", rate_lambda, opts.target_cer,
                    scale.measured_cer)
    if rate_lambda < 0:
        raise ConfigError("Rate multiplier must be non-negative, got {}".format(rate_lambda))
    command_utils.write_output_text(opts.output, injector.inject(text, rate_lambda, opts.seed))


def add_make_pairs_arguments(arg_parser: argparse.ArgumentParser) -> Handler:
    arg_parser.add_argument("--corpus", required=True, help="Clean text")
    arg_parser.add_argument("--model", required=True, help="Error model JSON")
    arg_parser.add_argument("--rates", type=convert.str_to_float_list, default=[0.02, 0.05, 0.1, 0.2],
                            help="Target CER grid, e.g. 0.02,0.05,0.1")
    arg_parser.add_argument("--max-length", type=int, default=constants.DEFAULT_MAX_PAIR_LENGTH)
    arg_parser.add_argument("--seed", type=int, default=constants.DEFAULT_SEED)
    arg_parser.add_argument("--out", required=True, help="JSONL of training pairs")
    return run_make_pairs


def run_make_pairs(opts: argparse.Namespace) -> None:
    model = error_model_io.load_error_model(opts.model)
    corpus = command_utils.read_input_text(opts.corpus)
    training_pairs.make_training_pairs(corpus, model, opts.rates, opts.max_length, opts.seed, opts.out)
