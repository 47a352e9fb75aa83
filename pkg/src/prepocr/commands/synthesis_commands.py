import argparse

from prepocr.commands import command_utils
from prepocr.imaging import image_io
from prepocr.models.config.dataset_config_model import DatasetConfigModel
from prepocr.synthesis import dataset_generator, degrader, noise_levels
from prepocr.utils import convert, json_utils
from prepocr.utils.cli import Handler
from preputils import logging

logger = logging.get_logger(__name__)


def add_synth_arguments(arg_parser: argparse.ArgumentParser) -> Handler:
    arg_parser.add_argument("--corpus", required=True, help="UTF-8 text the pages are rendered from")
    arg_parser.add_argument("--out", required=True, help="Directory receiving clean/, degraded/ and manifest.jsonl")
    arg_parser.add_argument("--config", help="JSON dataset config; the flags below override it")
    arg_parser.add_argument("--count", type=int, help="Number of pairs")
    arg_parser.add_argument("--levels", type=convert.str_to_level_weights,
                            help="Noise level weights, e.g. 1=0.2,2=0.3,3=0.3,4=0.2 or 3")
    arg_parser.add_argument("--fonts", type=lambda value: [font for font in value.split(",") if font],
                            help="Comma separated font files; \"default\" is Pillow's bundled font")
    arg_parser.add_argument("--seed", type=int, help="Master seed")
    arg_parser.add_argument("--stitch-fraction", type=float, help="Share of stitched two-render pages")
    arg_parser.add_argument("--lines-per-page", type=int)
    arg_parser.add_argument("--font-size", type=int)
    arg_parser.add_argument("--wrap-width", type=int, help="Characters per rendered line")
    arg_parser.add_argument("--noise-levels", help="JSON file overriding noise level fields")
    return run_synth


def run_synth(opts: argparse.Namespace) -> None:
    overrides = DatasetConfigModel.unset()
    overrides.count = opts.count
    overrides.level_weights = opts.levels
    overrides.fonts = opts.fonts
    overrides.master_seed = opts.seed
    overrides.stitch_fraction = opts.stitch_fraction
    overrides.lines_per_page = opts.lines_per_page
    overrides.font_size = opts.font_size
    overrides.wrap_width = opts.wrap_width
    overrides.noise_levels_path = opts.noise_levels
    dataset_config = command_utils.load_config(DatasetConfigModel, opts.config, overrides)
    corpus = command_utils.read_input_text(opts.corpus)
    dataset_generator.generate_dataset(corpus, dataset_config, opts.out)


def add_degrade_arguments(arg_parser: argparse.ArgumentParser) -> Handler:
    arg_parser.add_argument("--input", required=True, help="Clean image")
    arg_parser.add_argument("--output", required=True, help="Degraded PNG to write")
    arg_parser.add_argument("--level", type=int, required=True, help="Noise level 1-4")
    arg_parser.add_argument("--seed", type=int, default=0)
    arg_parser.add_argument("--noise-levels", help="JSON file overriding noise level fields")
    arg_parser.add_argument("--params-out", help="Optional JSON receiving the applied operators and parameters")
    return run_degrade


def run_degrade(opts: argparse.Namespace) -> None:
    levels = noise_levels.load_noise_levels(opts.noise_levels)
    level = levels.get(opts.level) or noise_levels.default_level(opts.level)
    result = degrader.degrade(image_io.load_gray(opts.input), level, opts.seed)
    image_io.save_png(result.image, opts.output)
    if opts.params_out:
        json_utils.write_json(opts.params_out, {
            "level": opts.level,
            "seed": opts.seed,
            "op_order": result.op_order,
            "params": result.params,
            "binarized": result.binarized,
        })
    logger.info("Degraded {} at level {}: {}", opts.input, opts.level, ", ".join(result.op_order) or "no-op")
