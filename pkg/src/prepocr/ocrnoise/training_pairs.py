from typing import Dict, List, Optional, Sequence

from prepocr import constants
from prepocr.alignment.text_normalization import normalize_text
from prepocr.exceptions import ConfigError, EmptyCorpusError
from prepocr.models.error_model import ErrorModel
from prepocr.models.rate_scale import RateScale
from prepocr.models.training_pair import TrainingPair
from prepocr.ocrnoise import rate_calibration
from prepocr.ocrnoise.error_injector import ErrorInjector
from prepocr.utils import json_utils, seeds
from prepocr.utils.proxy import task_pool_proxy
from preputils import logging

logger = logging.get_logger(__name__)

# characters of corpus used to calibrate each target rate
CALIBRATION_SAMPLE_LENGTH = 100000


def chunk_text(text: str, max_length: int = constants.DEFAULT_MAX_PAIR_LENGTH) -> List[str]:
    """
    Splits normalized `text` into non-empty pieces of at most `max_length` characters, cutting
    after the last sentence terminator of each window if there is one, else at its last space,
    else hard at `max_length`.
    """
    if max_length < 1:
        raise ConfigError("Chunk length must be positive, got {}".format(max_length))
    text = normalize_text(text)
    chunks = []
    position = 0
    while position < len(text):
        remaining = text[position:]
        if len(remaining) <= max_length:
            chunks.append(remaining)
            break
        window = text[position:position + max_length + 1]
        cut = _sentence_cut(window, max_length)
        if cut is None:
            space = window.rfind(" ", 1)
            cut = space if space > 0 else max_length
        chunk = text[position:position + cut].strip()
        if chunk:
            chunks.append(chunk)
        position += cut
        while position < len(text) and text[position] == " ":
            position += 1
    return chunks


def _sentence_cut(window: str, max_length: int) -> Optional[int]:
    # a terminator counts when a space (or the window end) follows it
    for index in range(min(len(window), max_length) - 1, -1, -1):
        if window[index] in constants.SENTENCE_TERMINATORS and (index + 1 >= len(window) or window[index + 1] == " "):
            return index + 1
    return None


def calibrate_grid(model: ErrorModel, rate_grid: Sequence[float], sample: str, seed: int,
                   injector: Optional[ErrorInjector] = None) -> Dict[float, RateScale]:
    injector = injector or ErrorInjector(model)
    return {
        target: rate_calibration.calibrate_rate(model, target, sample, seed, injector=injector)
        for target in sorted(set(rate_grid))
    }


def make_training_pairs(corpus: str, model: ErrorModel, rate_grid: Sequence[float],
                        max_length: int = constants.DEFAULT_MAX_PAIR_LENGTH, seed: int = constants.DEFAULT_SEED,
                        out_path: Optional[str] = None,
                        scales: Optional[Dict[float, RateScale]] = None) -> List[TrainingPair]:
    """
    Cuts `corpus` into chunks and corrupts every chunk at a target rate drawn from `rate_grid`.
    Chunk `i` derives all its randomness from `mix(seed, i)`. With `out_path` the pairs are
    written as JSONL records {clean, noisy, target_cer, lambda, seed}.
    """
    if not rate_grid:
        raise ConfigError("Rate grid is empty")
    chunks = chunk_text(corpus, max_length)
    if not chunks:
        raise EmptyCorpusError("Corpus has no text to build training pairs from")
    injector = ErrorInjector(model)
    grid = list(rate_grid)
    if scales is None:
        sample = normalize_text(corpus)[:CALIBRATION_SAMPLE_LENGTH]
        scales = calibrate_grid(model, grid, sample, seed, injector)

    def make_pair(item) -> TrainingPair:
        index, clean = item
        pair_seed = seeds.mix(seed, index)
        rng = seeds.create_rng(pair_seed)
        target = grid[int(rng.integers(0, len(grid)))]
        scale = scales[target]
        noisy = injector.inject(clean, scale.rate_lambda, seeds.mix(pair_seed, 1))
        return TrainingPair(clean, noisy, target, scale.rate_lambda, pair_seed)

    pairs = task_pool_proxy.map_tasks(make_pair, list(enumerate(chunks)))
    if out_path:
        json_utils.write_jsonl(out_path, (pair.to_record() for pair in pairs))
        logger.info("Wrote {} training pairs to {}", len(pairs), out_path)
    return pairs
