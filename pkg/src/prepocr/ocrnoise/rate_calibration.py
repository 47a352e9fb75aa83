from typing import Optional

import Levenshtein

from prepocr import constants
from prepocr.exceptions import ConfigError, UndefinedRateError
from prepocr.models.error_model import ErrorModel
from prepocr.models.rate_scale import RateScale
from prepocr.ocrnoise.error_injector import ErrorInjector, chunked_injection
from prepocr.utils.proxy import task_pool_proxy
from preputils import logging

logger = logging.get_logger(__name__)


def measure_cer(sample: str, injector: ErrorInjector, rate_lambda: float, seed: int,
                chunk_length: int = constants.CALIBRATION_CHUNK_LENGTH) -> float:
    """
    Character error rate of `sample` after injection at `rate_lambda`, measured chunk by chunk.
    """
    if not sample:
        raise UndefinedRateError("Cannot measure an error rate on an empty sample")
    pairs = chunked_injection(sample, injector, rate_lambda, seed, chunk_length)
    distance = sum(task_pool_proxy.map_tasks(lambda pair: Levenshtein.distance(pair[0], pair[1]), pairs))
    return distance / len(sample)


def calibrate_rate(model: ErrorModel, target_cer: float, sample: str, seed: int = constants.DEFAULT_SEED,
                   tolerance: float = constants.CALIBRATION_RELATIVE_TOLERANCE,
                   max_iterations: int = constants.CALIBRATION_MAX_ITERATIONS,
                   max_lambda: float = constants.DEFAULT_MAX_LAMBDA,
                   injector: Optional[ErrorInjector] = None) -> RateScale:
    """
    Bisects the rate multiplier until the error rate measured on `sample` is within `tolerance`
    (relative) of `target_cer`. Every measurement reuses `seed`, so the measured rate is monotone in
    the multiplier. A target above the rate reachable at the multiplier ceiling is reported as
    saturated, with the ceiling and its measured rate.
    """
    if target_cer < 0:
        raise ConfigError("Target CER must be non-negative, got {}".format(target_cer))
    if target_cer == 0:
        return RateScale(0.0, target_cer)
    injector = injector or ErrorInjector(model)

    high = injector.lambda_ceiling(max_lambda)
    measured_high = measure_cer(sample, injector, high, seed) if high > 0 else 0.0
    if measured_high < target_cer * (1.0 - tolerance):
        logger.warning("Target CER {} unreachable: lambda ceiling {} yields {}", target_cer, high, measured_high)
        return RateScale(high, target_cer, measured_high, saturated=True, iterations=1)
    if abs(measured_high - target_cer) <= tolerance * target_cer:
        return RateScale(high, target_cer, measured_high, iterations=1)

    low = 0.0
    best = RateScale(high, target_cer, measured_high, iterations=1)
    for iteration in range(1, max_iterations + 1):
        middle = (low + high) / 2.0
        measured = measure_cer(sample, injector, middle, seed)
        if abs(measured - target_cer) < abs(best.measured_cer - target_cer):
            best = RateScale(middle, target_cer, measured)
        best.iterations = iteration + 1
        logger.trace("Calibration step {}: lambda {} -> CER {}", iteration, middle, measured)
        if abs(measured - target_cer) <= tolerance * target_cer:
            break
        if measured < target_cer:
            low = middle
        else:
            high = middle
    logger.debug("Calibrated lambda {} for target CER {} (measured {}, {} measurements)",
                 best.rate_lambda, target_cer, best.measured_cer, best.iterations)
    return best
