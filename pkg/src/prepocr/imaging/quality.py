import math

import numpy as np

from prepocr import constants
from prepocr.exceptions import ImageDimensionError
from prepocr.imaging.gray_image import GrayImage

PEAK_SQUARED = constants.MAX_INTENSITY ** 2


def mse(a: GrayImage, b: GrayImage) -> float:
    if not a.same_size(b):
        raise ImageDimensionError("Cannot compare {} with {}".format(a, b))
    diff = a.data.astype(np.int64) - b.data.astype(np.int64)
    return float(np.sum(diff * diff)) / diff.size


def psnr(a: GrayImage, b: GrayImage) -> float:
    """
    10*log10(255^2 / MSE) in dB; `math.inf` when the images are identical. Capping is left to callers.
    """
    error = mse(a, b)
    if error == 0:
        return math.inf
    return 10.0 * math.log10(PEAK_SQUARED / error)
