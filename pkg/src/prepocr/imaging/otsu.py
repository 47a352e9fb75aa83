"""
Otsu thresholding and the text masks derived from it. Text is dark: foreground is intensity
strictly below the threshold.
"""
from fractions import Fraction

from typing import Optional

import numpy as np

from prepocr import constants
from prepocr.imaging.gray_image import GrayImage

INTENSITY_LEVELS = constants.MAX_INTENSITY + 1


def histogram(img: GrayImage) -> np.ndarray:
    return np.bincount(img.data.ravel(), minlength=INTENSITY_LEVELS).astype(np.int64)


def otsu_threshold(img: GrayImage) -> int:
    """
    Threshold maximizing the between-class variance over the 256-bin histogram, splitting
    intensities into {<= t} and {> t}. A plateau of maximizing thresholds resolves to its midpoint
    (rounded down); a single-intensity image returns that intensity.

    Variances are compared exactly as rationals so ties are real ties.
    """
    hist = [int(count) for count in histogram(img)]
    total = sum(hist)
    weighted_total = sum(level * count for level, count in enumerate(hist))

    best = None
    best_levels = []
    n0 = 0
    s0 = 0
    for t in range(INTENSITY_LEVELS - 1):
        n0 += hist[t]
        s0 += t * hist[t]
        n1 = total - n0
        if n0 == 0 or n1 == 0:
            continue
        # proportional to the between-class variance: (N*s0 - S*n0)^2 / (n0*n1)
        variance = Fraction((total * s0 - weighted_total * n0) ** 2, n0 * n1)
        if best is None or variance > best:
            best = variance
            best_levels = [t]
        elif variance == best:
            best_levels.append(t)

    if not best_levels:
        # single intensity: nothing is darker than it, the mask is empty
        return int(np.flatnonzero(hist)[0])
    return (best_levels[0] + best_levels[-1]) // 2


def foreground_mask(img: GrayImage, threshold: Optional[int] = None) -> np.ndarray:
    if threshold is None:
        threshold = otsu_threshold(img)
    return img.data < threshold


def binarize(img: GrayImage, threshold: Optional[int] = None) -> GrayImage:
    mask = foreground_mask(img, threshold)
    return GrayImage(np.where(mask, constants.BLACK, constants.WHITE).astype(np.uint8))
