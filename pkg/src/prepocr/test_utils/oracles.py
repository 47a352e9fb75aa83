"""
Brute-force reference computations the fast implementations are checked against.
"""
import functools
import math
from typing import List, Tuple

from prepocr.imaging import otsu
from prepocr.imaging.gray_image import GrayImage


def recursive_distance(a: str, b: str) -> int:
    @functools.lru_cache(maxsize=None)
    def distance(i: int, j: int) -> int:
        if i == len(a):
            return len(b) - j
        if j == len(b):
            return len(a) - i
        return min(
            distance(i + 1, j) + 1,
            distance(i, j + 1) + 1,
            distance(i + 1, j + 1) + (a[i] != b[j]),
        )
    return distance(0, 0)


def random_text(rng, max_length: int, alphabet: str = "abc ") -> str:
    length = int(rng.integers(0, max_length + 1))
    return "".join(alphabet[int(index)] for index in rng.integers(0, len(alphabet), size=length))


def naive_amp(pairs: List[Tuple[GrayImage, GrayImage]], margin: int = 0) -> float:
    """
    Per-pixel masked PSNR means over equally sized square pairs, averaged over the covered pixels
    at least `margin` pixels inside every side.
    """
    size = pairs[0][0].width
    sums = [[0.0] * size for _ in range(size)]
    counts = [[0] * size for _ in range(size)]
    for gt, pred in pairs:
        gt_threshold = otsu.otsu_threshold(gt)
        pred_threshold = otsu.otsu_threshold(pred)
        for y in range(size):
            for x in range(size):
                g = int(gt.data[y, x])
                p = int(pred.data[y, x])
                if g < gt_threshold or p < pred_threshold:
                    error = (g - p) ** 2
                    sums[y][x] += 100.0 if error == 0 else 10.0 * math.log10(255.0 ** 2 / error)
                    counts[y][x] += 1
    means = [
        sums[y][x] / counts[y][x]
        for y in range(margin, size - margin) for x in range(margin, size - margin) if counts[y][x]
    ]
    return sum(means) / len(means)
