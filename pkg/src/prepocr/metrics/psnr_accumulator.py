import numpy as np

from prepocr import constants
from prepocr.exceptions import ImageDimensionError


class PsnrAccumulator:
    """
    Per-pixel running PSNR sums and contribution counts over a set of equally sized patches.

    `sum_map` holds 0 wherever `count_map` is 0. Accumulators of the same shape combine with
    `merge`, in any order.
    """
    width: int
    height: int
    sum_map: np.ndarray
    count_map: np.ndarray

    def __init__(self, width: int = constants.PATCH_SIZE, height: int = constants.PATCH_SIZE):
        if width < 1 or height < 1:
            raise ImageDimensionError("Accumulator must be at least 1x1, got {}x{}".format(width, height))
        self.width = width
        self.height = height
        self.sum_map = np.zeros((height, width), dtype=np.float64)
        self.count_map = np.zeros((height, width), dtype=np.int64)

    def accumulate(self, psnr_map: np.ndarray, mask: np.ndarray) -> "PsnrAccumulator":
        shape = (self.height, self.width)
        if psnr_map.shape != shape or mask.shape != shape:
            raise ImageDimensionError(
                "Cannot accumulate map {} / mask {} into {}x{} accumulator".format(
                    psnr_map.shape, mask.shape, self.width, self.height
                )
            )
        mask = mask.astype(bool)
        self.sum_map[mask] += psnr_map[mask]
        self.count_map[mask] += 1
        return self

    def merge(self, other: "PsnrAccumulator") -> "PsnrAccumulator":
        if (other.width, other.height) != (self.width, self.height):
            raise ImageDimensionError("Cannot merge {} into {}".format(other, self))
        self.sum_map += other.sum_map
        self.count_map += other.count_map
        return self

    def crop(self, margin: int) -> "PsnrAccumulator":
        """
        New accumulator holding only the concentric region `margin` pixels inside every side.
        """
        if margin < 0 or 2 * margin >= min(self.width, self.height):
            raise ImageDimensionError("Margin {} leaves nothing of {}".format(margin, self))
        cropped = PsnrAccumulator(self.width - 2 * margin, self.height - 2 * margin)
        cropped.sum_map = self.sum_map[margin:self.height - margin, margin:self.width - margin].copy()
        cropped.count_map = self.count_map[margin:self.height - margin, margin:self.width - margin].copy()
        return cropped

    def mean_map(self) -> np.ndarray:
        """
        sum / count where count > 0, NaN elsewhere.
        """
        mean = np.full(self.sum_map.shape, np.nan, dtype=np.float64)
        covered = self.count_map > 0
        mean[covered] = self.sum_map[covered] / self.count_map[covered]
        return mean

    def total_count(self) -> int:
        return int(self.count_map.sum())

    def __repr__(self):
        return "PsnrAccumulator<{}x{}, {} samples>".format(self.width, self.height, self.total_count())
