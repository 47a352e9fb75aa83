from typing import List

import numpy as np
from scipy import ndimage

from prepocr import constants
from prepocr.imaging import otsu
from prepocr.imaging.gray_image import GrayImage
from prepocr.models.restorer_kind import RestorerKind
from prepocr.restoration.restorers.abstract_restorer import AbstractRestorer


class OtsuRestorer(AbstractRestorer):
    """
    Reference restorer: binarizes every patch at its own Otsu threshold.

    Patches whose intensity range is below `min_range` carry no text to separate: they become paper
    (white) when their darkest pixel is above `min_value`, ink (black) otherwise. With `prefilter`
    a 3x3 median suppresses speckle before thresholding.
    """
    min_range: int
    min_value: int
    prefilter: bool

    def __init__(self, min_range: int = 32, min_value: int = 64, prefilter: bool = True):
        super(OtsuRestorer, self).__init__(RestorerKind.OTSU)
        self.min_range = min_range
        self.min_value = min_value
        self.prefilter = prefilter

    def restore_batch(self, patches: List[GrayImage], first_index: int = 0) -> List[GrayImage]:
        return [self._restore(patch) for patch in patches]

    def _restore(self, patch: GrayImage) -> GrayImage:
        data = patch.data
        if self.prefilter:
            data = ndimage.median_filter(data, size=3, mode="nearest")
        if int(np.ptp(data)) < self.min_range:
            value = constants.WHITE if int(data.min()) > self.min_value else constants.BLACK
            return GrayImage.filled(patch.width, patch.height, value)
        return otsu.binarize(GrayImage(data))
