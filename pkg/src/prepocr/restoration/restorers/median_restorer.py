from typing import List

from scipy import ndimage

from prepocr.imaging.gray_image import GrayImage
from prepocr.models.restorer_kind import RestorerKind
from prepocr.restoration.restorers.abstract_restorer import AbstractRestorer


class MedianRestorer(AbstractRestorer):
    """
    3x3 median denoiser, edges replicated.
    """

    def __init__(self):
        super(MedianRestorer, self).__init__(RestorerKind.MEDIAN3)

    def restore_batch(self, patches: List[GrayImage], first_index: int = 0) -> List[GrayImage]:
        return [GrayImage(ndimage.median_filter(patch.data, size=3, mode="nearest")) for patch in patches]
