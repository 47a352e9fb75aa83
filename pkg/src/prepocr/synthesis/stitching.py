from typing import List

import numpy as np

from prepocr.exceptions import ImageDimensionError
from prepocr.imaging import geometry
from prepocr.imaging.gray_image import GrayImage


def stitch_pages(pages: List[GrayImage]) -> GrayImage:
    """
    Stacks pages top to bottom after scaling each to the narrowest page width (aspect preserved).
    """
    if len(pages) < 2:
        raise ImageDimensionError("Stitching needs at least two pages, got {}".format(len(pages)))
    width = min(page.width for page in pages)
    scaled = [page if page.width == width else geometry.resize_to_width(page, width) for page in pages]
    return GrayImage(np.vstack([page.data for page in scaled]))
