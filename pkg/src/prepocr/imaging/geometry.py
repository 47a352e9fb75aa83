import math

import numpy as np
from PIL import Image

from prepocr.exceptions import ImageDimensionError
from prepocr.imaging.gray_image import GrayImage
from prepocr.models.rect import Rect


def crop(img: GrayImage, rect: Rect) -> GrayImage:
    if not rect.fits(img.width, img.height):
        raise ImageDimensionError("{} does not fit inside {}".format(rect, img))
    return GrayImage(img.data[rect.y0:rect.y0 + rect.height, rect.x0:rect.x0 + rect.width])


def pad_replicate(img: GrayImage, top: int, left: int, bottom: int, right: int) -> GrayImage:
    if min(top, left, bottom, right) < 0:
        raise ValueError("Pad amounts must be non-negative: {}".format((top, left, bottom, right)))
    if top == left == bottom == right == 0:
        return img
    return GrayImage(np.pad(img.data, ((top, bottom), (left, right)), mode="edge"))


def resize_bilinear(img: GrayImage, width: int, height: int) -> GrayImage:
    if width < 1 or height < 1:
        raise ImageDimensionError("Cannot resize to {}x{}".format(width, height))
    if width == img.width and height == img.height:
        return img
    source = Image.fromarray(np.ascontiguousarray(img.data))
    resized = source.resize((width, height), resample=Image.Resampling.BILINEAR)
    return GrayImage(np.asarray(resized, dtype=np.uint8))


def resize_to_width(img: GrayImage, width: int) -> GrayImage:
    """
    Aspect-preserving bilinear resize; the height is rounded half up and kept at least 1 px.
    """
    height = max(1, int(math.floor(img.height * width / img.width + 0.5)))
    return resize_bilinear(img, width, height)
