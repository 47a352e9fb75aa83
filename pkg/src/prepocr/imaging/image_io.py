import io
import os

import numpy as np
from PIL import Image

from prepocr import constants
from prepocr.imaging.gray_image import GrayImage
from prepocr.utils import crypto
from preputils import logging

logger = logging.get_logger(__name__)


def load_gray(path: str) -> GrayImage:
    """
    Reads any Pillow-readable image as 8-bit grayscale. Colour inputs are converted with the
    BT.601 luma weights and quantized.
    """
    with Image.open(path) as image:
        image.load()
        if image.mode == "L":
            return GrayImage(np.asarray(image, dtype=np.uint8))
        if image.mode in ("1", "LA", "I", "I;16", "F"):
            if image.mode in ("I", "I;16", "F"):
                logger.debug("Clamping {} image {} to 8 bits", image.mode, path)
                return GrayImage.from_values(np.asarray(image, dtype=np.float64))
            return GrayImage(np.asarray(image.convert("L"), dtype=np.uint8))
        rgb = np.asarray(image.convert("RGB"), dtype=np.float64)
    weights = np.asarray(constants.LUMA_WEIGHTS, dtype=np.float64)
    return GrayImage.from_values(rgb @ weights)


def encode_png(img: GrayImage) -> bytes:
    buffer = io.BytesIO()
    Image.fromarray(np.ascontiguousarray(img.data)).save(buffer, format="PNG")
    return buffer.getvalue()


def save_png(img: GrayImage, path: str) -> None:
    parent = os.path.dirname(os.path.abspath(path))
    os.makedirs(parent, exist_ok=True)
    with open(path, "wb") as png_file:
        png_file.write(encode_png(img))


def checksum(img: GrayImage) -> str:
    """
    sha256 over the dimensions and raw pixels, independent of PNG encoder settings.
    """
    header = "{}x{}:".format(img.width, img.height).encode("ascii")
    return crypto.sha256_hex(header, img.data.tobytes())
