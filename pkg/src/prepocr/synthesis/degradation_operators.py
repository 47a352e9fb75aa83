"""
Single-step page degradations. Each operator maps a GrayImage to a new GrayImage of the same size,
drawing any randomness it needs from the generator it is given.
"""
import math
from typing import Callable, Dict

import numpy as np
from PIL import Image, ImageDraw
from scipy import ndimage

from prepocr import constants
from prepocr.imaging import geometry, otsu
from prepocr.imaging.gray_image import GrayImage

TEXTURE_CELL = 32


def add_noise(img: GrayImage, amplitude: float, rng: np.random.Generator) -> GrayImage:
    noise = rng.uniform(-amplitude, amplitude, size=img.data.shape)
    return GrayImage.from_values(img.to_float() + noise)


def reduce_resolution(img: GrayImage, scale: float, _rng: np.random.Generator) -> GrayImage:
    small_width = max(1, int(math.floor(img.width * scale + 0.5)))
    small_height = max(1, int(math.floor(img.height * scale + 0.5)))
    reduced = geometry.resize_bilinear(img, small_width, small_height)
    return geometry.resize_bilinear(reduced, img.width, img.height)


def gaussian_blur(img: GrayImage, radius: float, _rng: np.random.Generator) -> GrayImage:
    return GrayImage.from_values(ndimage.gaussian_filter(img.to_float(), sigma=radius, mode="nearest"))


def overlay_background(img: GrayImage, intensity: float, rng: np.random.Generator) -> GrayImage:
    """
    Multiplies the page by a smooth paper texture: a coarse random grid upsampled with cubic splines.
    """
    grid = rng.random((img.height // TEXTURE_CELL + 2, img.width // TEXTURE_CELL + 2))
    texture = ndimage.zoom(grid, TEXTURE_CELL, order=3, mode="nearest")[:img.height, :img.width]
    texture = np.clip(texture, 0.0, 1.0)
    return GrayImage.from_values(img.to_float() * (1.0 - intensity * texture))


def overlay_stains(img: GrayImage, stains: int, transparency: float, rng: np.random.Generator) -> GrayImage:
    """
    Soft-edged elliptical blobs of a random tone; a stain only ever darkens the page.
    """
    canvas = img.to_float()
    rows, cols = np.mgrid[0:img.height, 0:img.width].astype(np.float64)
    for _ in range(stains):
        center_x = rng.uniform(0, img.width)
        center_y = rng.uniform(0, img.height)
        radius_x = rng.uniform(img.width / 20.0, img.width / 5.0) + 1.0
        radius_y = rng.uniform(img.height / 20.0, img.height / 5.0) + 1.0
        angle = rng.uniform(0.0, math.pi)
        tone = rng.uniform(60.0, 180.0)
        cos_a, sin_a = math.cos(angle), math.sin(angle)
        u = ((cols - center_x) * cos_a + (rows - center_y) * sin_a) / radius_x
        v = (-(cols - center_x) * sin_a + (rows - center_y) * cos_a) / radius_y
        weight = np.clip(1.0 - (u * u + v * v), 0.0, 1.0) ** 0.5 * transparency
        canvas = canvas * (1.0 - weight) + np.minimum(canvas, tone) * weight
    return GrayImage.from_values(canvas)


def add_black_spots(img: GrayImage, count: int, rng: np.random.Generator) -> GrayImage:
    data = img.data.copy()
    rows = rng.integers(0, img.height, size=count)
    cols = rng.integers(0, img.width, size=count)
    data[rows, cols] = constants.BLACK
    return GrayImage(data)


def add_white_patches(img: GrayImage, count: int, size_range, rng: np.random.Generator) -> GrayImage:
    data = img.data.copy()
    low, high = int(size_range[0]), int(size_range[1])
    for _ in range(count):
        patch_width = int(rng.integers(low, high + 1))
        patch_height = int(rng.integers(low, high + 1))
        x0 = int(rng.integers(0, img.width))
        y0 = int(rng.integers(0, img.height))
        data[y0:y0 + patch_height, x0:x0 + patch_width] = constants.WHITE
    return GrayImage(data)


def add_line_artifacts(img: GrayImage, count: int, rng: np.random.Generator) -> GrayImage:
    """
    Straight scratches or folds: random endpoints, 1-3 px wide, black or white with equal odds.
    """
    page = Image.fromarray(np.ascontiguousarray(img.data))
    draw = ImageDraw.Draw(page)
    for _ in range(count):
        start = (float(rng.uniform(0, img.width)), float(rng.uniform(0, img.height)))
        end = (float(rng.uniform(0, img.width)), float(rng.uniform(0, img.height)))
        line_width = int(rng.integers(1, 4))
        colour = constants.BLACK if rng.random() < 0.5 else constants.WHITE
        draw.line([start, end], fill=colour, width=line_width)
    return GrayImage(np.asarray(page, dtype=np.uint8))


def adjust_contrast(img: GrayImage, factor: float, _rng: np.random.Generator) -> GrayImage:
    middle = constants.MAX_INTENSITY / 2.0
    return GrayImage.from_values(middle + factor * (img.to_float() - middle))


def dilate_ink(img: GrayImage, iterations: int, _rng: np.random.Generator) -> GrayImage:
    # ink is dark: a grey minimum filter grows it
    data = img.data
    for _ in range(iterations):
        data = ndimage.grey_erosion(data, size=(3, 3), mode="nearest")
    return GrayImage(data)


def erode_ink(img: GrayImage, iterations: int, _rng: np.random.Generator) -> GrayImage:
    data = img.data
    for _ in range(iterations):
        data = ndimage.grey_dilation(data, size=(3, 3), mode="nearest")
    return GrayImage(data)


def otsu_binarize(img: GrayImage, _rng: np.random.Generator) -> GrayImage:
    return otsu.binarize(img)


OperatorFn = Callable[..., GrayImage]

NOISE = "noise"
RESOLUTION = "resolution"
BLUR = "blur"
BACKGROUND = "background"
STAINS = "stains"
BLACK_SPOTS = "black_spots"
WHITE_PATCHES = "white_patches"
LINES = "lines"
CONTRAST = "contrast"
DILATION = "dilation"
EROSION = "erosion"
OTSU_BINARIZE = "otsu_binarize"

OPERATOR_IDS = (
    NOISE, RESOLUTION, BLUR, BACKGROUND, STAINS, BLACK_SPOTS, WHITE_PATCHES, LINES, CONTRAST, DILATION, EROSION
)

OPERATORS: Dict[str, OperatorFn] = {
    NOISE: add_noise,
    RESOLUTION: reduce_resolution,
    BLUR: gaussian_blur,
    BACKGROUND: overlay_background,
    STAINS: overlay_stains,
    BLACK_SPOTS: add_black_spots,
    WHITE_PATCHES: add_white_patches,
    LINES: add_line_artifacts,
    CONTRAST: adjust_contrast,
    DILATION: dilate_ink,
    EROSION: erode_ink,
    OTSU_BINARIZE: otsu_binarize,
}
