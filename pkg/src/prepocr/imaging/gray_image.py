import numpy as np

from prepocr import constants
from prepocr.exceptions import ImageDimensionError


class GrayImage:
    """
    8-bit grayscale raster, 0 = black, 255 = white.

    `data` is a read-only row-major `numpy.uint8` array of shape (height, width); every stage that
    produces pixels builds a new image instead of writing into an existing one.
    """
    width: int
    height: int
    data: np.ndarray

    def __init__(self, data: np.ndarray):
        if data.ndim != 2:
            raise ImageDimensionError("Expected a 2-D intensity array, got shape {}".format(data.shape))
        if data.dtype != np.uint8:
            raise TypeError("GrayImage data must be uint8, got {}".format(data.dtype))
        height, width = data.shape
        if width < 1 or height < 1:
            raise ImageDimensionError("Image must be at least 1x1, got {}x{}".format(width, height))
        data = np.array(data, dtype=np.uint8, copy=True)
        data.setflags(write=False)
        self.data = data
        self.width = width
        self.height = height

    @classmethod
    def from_values(cls, values: np.ndarray) -> "GrayImage":
        """
        Builds an image from arbitrary numeric values: clamps to [0, 255] and rounds half away from zero.
        """
        return cls(quantize(values))

    @classmethod
    def filled(cls, width: int, height: int, value: int = constants.WHITE) -> "GrayImage":
        return cls(np.full((height, width), value, dtype=np.uint8))

    def to_float(self) -> np.ndarray:
        return self.data.astype(np.float64)

    def same_size(self, other: "GrayImage") -> bool:
        return self.width == other.width and self.height == other.height

    def __eq__(self, other) -> bool:
        if not isinstance(other, GrayImage):
            return NotImplemented
        return self.same_size(other) and bool(np.array_equal(self.data, other.data))

    def __hash__(self):
        return hash((self.width, self.height, self.data.tobytes()))

    def __repr__(self):
        return "GrayImage<{}x{}>".format(self.width, self.height)


def quantize(values: np.ndarray) -> np.ndarray:
    """
    Clamps to [0, 255] then rounds half away from zero; on the clamped range that is floor(x + 0.5).
    """
    values = np.asarray(values)
    if values.dtype == np.uint8:
        return values
    if np.issubdtype(values.dtype, np.integer) or values.dtype == np.bool_:
        return np.clip(values, constants.BLACK, constants.MAX_INTENSITY).astype(np.uint8)
    clipped = np.clip(values.astype(np.float64), constants.BLACK, constants.MAX_INTENSITY)
    return np.floor(clipped + 0.5).astype(np.uint8)
