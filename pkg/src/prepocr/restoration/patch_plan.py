import math
from dataclasses import dataclass
from typing import List, Tuple

from prepocr import constants
from prepocr.exceptions import ConfigError, ImageDimensionError
from prepocr.models.rect import Rect
from prepocr.models.scan_direction import ScanDirection


@dataclass
class PatchPlan:
    """
    Patch geometry of one directional pass over a `width` x `height` image.

    The image is replicate-padded by `trim` on every edge plus alignment padding on the two edges
    opposite the scan origin; patches of `patch_size` are laid at `stride` offsets in padded
    coordinates. Shrinking every patch by `trim` on all sides gives retained centers that tile the
    padded area `[trim, trim + stride * grid)` and therefore cover the original image exactly once.
    """
    width: int
    height: int
    direction: ScanDirection
    patch_size: int
    trim: int
    stride: int
    rows: int
    cols: int
    # top, left, bottom, right
    padding: Tuple[int, int, int, int]
    patches: List[Rect]

    def padded_size(self) -> Tuple[int, int]:
        top, left, bottom, right = self.padding
        return self.width + left + right, self.height + top + bottom

    def retained_center(self, patch: Rect) -> Rect:
        return Rect(patch.x0 + self.trim, patch.y0 + self.trim, self.stride, self.stride)

    def original_area(self) -> Rect:
        top, left, _, _ = self.padding
        return Rect(left, top, self.width, self.height)


def plan_patches(width: int, height: int, direction: ScanDirection, trim: int,
                 patch_size: int = constants.PATCH_SIZE) -> PatchPlan:
    if width < 1 or height < 1:
        raise ImageDimensionError("Cannot plan patches for a {}x{} image".format(width, height))
    if trim not in constants.SUPPORTED_TRIMS:
        raise ConfigError("Unsupported trim {}; expected one of {}".format(trim, constants.SUPPORTED_TRIMS))
    stride = patch_size - 2 * trim
    if stride < 1:
        raise ConfigError("Patch size {} leaves no retained center at trim {}".format(patch_size, trim))

    rows = math.ceil(height / stride)
    cols = math.ceil(width / stride)
    align_y = stride * rows - height
    align_x = stride * cols - width
    from_top = direction in (ScanDirection.TL_BR, ScanDirection.TR_BL)
    from_left = direction in (ScanDirection.TL_BR, ScanDirection.BL_TR)
    padding = (
        trim if from_top else trim + align_y,
        trim if from_left else trim + align_x,
        trim + align_y if from_top else trim,
        trim + align_x if from_left else trim,
    )

    row_order = range(rows) if from_top else range(rows - 1, -1, -1)
    col_order = list(range(cols)) if from_left else list(range(cols - 1, -1, -1))
    patches = [Rect(col * stride, row * stride, patch_size, patch_size) for row in row_order for col in col_order]
    return PatchPlan(width, height, direction, patch_size, trim, stride, rows, cols, padding, patches)
