from dataclasses import dataclass
from typing import Tuple

Point = Tuple[float, float]


@dataclass
class LineMetadata:
    index: int
    text: str
    baseline_left: Point
    baseline_right: Point
    # x0, y0, x1, y1 (exclusive) in page pixels
    bbox: Tuple[int, int, int, int]
