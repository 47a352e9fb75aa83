from dataclasses import dataclass, field
from typing import List

from prepocr.imaging.gray_image import GrayImage


@dataclass
class PagePair:
    """
    A clean page and its degraded twin. Stitched pairs carry one level, font and op order per sub-render;
    `level` is then the most severe of them.
    """
    clean: GrayImage
    degraded: GrayImage
    text: str
    level: int
    seed: int
    op_order: List[List[str]]
    sub_levels: List[int] = field(default_factory=list)
    fonts: List[str] = field(default_factory=list)
    stitched: bool = False
    binarized: List[bool] = field(default_factory=list)
