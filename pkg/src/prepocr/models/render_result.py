from dataclasses import dataclass
from typing import List

from prepocr.imaging.gray_image import GrayImage
from prepocr.models.line_metadata import LineMetadata


@dataclass
class RenderResult:
    image: GrayImage
    lines: List[LineMetadata]
