from dataclasses import dataclass, field
from typing import Any, Dict, List

from prepocr.imaging.gray_image import GrayImage


@dataclass
class DegradationResult:
    image: GrayImage
    # operators actually applied, in application order
    op_order: List[str]
    params: Dict[str, Any] = field(default_factory=dict)
    binarized: bool = False
