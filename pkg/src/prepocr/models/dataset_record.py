from dataclasses import dataclass, field
from typing import List


@dataclass
class DatasetRecord:
    index: int
    clean: str
    degraded: str
    text: str
    level: int
    seed: int
    op_order: List[List[str]]
    sub_levels: List[int] = field(default_factory=list)
    fonts: List[str] = field(default_factory=list)
    stitched: bool = False
    binarized: List[bool] = field(default_factory=list)
