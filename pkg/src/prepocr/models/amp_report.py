from dataclasses import dataclass, field
from typing import Dict, List


@dataclass
class AmpReport:
    # AMP in dB keyed by region name; regions without coverage are absent
    amp: Dict[str, float] = field(default_factory=dict)
    pair_count: int = 0
    patch_count: int = 0
    patch_size: int = 0
    # files present on only one side
    unpaired: List[str] = field(default_factory=list)
    heat_image: str = ""
