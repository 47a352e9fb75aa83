from dataclasses import dataclass, field
from typing import Dict, List

from prepocr import constants
from prepocr.models.page_record import PageRecord


@dataclass
class RunManifest:
    """
    Everything a report is computed from. Settings that do not change results (worker count,
    output directory, logging) are left out so reruns produce identical bytes.
    """
    version: int = constants.PIPELINE_CONFIG_VERSION
    engine: str = ""
    restorer: str = ""
    fusion: str = ""
    corrector: str = ""
    outlier_threshold: float = constants.OUTLIER_CER_THRESHOLD
    seed: int = constants.DEFAULT_SEED
    stages: List[str] = field(default_factory=list)
    pages: List[PageRecord] = field(default_factory=list)
    # AMP in dB by image set ("raw", "pre") and region
    amp: Dict[str, Dict[str, float]] = field(default_factory=dict)
    amp_pair_count: int = 0
