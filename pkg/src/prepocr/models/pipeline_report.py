from dataclasses import dataclass, field
from typing import Dict, List

from prepocr.models.stage_summary import StageSummary


@dataclass
class PipelineReport:
    page_count: int = 0
    partial_pages: List[str] = field(default_factory=list)
    outlier_threshold: float = 0.0
    engine: str = ""
    restorer: str = ""
    corrector: str = ""
    stages: List[StageSummary] = field(default_factory=list)
    amp: Dict[str, Dict[str, float]] = field(default_factory=dict)
    amp_pair_count: int = 0
    notes: List[str] = field(default_factory=list)
