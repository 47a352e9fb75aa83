from dataclasses import dataclass, field
from typing import List

from prepocr.models.eval_summary import EvalSummary


@dataclass
class StageSummary:
    stage: str
    label: str
    ran_count: int = 0
    failed_pages: List[str] = field(default_factory=list)
    summary: EvalSummary = field(default_factory=lambda: EvalSummary(threshold=0.0))
