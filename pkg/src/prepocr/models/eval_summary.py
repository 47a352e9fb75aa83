from dataclasses import dataclass
from typing import Optional


@dataclass
class EvalSummary:
    threshold: float
    page_count: int = 0
    kept_count: int = 0
    dropped_count: int = 0
    # None when there is no page to average
    mean_cer: Optional[float] = None
    mean_wer: Optional[float] = None
    kept_mean_cer: Optional[float] = None
    kept_mean_wer: Optional[float] = None
