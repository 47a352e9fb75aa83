from dataclasses import dataclass, field
from typing import List, Optional, Tuple


@dataclass
class PageEval:
    page_id: str
    cer: float
    wer: float
    gt_length: int
    matched: bool = True
    outlier: bool = False
    unmatched_spans: List[Tuple[int, int]] = field(default_factory=list)
    error: Optional[str] = None
