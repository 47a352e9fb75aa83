from dataclasses import dataclass, field
from typing import List, Tuple

from prepocr.models.aligned_segment import AlignedSegment


@dataclass
class DocumentAlignment:
    segments: List[AlignedSegment] = field(default_factory=list)
    # hypothesis spans with no ground truth counterpart, excluded from error rates
    unmatched: List[Tuple[int, int]] = field(default_factory=list)
    anchor_count: int = 0

    def cost(self) -> int:
        return sum(segment.cost() for segment in self.segments)

    def matched_gt_length(self) -> int:
        return sum(segment.gt_length() for segment in self.segments)

    def unmatched_length(self) -> int:
        return sum(end - start for start, end in self.unmatched)
