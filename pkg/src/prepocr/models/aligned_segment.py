from dataclasses import dataclass

from prepocr.models.edit_script import EditScript


@dataclass
class AlignedSegment:
    # half-open character spans into the aligned texts
    gt_start: int
    gt_end: int
    hyp_start: int
    hyp_end: int
    script: EditScript

    def gt_length(self) -> int:
        return self.gt_end - self.gt_start

    def cost(self) -> int:
        return self.script.cost()
