from dataclasses import dataclass, field
from typing import Dict, List

from prepocr.models.edit_op import EditOp
from prepocr.models.edit_op_type import EditOpType


@dataclass
class EditScript:
    """
    Ordered edit operations turning a ground truth string into a hypothesis.
    """
    ops: List[EditOp] = field(default_factory=list)

    def cost(self) -> int:
        return sum(op.cost() for op in self.ops)

    def gt_text(self) -> str:
        return "".join(op.gt for op in self.ops)

    def hyp_text(self) -> str:
        return "".join(op.hyp for op in self.ops)

    def replay(self, gt: str) -> str:
        """
        Applies the script to `gt`; raises ValueError if the script was made for a different string.
        """
        if gt != self.gt_text():
            raise ValueError("Edit script does not describe the given ground truth")
        return self.hyp_text()

    def counts(self) -> Dict[str, int]:
        counts = {op_type.value: 0 for op_type in EditOpType}
        for op in self.ops:
            counts[op.op_type.value] += 1
        return counts

    def extend(self, other: "EditScript") -> "EditScript":
        self.ops.extend(other.ops)
        return self

    def __len__(self):
        return len(self.ops)
