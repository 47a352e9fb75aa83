from dataclasses import dataclass

from prepocr.models.edit_op_type import EditOpType


@dataclass(frozen=True)
class EditOp:
    op_type: EditOpType
    # empty for inserts
    gt: str
    # empty for deletes
    hyp: str

    def cost(self) -> int:
        return 0 if self.op_type == EditOpType.MATCH else 1
