from dataclasses import dataclass, field
from typing import List


@dataclass
class RestorationReport:
    mode: str
    fusion: str
    trim: int
    restorer: str
    deterministic: bool
    width: int
    height: int
    directions: List[str] = field(default_factory=list)
    patches_per_pass: int = 0
    # sha256 of every pass output, in `directions` order
    pass_checksums: List[str] = field(default_factory=list)
    output_checksum: str = ""

    def passes_identical(self) -> bool:
        return len(set(self.pass_checksums)) <= 1
