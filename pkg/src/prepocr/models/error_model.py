from dataclasses import dataclass, field
from typing import Dict, List

from prepocr import constants
from prepocr.exceptions import ModelFormatError


@dataclass
class ErrorModel:
    """
    Character-level OCR error distribution.

    `table` maps a source character to its replacement candidates and their per-occurrence
    probabilities; the remaining mass is the chance of reading the character correctly. A
    candidate may be several characters long, contain spaces, or be the deletion placeholder "@".
    `insertion_rate` is an optional per-character chance of a spurious extra character.
    """
    table: Dict[str, Dict[str, float]] = field(default_factory=dict)
    insertion_rate: float = 0.0

    def total_mass(self, source: str) -> float:
        return sum(self.table.get(source, {}).values())

    def sources(self) -> List[str]:
        return sorted(self.table)

    def candidate_alphabet(self) -> List[str]:
        """
        Every character appearing in a candidate, placeholder excluded.
        """
        return sorted({
            char for candidates in self.table.values() for candidate in candidates for char in candidate
            if char != constants.DELETION_PLACEHOLDER
        })

    def is_empty(self) -> bool:
        return not any(self.table.values())

    def validate(self) -> "ErrorModel":
        if self.insertion_rate < 0:
            raise ModelFormatError("Insertion rate must be non-negative, got {}".format(self.insertion_rate))
        for source, candidates in self.table.items():
            if source == constants.DELETION_PLACEHOLDER:
                raise ModelFormatError("The deletion placeholder cannot be a source character")
            if len(source) != 1:
                raise ModelFormatError("Source {!r} is not a single character".format(source))
            for candidate, probability in candidates.items():
                if not candidate:
                    raise ModelFormatError("Empty candidate for source {!r}".format(source))
                if not 0.0 < probability <= 1.0:
                    raise ModelFormatError(
                        "Probability {} of {!r} -> {!r} outside (0, 1]".format(probability, source, candidate)
                    )
            # tolerate float noise from normalization
            if sum(candidates.values()) > 1.0 + 1e-9:
                raise ModelFormatError("Candidates of {!r} sum to more than 1".format(source))
        return self
