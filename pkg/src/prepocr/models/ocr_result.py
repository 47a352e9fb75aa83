from dataclasses import dataclass
from typing import Optional


@dataclass
class OcrResult:
    page_id: str
    text: Optional[str] = None
    error: Optional[str] = None

    def succeeded(self) -> bool:
        return self.error is None
