from dataclasses import dataclass, field
from typing import Dict, Optional

from prepocr.models.page_eval import PageEval


@dataclass
class PageRecord:
    """
    Manifest row of one page. Artifact paths are relative to the run output directory; a stage
    appears in `texts` only when it ran and in `errors` when it failed.
    """
    page_id: str
    image: str
    gt_source: Optional[str] = None
    book_level: bool = False
    clean: Optional[str] = None
    restored: Optional[str] = None
    texts: Dict[str, str] = field(default_factory=dict)
    evals: Dict[str, PageEval] = field(default_factory=dict)
    errors: Dict[str, str] = field(default_factory=dict)

    def is_partial(self) -> bool:
        return bool(self.errors)
