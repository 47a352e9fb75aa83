from dataclasses import dataclass
from typing import Optional


@dataclass
class PageInput:
    """
    One page of a pipeline run. Paths are absolute once loaded. `gt_path` may name a whole book
    shared by several pages; such pages are scored book-level against their anchored span.
    """
    page_id: str
    image: str
    gt_text: Optional[str] = None
    gt_path: Optional[str] = None
    # clean reference image for AMP
    clean: Optional[str] = None
