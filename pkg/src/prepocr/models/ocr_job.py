from dataclasses import dataclass
from typing import Optional


@dataclass
class OcrJob:
    page_id: str
    image_path: str
    output_path: str
    # read by the mock engine only
    gt_text: Optional[str] = None
