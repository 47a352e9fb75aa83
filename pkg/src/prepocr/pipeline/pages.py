"""
Reads the pages a pipeline run works on.

A pages manifest is JSONL with one object per page:

    {"page_id": "p001", "image": "scans/p001.png", "gt_text": "...", "clean": "clean/p001.png"}
    {"page_id": "p002", "image": "scans/p002.png", "gt_path": "books/book1.txt"}

`gt_text` holds the page ground truth; `gt_path` names a text file that may cover a whole book.
A dataset manifest written by `synth` is accepted as is: the degraded image is read, its text is
the ground truth and its clean image the AMP reference. Relative paths are resolved against the
manifest's directory.
"""
import os
from typing import Any, Dict, List, Optional

from prepocr import constants
from prepocr.exceptions import ConfigError
from prepocr.models.page_input import PageInput
from prepocr.utils import json_utils, text_files
from preputils import logging

logger = logging.get_logger(__name__)


def load_pages(manifest_path: str) -> List[PageInput]:
    try:
        entries = json_utils.read_jsonl(manifest_path)
    except (OSError, ValueError) as e:
        raise ConfigError("Cannot read pages manifest {}: {}".format(manifest_path, e))
    base_dir = os.path.dirname(os.path.abspath(manifest_path))
    pages = [_to_page(entry, base_dir, line) for line, entry in enumerate(entries, 1)]

    seen = set()
    for page in pages:
        if page.page_id in seen:
            raise ConfigError("Duplicate page id {!r} in {}".format(page.page_id, manifest_path))
        seen.add(page.page_id)
    logger.debug("Loaded {} pages from {}", len(pages), manifest_path)
    return pages


def _to_page(entry: Any, base_dir: str, line: int) -> PageInput:
    if not isinstance(entry, dict):
        raise ConfigError("Pages manifest line {} is not an object".format(line))
    if "page_id" not in entry and "degraded" in entry and "index" in entry:
        entry = _from_dataset_record(entry)
    page_id = entry.get("page_id")
    image = entry.get("image")
    if not isinstance(page_id, str) or not page_id:
        raise ConfigError("Pages manifest line {} has no page_id".format(line))
    if page_id in (".", "..") or "/" in page_id or os.sep in page_id:
        raise ConfigError("Page id {!r} cannot be used as a directory name".format(page_id))
    if not isinstance(image, str) or not image:
        raise ConfigError("Page {} has no image".format(page_id))
    return PageInput(
        page_id=page_id,
        image=_resolve(base_dir, image),
        gt_text=entry.get("gt_text"),
        gt_path=_resolve(base_dir, entry.get("gt_path")),
        clean=_resolve(base_dir, entry.get("clean")),
    )


def _from_dataset_record(record: Dict[str, Any]) -> Dict[str, Any]:
    return {
        "page_id": os.path.splitext(constants.IMAGE_NAME_FORMAT.format(record["index"]))[0],
        "image": record["degraded"],
        "gt_text": record.get("text"),
        "clean": record.get("clean"),
    }


def _resolve(base_dir: str, path: Optional[str]) -> Optional[str]:
    if not path:
        return None
    return os.path.normpath(os.path.join(base_dir, path))


def read_ground_truth(page: PageInput) -> Optional[str]:
    """
    :return: the page ground truth, `None` when the page has none
    """
    if page.gt_text is not None:
        return page.gt_text
    if page.gt_path is None:
        return None
    try:
        return text_files.read_text(page.gt_path)
    except (OSError, UnicodeDecodeError) as e:
        raise ConfigError("Cannot read ground truth {} of page {}: {}".format(page.gt_path, page.page_id, e))
