from typing import List, Optional, Tuple

from prepocr import constants
from prepocr.alignment import document_aligner, edit_distance
from prepocr.alignment.text_normalization import normalize_text, split_words
from prepocr.exceptions import UndefinedRateError
from prepocr.models.config.alignment_config_model import AlignmentConfigModel
from prepocr.models.eval_summary import EvalSummary
from prepocr.models.page_eval import PageEval
from preputils import logging

logger = logging.get_logger(__name__)


def error_rates(gt: str, hyp: str) -> Tuple[float, float]:
    """
    :return: (CER, WER) of `hyp` against `gt`, both normalized first; CER counts Unicode scalars
    """
    gt = normalize_text(gt)
    hyp = normalize_text(hyp)
    if not gt:
        raise UndefinedRateError("Error rates are undefined for empty ground truth")
    gt_words = split_words(gt)
    cer = edit_distance.edit_distance(gt, hyp) / len(gt)
    wer = edit_distance.word_distance(gt_words, split_words(hyp)) / len(gt_words)
    return cer, wer


def remove_spans(text: str, spans: List[Tuple[int, int]]) -> str:
    kept = []
    position = 0
    for start, end in sorted(spans):
        kept.append(text[position:start])
        position = max(position, end)
    kept.append(text[position:])
    return normalize_text(" ".join(kept))


def evaluate_page(page_id: str, gt: str, hyp: str, book_level: bool = False,
                  config: Optional[AlignmentConfigModel] = None,
                  threshold: float = constants.OUTLIER_CER_THRESHOLD) -> PageEval:
    """
    Scores one OCR page. Hypothesis spans the alignment leaves unmatched are discarded first.

    With `book_level` the ground truth is a whole book and only the anchored part of it counts:
    rates are taken over the matched segments. Otherwise the page ground truth counts in full. A
    book-level page without any matched content scores CER and WER 1.
    """
    gt = normalize_text(gt)
    hyp = normalize_text(hyp)
    if not gt:
        raise UndefinedRateError("Page {} has empty ground truth".format(page_id))
    alignment = document_aligner.align_document(gt, hyp, config)

    if not book_level:
        cer, wer = error_rates(gt, remove_spans(hyp, alignment.unmatched))
        matched = bool(alignment.segments) or not hyp
        return PageEval(page_id, cer, wer, len(gt), matched, cer > threshold, alignment.unmatched)

    gt_length = alignment.matched_gt_length()
    if not alignment.segments or gt_length == 0:
        logger.debug("Page {} has no anchored counterpart in the ground truth", page_id)
        return PageEval(page_id, 1.0, 1.0, 0, False, 1.0 > threshold, alignment.unmatched)

    word_errors = 0
    word_count = 0
    for segment in alignment.segments:
        gt_words = split_words(gt[segment.gt_start:segment.gt_end])
        word_errors += edit_distance.word_distance(gt_words, split_words(hyp[segment.hyp_start:segment.hyp_end]))
        word_count += len(gt_words)
    cer = alignment.cost() / gt_length
    wer = word_errors / word_count if word_count else 0.0
    return PageEval(page_id, cer, wer, gt_length, True, cer > threshold, alignment.unmatched)


def filter_outliers(pages: List[PageEval],
                    threshold: float = constants.OUTLIER_CER_THRESHOLD) -> Tuple[List[PageEval], List[PageEval]]:
    """
    :return: (kept, dropped); a page is dropped when its CER is strictly above `threshold`
    """
    kept = [page for page in pages if not page.cer > threshold]
    dropped = [page for page in pages if page.cer > threshold]
    return kept, dropped


def _mean(values: List[float]) -> Optional[float]:
    return sum(values) / len(values) if values else None


def summarize(pages: List[PageEval], threshold: float = constants.OUTLIER_CER_THRESHOLD) -> EvalSummary:
    """
    Means over all evaluated pages and over the pages kept by `filter_outliers`; pages that failed
    evaluation are left out.
    """
    evaluated = [page for page in pages if page.error is None]
    kept, dropped = filter_outliers(evaluated, threshold)
    return EvalSummary(
        threshold=threshold,
        page_count=len(evaluated),
        kept_count=len(kept),
        dropped_count=len(dropped),
        mean_cer=_mean([page.cer for page in evaluated]),
        mean_wer=_mean([page.wer for page in evaluated]),
        kept_mean_cer=_mean([page.cer for page in kept]),
        kept_mean_wer=_mean([page.wer for page in kept]),
    )
