"""
Long-text alignment anchored on word n-grams that occur exactly once in both texts.

The longest chain of anchors increasing in both texts fixes the matched block structure; the
gaps between anchored blocks are aligned exactly (banded when large). Hypothesis text before the
first or after the last anchor is kept only when it aligns well against the neighbouring ground
truth, and long hypothesis runs facing no ground truth at all are reported as unmatched.
"""
import bisect
import re
from collections import Counter
from typing import List, Optional, Tuple

from prepocr.alignment import edit_distance
from prepocr.exceptions import ConfigError
from prepocr.models.aligned_segment import AlignedSegment
from prepocr.models.config.alignment_config_model import AlignmentConfigModel
from prepocr.models.document_alignment import DocumentAlignment
from prepocr.models.edit_op import EditOp
from prepocr.models.edit_op_type import EditOpType
from prepocr.models.edit_script import EditScript
from preputils import logging

logger = logging.get_logger(__name__)

WORD_PATTERN = re.compile(r"\S+")
# ground truth context searched beyond the length of an edge run
EDGE_WINDOW_SLACK = 16

# (start, end, word)
Word = Tuple[int, int, str]


class _Block:
    def __init__(self, gt_first: int, hyp_first: int, length: int):
        self.gt_first = gt_first
        self.hyp_first = hyp_first
        self.length = length

    def gt_last(self) -> int:
        return self.gt_first + self.length

    def hyp_last(self) -> int:
        return self.hyp_first + self.length


class _SegmentBuilder:
    def __init__(self):
        self.segments: List[AlignedSegment] = []
        self.current: Optional[AlignedSegment] = None

    def add(self, gt_start: int, gt_end: int, hyp_start: int, hyp_end: int, script: EditScript) -> None:
        if self.current is None:
            self.current = AlignedSegment(gt_start, gt_end, hyp_start, hyp_end, script)
            return
        self.current.gt_end = gt_end
        self.current.hyp_end = hyp_end
        self.current.script.extend(script)

    def close(self) -> None:
        if self.current is not None:
            self.segments.append(self.current)
        self.current = None


def words_of(text: str) -> List[Word]:
    return [(match.start(), match.end(), match.group()) for match in WORD_PATTERN.finditer(text)]


def unique_ngrams(words: List[Word], n: int) -> dict:
    """
    Maps every word n-gram occurring exactly once to the index of its first word.
    """
    grams = [tuple(word[2] for word in words[index:index + n]) for index in range(len(words) - n + 1)]
    counts = Counter(grams)
    return {gram: index for index, gram in enumerate(grams) if counts[gram] == 1}


def longest_increasing_chain(anchors: List[Tuple[int, int]]) -> List[Tuple[int, int]]:
    """
    Longest subsequence of `anchors` (sorted by ground truth index) whose hypothesis indices
    strictly increase.
    """
    tails: List[int] = []
    tail_indices: List[int] = []
    previous = [-1] * len(anchors)
    for index, (_, hyp_index) in enumerate(anchors):
        position = bisect.bisect_left(tails, hyp_index)
        if position == len(tails):
            tails.append(hyp_index)
            tail_indices.append(index)
        else:
            tails[position] = hyp_index
            tail_indices[position] = index
        previous[index] = tail_indices[position - 1] if position > 0 else -1

    chain = []
    index = tail_indices[-1] if tail_indices else -1
    while index >= 0:
        chain.append(anchors[index])
        index = previous[index]
    chain.reverse()
    return chain


def merge_anchors(chain: List[Tuple[int, int]], n: int) -> List[_Block]:
    blocks: List[_Block] = []
    for gt_index, hyp_index in chain:
        if blocks:
            last = blocks[-1]
            if gt_index - last.gt_first == hyp_index - last.hyp_first and gt_index <= last.gt_last():
                last.length = max(last.length, gt_index + n - last.gt_first)
                continue
            # overlapping n-gram on another diagonal: keep only its non-overlapping tail
            overlap = max(0, last.gt_last() - gt_index, last.hyp_last() - hyp_index)
            if overlap >= n:
                continue
            blocks.append(_Block(gt_index + overlap, hyp_index + overlap, n - overlap))
        else:
            blocks.append(_Block(gt_index, hyp_index, n))
    return blocks


def _align_span(gt: str, hyp: str, config: AlignmentConfigModel) -> EditScript:
    if gt == hyp:
        return EditScript([EditOp(EditOpType.MATCH, char, char) for char in gt])
    band = config.band_width if max(len(gt), len(hyp)) > config.band_threshold else None
    return edit_distance.align_exact(gt, hyp, band)


def align_document(gt: str, hyp: str, config: Optional[AlignmentConfigModel] = None) -> DocumentAlignment:
    config = config or AlignmentConfigModel()
    n = config.anchor_n
    if n < 1:
        raise ConfigError("anchor_n must be at least 1, got {}".format(n))
    if not hyp.strip():
        return DocumentAlignment()
    if not gt.strip():
        return DocumentAlignment(unmatched=[(0, len(hyp))])

    gt_words = words_of(gt)
    hyp_words = words_of(hyp)
    gt_grams = unique_ngrams(gt_words, n)
    hyp_grams = unique_ngrams(hyp_words, n)
    anchors = sorted((gt_index, hyp_grams[gram]) for gram, gt_index in gt_grams.items() if gram in hyp_grams)
    chain = longest_increasing_chain(anchors)
    blocks = merge_anchors(chain, n)
    logger.trace("{} anchors, chain of {}, {} blocks", len(anchors), len(chain), len(blocks))

    if not blocks:
        if len(gt) <= config.fallback_cap and len(hyp) <= config.fallback_cap:
            script = _align_span(gt, hyp, config)
            return DocumentAlignment([AlignedSegment(0, len(gt), 0, len(hyp), script)])
        logger.debug("No anchors between {} and {} characters of text; hypothesis unmatched", len(gt), len(hyp))
        return DocumentAlignment(unmatched=[(0, len(hyp))])

    spans = [
        (
            gt_words[block.gt_first][0], gt_words[block.gt_last() - 1][1],
            hyp_words[block.hyp_first][0], hyp_words[block.hyp_last() - 1][1],
        )
        for block in blocks
    ]
    builder = _SegmentBuilder()
    unmatched: List[Tuple[int, int]] = []

    first_gt, _, first_hyp, _ = spans[0]
    _align_leading_edge(gt, hyp, first_gt, first_hyp, config, builder, unmatched)

    for index, (gt_start, gt_end, hyp_start, hyp_end) in enumerate(spans):
        script = _align_span(gt[gt_start:gt_end], hyp[hyp_start:hyp_end], config)
        builder.add(gt_start, gt_end, hyp_start, hyp_end, script)
        if index + 1 == len(spans):
            break
        next_gt, _, next_hyp, _ = spans[index + 1]
        gt_gap = gt[gt_end:next_gt]
        hyp_gap = hyp[hyp_end:next_hyp]
        if not gt_gap.strip() and len(hyp_gap.strip()) >= config.min_unmatched_chars:
            builder.close()
            unmatched.append((hyp_end, next_hyp))
            continue
        builder.add(gt_end, next_gt, hyp_end, next_hyp, _align_span(gt_gap, hyp_gap, config))

    _, last_gt, _, last_hyp = spans[-1]
    _align_trailing_edge(gt, hyp, last_gt, last_hyp, config, builder, unmatched)
    builder.close()
    unmatched.sort()
    return DocumentAlignment(builder.segments, unmatched, len(chain))


def _edge_acceptable(script: EditScript, gt_length: int, config: AlignmentConfigModel) -> bool:
    return gt_length > 0 and script.cost() / gt_length <= config.edge_max_cer


def _align_leading_edge(gt: str, hyp: str, first_gt: int, first_hyp: int, config: AlignmentConfigModel,
                        builder: _SegmentBuilder, unmatched: List[Tuple[int, int]]) -> None:
    edge = hyp[:first_hyp]
    if not edge.strip():
        return
    if len(edge) <= config.fallback_cap:
        window_start = max(0, first_gt - 2 * len(edge) - EDGE_WINDOW_SLACK)
        start, _, script = edit_distance.align_within(gt[window_start:first_gt], edge, True, False)
        if _edge_acceptable(script, first_gt - window_start - start, config):
            builder.add(window_start + start, first_gt, 0, first_hyp, script)
            return
    unmatched.append((0, first_hyp))


def _align_trailing_edge(gt: str, hyp: str, last_gt: int, last_hyp: int, config: AlignmentConfigModel,
                         builder: _SegmentBuilder, unmatched: List[Tuple[int, int]]) -> None:
    edge = hyp[last_hyp:]
    if not edge.strip():
        return
    if len(edge) <= config.fallback_cap:
        window_end = min(len(gt), last_gt + 2 * len(edge) + EDGE_WINDOW_SLACK)
        _, end, script = edit_distance.align_within(gt[last_gt:window_end], edge, False, True)
        if _edge_acceptable(script, end, config):
            builder.add(last_gt, last_gt + end, last_hyp, len(hyp), script)
            return
    builder.close()
    unmatched.append((last_hyp, len(hyp)))
