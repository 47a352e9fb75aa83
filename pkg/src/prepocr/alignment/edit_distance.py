"""
Unit-cost Levenshtein alignment.

The dynamic program runs row by row over the ground truth. Within a row the insertion
recurrence D[i][j] = min(T[j], D[i][j-1] + 1) is a running minimum of T[j] - j, so every row is
a handful of numpy operations. An optional band keeps only the columns within `band` of the
diagonal joining (0, 0) and (len(gt), len(hyp)).
"""
from typing import Dict, List, Optional, Tuple

import Levenshtein
import numpy as np

from prepocr.models.edit_op import EditOp
from prepocr.models.edit_op_type import EditOpType
from prepocr.models.edit_script import EditScript

UNREACHABLE = 1 << 40
_SURROGATE_START = 0xD800
_SURROGATE_COUNT = 0x800


class _DpTable:
    rows: List[np.ndarray]
    starts: List[int]

    def __init__(self):
        self.rows = []
        self.starts = []

    def append(self, start: int, row: np.ndarray) -> None:
        self.starts.append(start)
        self.rows.append(row)

    def get(self, i: int, j: int) -> int:
        offset = j - self.starts[i]
        row = self.rows[i]
        if 0 <= offset < len(row):
            return int(row[offset])
        return UNREACHABLE


def _codes(text: str) -> np.ndarray:
    return np.frombuffer(text.encode("utf-32-le"), dtype=np.uint32).astype(np.int64)


def _column_bounds(i: int, n: int, m: int, band: Optional[int]) -> Tuple[int, int]:
    if band is None or n == 0:
        return 0, m
    lo = max(0, (i * m) // n - band)
    hi = m if i == n else min(m, -(-((i + 1) * m) // n) + band)
    return lo, hi


def _window(start: int, row: np.ndarray, lo: int, hi: int) -> np.ndarray:
    values = np.full(hi - lo + 1, UNREACHABLE, dtype=np.int64)
    first = max(lo, start)
    last = min(hi, start + len(row) - 1)
    if first <= last:
        values[first - lo:last - lo + 1] = row[first - start:last - start + 1]
    return values


def _fill(gt: str, hyp: str, band: Optional[int], free_gt_prefix: bool) -> _DpTable:
    n, m = len(gt), len(hyp)
    gt_codes = _codes(gt)
    hyp_codes = _codes(hyp)
    table = _DpTable()

    lo, hi = _column_bounds(0, n, m, band)
    table.append(lo, np.arange(lo, hi + 1, dtype=np.int64))
    for i in range(1, n + 1):
        prev_start, prev = table.starts[-1], table.rows[-1]
        lo, hi = _column_bounds(i, n, m, band)
        columns = np.arange(lo, hi + 1, dtype=np.int64)
        up = _window(prev_start, prev, lo, hi)
        diagonal = _window(prev_start, prev, lo - 1, hi - 1)
        if m:
            substitution = (hyp_codes[np.maximum(columns - 1, 0)] != gt_codes[i - 1]).astype(np.int64)
        else:
            substitution = np.ones(len(columns), dtype=np.int64)
        candidate = np.minimum(up + 1, diagonal + substitution)
        if lo == 0:
            candidate[0] = 0 if free_gt_prefix else i
        table.append(lo, np.minimum.accumulate(candidate - columns) + columns)
    return table


def _backtrace(gt: str, hyp: str, table: _DpTable, end_i: int, free_gt_prefix: bool) -> Tuple[int, EditScript]:
    # preference at equal cost: match, substitute, delete, insert
    ops = []
    i, j = end_i, len(hyp)
    while i > 0 or j > 0:
        if free_gt_prefix and j == 0:
            break
        current = table.get(i, j)
        if i > 0 and j > 0:
            diagonal = table.get(i - 1, j - 1)
            if gt[i - 1] == hyp[j - 1] and diagonal == current:
                ops.append(EditOp(EditOpType.MATCH, gt[i - 1], hyp[j - 1]))
                i -= 1
                j -= 1
                continue
            if gt[i - 1] != hyp[j - 1] and diagonal + 1 == current:
                ops.append(EditOp(EditOpType.SUBSTITUTE, gt[i - 1], hyp[j - 1]))
                i -= 1
                j -= 1
                continue
        if i > 0 and table.get(i - 1, j) + 1 == current:
            ops.append(EditOp(EditOpType.DELETE, gt[i - 1], ""))
            i -= 1
            continue
        if j == 0:
            raise RuntimeError("Inconsistent alignment table at ({}, {})".format(i, j))
        ops.append(EditOp(EditOpType.INSERT, "", hyp[j - 1]))
        j -= 1
    ops.reverse()
    return i, EditScript(ops)


def align_exact(gt: str, hyp: str, band: Optional[int] = None) -> EditScript:
    """
    Minimal unit-cost edit script from `gt` to `hyp`. With `band` the search is limited to a
    diagonal corridor and the script is minimal only among paths inside it.
    """
    if band is not None and band < 0:
        raise ValueError("Band must be non-negative, got {}".format(band))
    table = _fill(gt, hyp, band, free_gt_prefix=False)
    return _backtrace(gt, hyp, table, len(gt), free_gt_prefix=False)[1]


def align_within(gt: str, hyp: str, free_prefix: bool = True,
                 free_suffix: bool = True) -> Tuple[int, int, EditScript]:
    """
    Aligns all of `hyp` against a substring of `gt`; unaligned ground truth before (`free_prefix`)
    or after (`free_suffix`) the chosen substring costs nothing.

    :return: (gt start, gt end, script over gt[start:end])
    """
    table = _fill(gt, hyp, None, free_gt_prefix=free_prefix)
    end_i = len(gt)
    if free_suffix:
        last_column = [table.get(i, len(hyp)) for i in range(len(gt) + 1)]
        end_i = int(np.argmin(last_column))
    start_i, script = _backtrace(gt, hyp, table, end_i, free_gt_prefix=free_prefix)
    return start_i, end_i, script


def edit_distance(gt: str, hyp: str) -> int:
    return Levenshtein.distance(gt, hyp)


def _word_symbol(index: int) -> str:
    if index >= _SURROGATE_START:
        index += _SURROGATE_COUNT
    return chr(index)


def word_distance(gt_words: List[str], hyp_words: List[str]) -> int:
    """
    Word-level unit-cost edit distance; every distinct word becomes one private character.
    """
    vocabulary: Dict[str, str] = {}
    for word in gt_words + hyp_words:
        if word not in vocabulary:
            vocabulary[word] = _word_symbol(len(vocabulary))
    return Levenshtein.distance(
        "".join(vocabulary[word] for word in gt_words), "".join(vocabulary[word] for word in hyp_words)
    )
