"""
Error model extraction from aligned ground truth / OCR pairs.

Every ground truth character of a script is one observation of that character; its reading is
the hypothesis text it produced. Runs of inserted characters are folded into the reading of a
neighbouring ground truth character: the following one when that character was substituted or
deleted (or when the run leads the script), the preceding one otherwise. A deletion that absorbs
an insert run becomes a substitution.
"""
from collections import Counter, defaultdict
from typing import Dict, Iterable, List, Optional, Tuple

from prepocr import constants
from prepocr.alignment import document_aligner, edit_distance
from prepocr.alignment.text_normalization import normalize_text
from prepocr.exceptions import EmptyCorpusError
from prepocr.models.config.alignment_config_model import AlignmentConfigModel
from prepocr.models.edit_op_type import EditOpType
from prepocr.models.edit_script import EditScript
from prepocr.models.error_model import ErrorModel
from prepocr.utils.proxy import task_pool_proxy
from preputils import logging

logger = logging.get_logger(__name__)

PLACEHOLDER = constants.DELETION_PLACEHOLDER


class _Reading:
    def __init__(self, source: str, output: str, op_type: EditOpType):
        self.source = source
        self.output = output
        self.op_type = op_type


def readings(script: EditScript) -> List[Tuple[str, str]]:
    """
    Inserted runs attach to the preceding ground truth character, except that a run before a substituted or
    deleted character, or before the first character, attaches to that following character instead.
    A substituted "m" read as "rn" therefore gives the single reading ("m", "rn").

    :return: (source character, reading) per ground truth character; a reading of "" is a deletion
    """
    units: List[_Reading] = []
    runs: Dict[int, str] = defaultdict(str)
    for op in script.ops:
        if op.op_type == EditOpType.INSERT:
            runs[len(units)] += op.hyp
        else:
            units.append(_Reading(op.gt, op.hyp, op.op_type))

    for position, run in sorted(runs.items()):
        if not units:
            break
        follows_error = position < len(units) and units[position].op_type in (
            EditOpType.SUBSTITUTE, EditOpType.DELETE
        )
        if position == 0 or follows_error:
            units[position].output = run + units[position].output
        else:
            units[position - 1].output += run
    return [(unit.source, unit.output) for unit in units]


def extract_error_model(scripts: Iterable[EditScript], insertion_rate: float = 0.0) -> ErrorModel:
    occurrences: Counter = Counter()
    errors: Dict[str, Counter] = defaultdict(Counter)
    skipped = 0
    for script in scripts:
        for source, output in readings(script):
            if source == PLACEHOLDER or PLACEHOLDER in output:
                skipped += 1
                continue
            occurrences[source] += 1
            if output != source:
                errors[source][output or PLACEHOLDER] += 1
    if not occurrences:
        raise EmptyCorpusError("No ground truth characters to extract an error model from")
    if skipped:
        logger.debug("Skipped {} observations involving a literal {}", skipped, PLACEHOLDER)

    table = {
        source: {candidate: count / occurrences[source] for candidate, count in sorted(candidates.items())}
        for source, candidates in sorted(errors.items())
    }
    logger.debug("Extracted error model over {} characters, {} sources with errors",
                 sum(occurrences.values()), len(table))
    return ErrorModel(table, insertion_rate).validate()


def align_pair(gt: str, hyp: str, config: Optional[AlignmentConfigModel] = None) -> List[EditScript]:
    config = config or AlignmentConfigModel()
    gt = normalize_text(gt)
    hyp = normalize_text(hyp)
    if max(len(gt), len(hyp)) <= config.fallback_cap:
        return [edit_distance.align_exact(gt, hyp)]
    return [segment.script for segment in document_aligner.align_document(gt, hyp, config).segments]


def extract_error_model_from_texts(pairs: Iterable[Tuple[str, str]],
                                   config: Optional[AlignmentConfigModel] = None) -> ErrorModel:
    scripts_per_pair = task_pool_proxy.map_tasks(lambda pair: align_pair(pair[0], pair[1], config), pairs)
    return extract_error_model(script for scripts in scripts_per_pair for script in scripts)
