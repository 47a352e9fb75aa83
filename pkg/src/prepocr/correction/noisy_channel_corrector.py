"""
Noisy-channel post-correction: finds the clean text maximizing

    channel_weight * log P(noisy | clean) + lm_weight * log P(clean)

where the channel is an error model read in reverse. The search is a position-synchronous beam
over the noisy string. From a state at noisy position j a clean character is produced by
 - identity: the noisy character itself, scored with the identity mass of that character,
 - inversion: a source whose (non-placeholder) candidate starts at j, consuming the candidate,
 - re-insertion: a source the channel may delete, consuming nothing; at most one per position.
Inversions and re-insertions are edits, limited per window of noisy positions.
"""
import math
from collections import defaultdict
from typing import Dict, List, NamedTuple, Optional, Tuple

from prepocr import constants
from prepocr.correction.char_lm import CharLM
from prepocr.models.beam_config import BeamConfig
from prepocr.models.error_model import ErrorModel
from prepocr.utils.proxy import task_pool_proxy
from preputils import logging

logger = logging.get_logger(__name__)

MIN_IDENTITY_PROBABILITY = 1e-12


class _State(NamedTuple):
    score: float
    text: str
    # noisy positions of edits still inside the window
    edits: Tuple[int, ...]
    reinserted: bool


class ReverseChannel:
    """
    Error model indexed for decoding: inversions by the first character of their candidate and
    re-insertable sources.
    """

    def __init__(self, channel: ErrorModel):
        self.channel = channel
        self.inversions: Dict[str, List[Tuple[str, str, float]]] = defaultdict(list)
        self.reinsertions: List[Tuple[str, float]] = []
        for source in sorted(channel.table):
            for candidate, probability in sorted(channel.table[source].items()):
                if candidate == constants.DELETION_PLACEHOLDER:
                    self.reinsertions.append((source, math.log(probability)))
                else:
                    self.inversions[candidate[0]].append((source, candidate, math.log(probability)))
        self._identity: Dict[str, float] = {}

    def identity_log_prob(self, char: str) -> float:
        cached = self._identity.get(char)
        if cached is None:
            cached = math.log(max(1.0 - self.channel.total_mass(char), MIN_IDENTITY_PROBABILITY))
            self._identity[char] = cached
        return cached

    def is_empty(self) -> bool:
        return not self.inversions and not self.reinsertions


def score_text(clean: str, edits: List[Tuple[str, str]], lm: CharLM, reverse: ReverseChannel,
               cfg: BeamConfig) -> float:
    """
    Score of one derivation given as (clean piece, noisy piece) steps; a noisy piece equal to the
    clean piece is an identity step, an empty noisy piece a re-insertion.
    """
    channel = 0.0
    for clean_piece, noisy_piece in edits:
        if clean_piece == noisy_piece:
            channel += reverse.identity_log_prob(clean_piece)
        else:
            channel += math.log(reverse.channel.table[clean_piece][noisy_piece or constants.DELETION_PLACEHOLDER])
    return cfg.channel_weight * channel + cfg.lm_weight * lm.score(clean)


def identity_score(noisy: str, lm: CharLM, reverse: ReverseChannel, cfg: BeamConfig) -> float:
    channel = sum(reverse.identity_log_prob(char) for char in noisy)
    return cfg.channel_weight * channel + cfg.lm_weight * lm.score(noisy)


def _better(a: _State, b: _State) -> bool:
    return a.score > b.score or (a.score == b.score and a.text < b.text)


def _prune(states: Dict[tuple, _State], width: int) -> List[_State]:
    ranked = sorted(states.values(), key=lambda state: (-state.score, state.text))
    return ranked[:width]


def correct_text(noisy: str, lm: CharLM, channel: ErrorModel, cfg: Optional[BeamConfig] = None,
                 reverse: Optional[ReverseChannel] = None) -> str:
    cfg = (cfg or BeamConfig()).validate()
    reverse = reverse or ReverseChannel(channel)
    if not noisy or reverse.is_empty():
        return noisy

    history_length = max(0, lm.order - 1)
    buckets: Dict[int, Dict[tuple, _State]] = defaultdict(dict)

    def push(position: int, state: _State) -> None:
        key = (state.text[-history_length:] if history_length else "", state.edits, state.reinserted)
        bucket = buckets[position]
        current = bucket.get(key)
        if current is None or _better(state, current):
            bucket[key] = state

    def extend(state: _State, position: int, char: str, channel_log: float, edit: bool,
               reinserted: bool) -> _State:
        lm_log = lm.log_prob(state.text[-history_length:] if history_length else "", char)
        score = state.score + cfg.channel_weight * channel_log + cfg.lm_weight * lm_log
        edits = state.edits + (position,) if edit else state.edits
        return _State(score, state.text + char, edits, reinserted)

    def can_edit(state: _State, position: int) -> Tuple[bool, Tuple[int, ...]]:
        recent = tuple(edit for edit in state.edits if edit > position - cfg.edit_window)
        return len(recent) < cfg.max_edits_per_window, recent

    push(0, _State(0.0, "", (), False))
    length = len(noisy)
    for position in range(length + 1):
        if position not in buckets:
            continue
        states = _prune(buckets.pop(position), cfg.beam_width)

        reinserted_states = []
        for state in states:
            if state.reinserted:
                continue
            allowed, recent = can_edit(state, position)
            if not allowed:
                continue
            base = state._replace(edits=recent)
            for source, log_probability in reverse.reinsertions:
                reinserted_states.append(extend(base, position, source, log_probability, True, True))
        if reinserted_states:
            merged = {}
            for state in states + reinserted_states:
                key = (state.text[-history_length:] if history_length else "", state.edits, state.reinserted)
                if key not in merged or _better(state, merged[key]):
                    merged[key] = state
            states = _prune(merged, cfg.beam_width)

        if position == length:
            buckets[position] = {index: state for index, state in enumerate(states)}
            break

        char = noisy[position]
        for state in states:
            allowed, recent = can_edit(state, position)
            base = state._replace(edits=recent)
            push(position + 1, extend(base, position, char, reverse.identity_log_prob(char), False, False))
            if not allowed:
                continue
            for source, candidate, log_probability in reverse.inversions.get(char, ()):
                if noisy.startswith(candidate, position):
                    push(position + len(candidate), extend(base, position, source, log_probability, True, False))

    finals = list(buckets.get(length, {}).values())
    if not finals:
        return noisy
    best = min(finals, key=lambda state: (-state.score, state.text))
    baseline = identity_score(noisy, lm, reverse, cfg)
    if best.text == noisy or best.score <= baseline:
        return noisy
    logger.trace("Corrected {!r} -> {!r} ({} > {})", noisy, best.text, best.score, baseline)
    return best.text


def correct_lines(lines: List[str], lm: CharLM, channel: ErrorModel, cfg: Optional[BeamConfig] = None,
                  reverse: Optional[ReverseChannel] = None) -> List[str]:
    """
    Corrects independent lines on the worker pool; the models are shared read-only.
    """
    reverse = reverse or ReverseChannel(channel)
    return task_pool_proxy.map_tasks(lambda line: correct_text(line, lm, channel, cfg, reverse), lines)
