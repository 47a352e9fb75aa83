"""
Character n-gram language model with add-k smoothing.

A character is predicted from the longest suffix of its history (at most `order - 1`
characters) that was seen followed by something in training:

    P(c | h) = (count(h c) + k) / (count(h) + k * (|V| + 1))

where count(h) sums the continuations of h and the extra vocabulary slot is the unknown symbol,
which stands for every character outside V. Probabilities over V and the unknown symbol sum to 1
for every history.

Serialized form: gzip (mtime 0) of sorted-key JSON
    {"format": "prepocr-charlm", "version": 1, "order": 5, "k": 0.01,
     "vocabulary": [...], "counts": {context: {char: count}}}
"""
import gzip
import json
import math
from collections import Counter, defaultdict
from typing import Dict, List, Tuple

from prepocr import constants
from prepocr.exceptions import ConfigError, EmptyCorpusError, ModelFormatError
from preputils import logging
from preputils.encoding import json_encoder

logger = logging.get_logger(__name__)


class CharLM:
    order: int
    k: float
    vocabulary: List[str]
    counts: Dict[str, Dict[str, int]]

    def __init__(self, order: int, k: float, vocabulary: List[str], counts: Dict[str, Dict[str, int]]):
        if order < 1:
            raise ConfigError("LM order must be at least 1, got {}".format(order))
        if k <= 0:
            raise ConfigError("Smoothing constant must be positive, got {}".format(k))
        self.order = order
        self.k = k
        self.vocabulary = vocabulary
        self.counts = counts
        self._vocabulary_set = set(vocabulary)
        self._totals = {context: sum(following.values()) for context, following in counts.items()}
        self._denominator_extra = k * (len(vocabulary) + 1)
        self._cache: Dict[Tuple[str, str], float] = {}

    def context_of(self, history: str) -> str:
        """
        Longest suffix of `history` shorter than `order` with observed continuations.
        """
        start = max(0, len(history) - self.order + 1)
        for position in range(start, len(history) + 1):
            suffix = history[position:]
            if self._totals.get(suffix):
                return suffix
        return ""

    def prob(self, history: str, char: str) -> float:
        context = self.context_of(history)
        following = self.counts.get(context, {})
        count = following.get(char, 0) if char in self._vocabulary_set else 0
        return (count + self.k) / (self._totals.get(context, 0) + self._denominator_extra)

    def log_prob(self, history: str, char: str) -> float:
        key = (history[-(self.order - 1):] if self.order > 1 else "", char)
        cached = self._cache.get(key)
        if cached is None:
            cached = math.log(self.prob(key[0], char))
            self._cache[key] = cached
        return cached

    def symbols(self) -> List[str]:
        """
        The vocabulary plus the unknown symbol: the support of every conditional distribution.
        """
        return self.vocabulary + [constants.UNKNOWN_SYMBOL]

    def score(self, text: str, history: str = "") -> float:
        total = 0.0
        for char in text:
            total += self.log_prob(history, char)
            history = (history + char)[-self.order:]
        return total

    def __eq__(self, other) -> bool:
        if not isinstance(other, CharLM):
            return NotImplemented
        return (self.order, self.k, self.vocabulary, self.counts) == (other.order, other.k, other.vocabulary,
                                                                      other.counts)

    def __repr__(self):
        return "CharLM<order {}, {} symbols, {} contexts>".format(self.order, len(self.vocabulary), len(self.counts))


def train_char_lm(corpus: str, order: int = constants.DEFAULT_LM_ORDER, k: float = constants.DEFAULT_LM_K) -> CharLM:
    if order < 1:
        raise ConfigError("LM order must be at least 1, got {}".format(order))
    if not corpus:
        raise EmptyCorpusError("Cannot train a language model on an empty corpus")
    counts: Dict[str, Counter] = defaultdict(Counter)
    for length in range(1, order + 1):
        grams = Counter(corpus[index:index + length] for index in range(len(corpus) - length + 1))
        for gram, count in grams.items():
            counts[gram[:-1]][gram[-1]] += count
    model = CharLM(
        order,
        k,
        sorted(set(corpus)),
        {context: dict(sorted(following.items())) for context, following in sorted(counts.items())},
    )
    logger.debug("Trained {} on {} characters", model, len(corpus))
    return model


def to_bytes(model: CharLM) -> bytes:
    document = {
        "format": constants.CHAR_LM_FORMAT,
        "version": constants.CHAR_LM_VERSION,
        "order": model.order,
        "k": model.k,
        "vocabulary": model.vocabulary,
        "counts": model.counts,
    }
    return gzip.compress(json_encoder.to_json(document).encode(constants.DEFAULT_TEXT_ENCODING), mtime=0)


def from_bytes(data: bytes) -> CharLM:
    try:
        document = json.loads(gzip.decompress(data).decode(constants.DEFAULT_TEXT_ENCODING))
    except (OSError, EOFError, ValueError) as e:
        raise ModelFormatError("Not a gzip JSON language model: {}".format(e))
    if not isinstance(document, dict) or document.get("format") != constants.CHAR_LM_FORMAT:
        raise ModelFormatError("Not a {} document".format(constants.CHAR_LM_FORMAT))
    if document.get("version") != constants.CHAR_LM_VERSION:
        raise ModelFormatError("Unsupported language model version {}".format(document.get("version")))
    try:
        return CharLM(int(document["order"]), float(document["k"]), list(document["vocabulary"]),
                      {context: {char: int(count) for char, count in following.items()}
                       for context, following in document["counts"].items()})
    except (KeyError, TypeError, AttributeError, ConfigError) as e:
        raise ModelFormatError("Malformed language model: {}".format(e))


def save_char_lm(model: CharLM, path: str) -> None:
    with open(path, "wb") as lm_file:
        lm_file.write(to_bytes(model))


def load_char_lm(path: str) -> CharLM:
    with open(path, "rb") as lm_file:
        return from_bytes(lm_file.read())
