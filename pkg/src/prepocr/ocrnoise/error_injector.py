from typing import Dict, List, Tuple

import numpy as np

from prepocr import constants
from prepocr.models.error_model import ErrorModel
from prepocr.models.rate_scale import RateScale
from prepocr.utils import seeds

PLACEHOLDER = constants.DELETION_PLACEHOLDER


class _SourceEntry:
    def __init__(self, candidates: Dict[str, float]):
        names = sorted(candidates)
        # the placeholder only marks a deletion and never reaches the output
        self.outputs: List[str] = [name.replace(PLACEHOLDER, "") for name in names]
        self.cumulative = np.cumsum([candidates[name] for name in names], dtype=np.float64)
        self.mass = float(self.cumulative[-1]) if len(names) else 0.0


class ErrorInjector:
    """
    Injects errors drawn from an error model, scaled by a rate multiplier.

    Each character consumes one uniform draw `u` whatever the multiplier: it is replaced when
    u < min(1, lambda * mass) and the candidate is the first whose scaled cumulative probability
    exceeds u. Reusing a seed across multipliers therefore yields nested sets of replaced
    positions, which keeps measured error rates monotone in the multiplier.
    """
    model: ErrorModel

    def __init__(self, model: ErrorModel):
        self.model = model
        self._entries: Dict[str, _SourceEntry] = {
            source: _SourceEntry(candidates) for source, candidates in model.table.items() if candidates
        }
        self._alphabet = model.candidate_alphabet()

    def replacement_probability(self, char: str, rate_lambda: float) -> float:
        entry = self._entries.get(char)
        if entry is None:
            return 0.0
        return min(1.0, rate_lambda * entry.mass)

    def lambda_ceiling(self, max_lambda: float = constants.DEFAULT_MAX_LAMBDA) -> float:
        """
        Smallest multiplier beyond which no replacement probability grows any further.
        """
        masses = [entry.mass for entry in self._entries.values() if entry.mass > 0]
        if not masses:
            return 0.0
        return min(max_lambda, 1.0 / min(masses))

    def inject(self, text: str, rate_lambda: float, seed: int) -> str:
        if not text:
            return text
        if rate_lambda < 0:
            raise ValueError("Rate multiplier must be non-negative, got {}".format(rate_lambda))
        rng = seeds.create_rng(seed)
        replace_draws = rng.random(len(text))
        insert_draws = rng.random(len(text))
        insert_picks = rng.random(len(text))
        output = list(text)

        if rate_lambda > 0:
            codes = np.frombuffer(text.encode("utf-32-le"), dtype=np.uint32)
            unique_codes, inverse = np.unique(codes, return_inverse=True)
            for index, code in enumerate(unique_codes):
                entry = self._entries.get(chr(int(code)))
                if entry is None or entry.mass <= 0:
                    continue
                positions = np.flatnonzero(inverse == index)
                probability = min(1.0, rate_lambda * entry.mass)
                draws = replace_draws[positions]
                hits = draws < probability
                if not hits.any():
                    continue
                thresholds = entry.cumulative * (probability / entry.mass)
                choices = np.minimum(np.searchsorted(thresholds, draws[hits], side="right"), len(entry.outputs) - 1)
                for position, choice in zip(positions[hits], choices):
                    output[position] = entry.outputs[choice]

        insertion_probability = min(1.0, rate_lambda * self.model.insertion_rate)
        if insertion_probability > 0 and self._alphabet:
            alphabet = self._alphabet
            for position in np.flatnonzero(insert_draws < insertion_probability):
                output[position] += alphabet[min(int(insert_picks[position] * len(alphabet)), len(alphabet) - 1)]
        # placeholders already present in the input are dropped too
        return "".join(output).replace(PLACEHOLDER, "")


def inject_errors(text: str, model: ErrorModel, scale: RateScale, seed: int) -> str:
    return ErrorInjector(model).inject(text, scale.rate_lambda, seed)


def chunked_injection(text: str, injector: ErrorInjector, rate_lambda: float, seed: int,
                      chunk_length: int = constants.CALIBRATION_CHUNK_LENGTH) -> List[Tuple[str, str]]:
    """
    Splits `text` into fixed-length chunks and injects each with its own derived seed.
    """
    return [
        (text[start:start + chunk_length],
         injector.inject(text[start:start + chunk_length], rate_lambda, seeds.mix(seed, index)))
        for index, start in enumerate(range(0, len(text), chunk_length))
    ]
