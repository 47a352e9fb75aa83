import math

from prepocr.correction import char_lm, noisy_channel_corrector
from prepocr.correction.noisy_channel_corrector import ReverseChannel
from prepocr.exceptions import ConfigError
from prepocr.models.beam_config import BeamConfig
from prepocr.models.error_model import ErrorModel
from prepocr.test_utils.abstract_test_case import AbstractTestCase
from prepocr.utils import seeds
from prepocr.utils.proxy import task_pool_proxy

CORPUS = "the cat sat on the mat with the hat and the man ran to the cat. " * 20
CHANNEL = ErrorModel({
    "h": {"b": 0.1, "@": 0.05},
    "m": {"rn": 0.1},
    "e": {"c": 0.08},
    "a": {"o": 0.05},
})
EXHAUSTIVE = BeamConfig(beam_width=100000, max_edits_per_window=2, edit_window=16)


def exhaustive_correction(noisy: str, lm, channel: ErrorModel, cfg: BeamConfig) -> str:
    reverse = ReverseChannel(channel)
    history_length = lm.order - 1
    finals = []

    def derive(position, text, score, reinserted, edits_left):
        if not reinserted and edits_left > 0:
            for source, log_probability in reverse.reinsertions:
                step = score + cfg.channel_weight * log_probability + cfg.lm_weight * lm.log_prob(
                    text[-history_length:], source)
                derive(position, text + source, step, True, edits_left - 1)
        if position == len(noisy):
            finals.append((score, text))
            return
        char = noisy[position]
        identity = score + cfg.channel_weight * reverse.identity_log_prob(char) + cfg.lm_weight * lm.log_prob(
            text[-history_length:], char)
        derive(position + 1, text + char, identity, False, edits_left)
        if edits_left == 0:
            return
        for source, candidate, log_probability in reverse.inversions.get(char, ()):
            if noisy.startswith(candidate, position):
                step = score + cfg.channel_weight * log_probability + cfg.lm_weight * lm.log_prob(
                    text[-history_length:], source)
                derive(position + len(candidate), text + source, step, False, edits_left - 1)

    derive(0, "", 0.0, False, cfg.max_edits_per_window)
    best_score, best_text = min(finals, key=lambda final: (-final[0], final[1]))
    if best_text == noisy or best_score <= noisy_channel_corrector.identity_score(noisy, lm, reverse, cfg):
        return noisy
    return best_text


class NoisyChannelCorrectorTest(AbstractTestCase):

    @classmethod
    def setUpClass(cls):
        super(NoisyChannelCorrectorTest, cls).setUpClass()
        cls.lm = char_lm.train_char_lm(CORPUS, order=5)

    def test_substitution_is_inverted(self):
        channel = ErrorModel({"h": {"b": 0.1}})
        self.assertEqual("the cat", noisy_channel_corrector.correct_text("tbe cat", self.lm, channel))

    def test_deleted_character_is_reinserted(self):
        self.assertEqual("the cat", noisy_channel_corrector.correct_text("te cat", self.lm, CHANNEL))

    def test_multi_character_candidate_collapses(self):
        self.assertEqual("the mat", noisy_channel_corrector.correct_text("the rnat", self.lm, CHANNEL))

    def test_empty_channel_is_identity(self):
        for text in ("tbe cat", "", "qqq zzz"):
            self.assertEqual(text, noisy_channel_corrector.correct_text(text, self.lm, ErrorModel()))

    def test_likely_text_is_unchanged(self):
        for text in ("the cat sat", "the man ran", "the hat"):
            self.assertEqual(text, noisy_channel_corrector.correct_text(text, self.lm, CHANNEL))

    def test_derivation_score_beats_identity(self):
        reverse = ReverseChannel(CHANNEL)
        cfg = BeamConfig()
        steps = [("t", "t"), ("h", "b"), ("e", "e"), (" ", " "), ("c", "c"), ("a", "a"), ("t", "t")]
        corrected = noisy_channel_corrector.score_text("the cat", steps, self.lm, reverse, cfg)
        self.assertGreater(corrected, noisy_channel_corrector.identity_score("tbe cat", self.lm, reverse, cfg))
        reinserted = noisy_channel_corrector.score_text("the", [("t", "t"), ("h", ""), ("e", "e")], self.lm, reverse,
                                                        cfg)
        self.assertAlmostEqual(
            reverse.identity_log_prob("t") + math.log(0.05) + reverse.identity_log_prob("e") + self.lm.score("the"),
            reinserted
        )

    def test_matches_exhaustive_search(self):
        cases = ["tbe cat", "te rnat", "thc hat", "o cot", "tbc rnon", "bat", "hbh", "t"]
        rng = seeds.create_rng(21)
        alphabet = "thecamrnbo "
        for _ in range(40):
            length = int(rng.integers(1, 11))
            cases.append("".join(alphabet[int(index)] for index in rng.integers(0, len(alphabet), size=length)))
        for noisy in cases:
            self.assertEqual(
                exhaustive_correction(noisy, self.lm, CHANNEL, EXHAUSTIVE),
                noisy_channel_corrector.correct_text(noisy, self.lm, CHANNEL, EXHAUSTIVE),
                noisy,
            )

    def test_edit_budget(self):
        tight = BeamConfig(max_edits_per_window=1, edit_window=16)
        self.assertEqual("the cat", noisy_channel_corrector.correct_text("tbc cat", self.lm, CHANNEL))
        corrected = noisy_channel_corrector.correct_text("tbc cat", self.lm, CHANNEL, tight)
        self.assertNotEqual("the cat", corrected)
        self.assertLessEqual(sum(a != b for a, b in zip(corrected, "tbc cat")), 1)

    def test_correct_lines_on_pool(self):
        lines = ["tbe cat", "te rnat", "the hat"]
        sequential = noisy_channel_corrector.correct_lines(lines, self.lm, CHANNEL)
        task_pool_proxy.init(3)
        self.assertEqual(sequential, noisy_channel_corrector.correct_lines(lines, self.lm, CHANNEL))
        self.assertEqual("the cat", sequential[0])

    def test_invalid_config(self):
        with self.assertRaises(ConfigError):
            noisy_channel_corrector.correct_text("abc", self.lm, CHANNEL, BeamConfig(beam_width=0))
