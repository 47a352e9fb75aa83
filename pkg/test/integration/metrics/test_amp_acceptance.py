from prepocr import constants
from prepocr.imaging.gray_image import GrayImage
from prepocr.metrics import amp
from prepocr.models.amp_region import AmpRegion
from prepocr.test_utils import helpers, oracles
from prepocr.test_utils.abstract_test_case import AbstractTestCase

FIXTURE_COUNT = 50


class AmpAcceptanceTest(AbstractTestCase):

    def test_identical_sets_score_zero_error(self):
        pairs = [(helpers.text_like_image(300, 280, seed=seed),) * 2 for seed in range(5)]
        acc, patch_count = amp.evaluate_pairs(pairs)

        self.assertEqual(5 * constants.AMP_PATCHES_PER_IMAGE, patch_count)
        for region in AmpRegion:
            self.assertEqual(constants.AMP_ZERO_ERROR_DB, amp.finalize_amp(acc, region)[0])

    def test_matches_naive_oracle(self):
        for seed in range(FIXTURE_COUNT):
            gt = helpers.text_like_image(256, 256, seed=seed, ink=10 + seed, paper=250 - seed)
            pred = helpers.mutate_pixels(gt, 500 + 150 * seed, seed=seed)
            acc, _count = amp.evaluate_pairs([(gt, pred)])

            self.assertAlmostEqual(oracles.naive_amp([(gt, pred)]), amp.finalize_amp(acc)[0], delta=1e-9)
            self.assertAlmostEqual(oracles.naive_amp([(gt, pred)], 64),
                                   amp.finalize_amp(acc, AmpRegion.CENTRAL_128)[0], delta=1e-9)

    def test_border_degradation_favours_central_region(self):
        pairs = []
        for seed in range(10):
            gt = helpers.text_like_image(256, 256, seed=seed)
            pred = gt.data.copy()
            pred[:, :40] = 255 - pred[:, :40]
            pred[-24:, :] = 128
            pairs.append((gt, GrayImage(pred)))
        acc, _count = amp.evaluate_pairs(pairs)

        full = amp.finalize_amp(acc, AmpRegion.FULL)[0]
        central_192 = amp.finalize_amp(acc, AmpRegion.CENTRAL_192)[0]
        central_128 = amp.finalize_amp(acc, AmpRegion.CENTRAL_128)[0]
        self.assertGreater(central_128, full)
        self.assertGreaterEqual(central_128, central_192)
