import numpy as np

from prepocr.imaging import otsu
from prepocr.imaging.gray_image import GrayImage
from prepocr.test_utils import helpers
from prepocr.test_utils.abstract_test_case import AbstractTestCase
from prepocr.utils import seeds


def _brute_force_threshold(img: GrayImage) -> int:
    data = img.data.ravel().astype(np.float64)
    scores = []
    for t in range(255):
        low = data[data <= t]
        high = data[data > t]
        if low.size == 0 or high.size == 0:
            scores.append(None)
            continue
        w0 = low.size / data.size
        w1 = high.size / data.size
        scores.append(w0 * w1 * (low.mean() - high.mean()) ** 2)
    valid = [score for score in scores if score is not None]
    if not valid:
        return int(data[0])
    best = max(valid)
    levels = [t for t, score in enumerate(scores) if score is not None and np.isclose(score, best, rtol=1e-12)]
    return (levels[0] + levels[-1]) // 2


class OtsuTest(AbstractTestCase):

    def test_half_black_half_white(self):
        img = helpers.two_level_image(16, 16, 0, 255, 0.5)
        self.assertEqual(127, otsu.otsu_threshold(img))

    def test_uniform_image(self):
        img = GrayImage.filled(10, 7, 200)
        self.assertEqual(200, otsu.otsu_threshold(img))
        self.assertFalse(otsu.foreground_mask(img).any())

    def test_two_level_plateau_midpoint(self):
        img = helpers.two_level_image(10, 10, 50, 220, 0.3)
        self.assertEqual(134, otsu.otsu_threshold(img))
        self.assertEqual(30, int(otsu.foreground_mask(img).sum()))

    def test_matches_exhaustive_search_on_random_images(self):
        rng = seeds.create_rng(7)
        for seed in range(60):
            width = int(rng.integers(1, 12))
            height = int(rng.integers(1, 12))
            levels = int(rng.integers(1, 6))
            palette = rng.choice(256, size=levels, replace=False)
            data = palette[rng.integers(0, levels, size=(height, width))].astype(np.uint8)
            img = GrayImage(data)
            self.assertEqual(_brute_force_threshold(img), otsu.otsu_threshold(img), "seed {}".format(seed))

    def test_binarize_produces_two_values(self):
        img = helpers.text_like_image(64, 64)
        binary = otsu.binarize(img)
        self.assertTrue(set(np.unique(binary.data)).issubset({0, 255}))
