import math

import numpy as np

from prepocr.exceptions import ImageDimensionError
from prepocr.imaging import quality
from prepocr.imaging.gray_image import GrayImage
from prepocr.test_utils import helpers
from prepocr.test_utils.abstract_test_case import AbstractTestCase


class QualityTest(AbstractTestCase):

    def test_identical_images_are_infinite(self):
        img = helpers.random_image(8, 8)
        self.assertEqual(math.inf, quality.psnr(img, img))

    def test_black_against_white_is_zero(self):
        self.assertAlmostEqual(0.0, quality.psnr(GrayImage.filled(4, 4, 0), GrayImage.filled(4, 4, 255)))

    def test_single_pixel_difference(self):
        a = GrayImage.filled(256, 256, 100)
        data = a.data.copy()
        data[10, 20] = 101
        b = GrayImage(data)
        self.assertAlmostEqual(10 * math.log10(255 ** 2 * 65536), quality.psnr(a, b), places=9)
        self.assertAlmostEqual(96.29, quality.psnr(a, b), places=2)

    def test_symmetric(self):
        a = helpers.random_image(16, 16, seed=1)
        b = helpers.random_image(16, 16, seed=2)
        self.assertEqual(quality.psnr(a, b), quality.psnr(b, a))

    def test_dimension_mismatch(self):
        with self.assertRaises(ImageDimensionError):
            quality.psnr(GrayImage.filled(2, 3), GrayImage.filled(3, 2))

    def test_matches_direct_mse(self):
        a = helpers.random_image(5, 5, seed=4)
        b = helpers.random_image(5, 5, seed=5)
        mse = np.mean((a.to_float() - b.to_float()) ** 2)
        self.assertAlmostEqual(10 * math.log10(255 ** 2 / mse), quality.psnr(a, b), places=9)
