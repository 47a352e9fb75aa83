import numpy as np

from prepocr.exceptions import ImageDimensionError
from prepocr.imaging import gray_image
from prepocr.imaging.gray_image import GrayImage
from prepocr.test_utils.abstract_test_case import AbstractTestCase


class GrayImageTest(AbstractTestCase):

    def test_dimensions(self):
        img = GrayImage(np.zeros((3, 5), dtype=np.uint8))
        self.assertEqual(5, img.width)
        self.assertEqual(3, img.height)
        self.assertEqual(15, img.data.size)

    def test_data_is_read_only(self):
        source = np.zeros((2, 2), dtype=np.uint8)
        img = GrayImage(source)
        source[0, 0] = 9
        self.assertEqual(0, img.data[0, 0])
        with self.assertRaises(ValueError):
            img.data[0, 0] = 1

    def test_rejects_empty_and_wrong_types(self):
        with self.assertRaises(ImageDimensionError):
            GrayImage(np.zeros((0, 3), dtype=np.uint8))
        with self.assertRaises(ImageDimensionError):
            GrayImage(np.zeros((2, 2, 3), dtype=np.uint8))
        with self.assertRaises(TypeError):
            GrayImage(np.zeros((2, 2), dtype=np.float64))

    def test_quantize_rounds_half_away_from_zero_and_clamps(self):
        values = np.array([[-3.0, 0.5, 1.49999, 2.5, 254.5, 300.0]])
        self.assertEqual([[0, 1, 1, 3, 255, 255]], gray_image.quantize(values).tolist())

    def test_equality(self):
        self.assertEqual(GrayImage.filled(3, 2, 7), GrayImage.filled(3, 2, 7))
        self.assertNotEqual(GrayImage.filled(3, 2, 7), GrayImage.filled(2, 3, 7))
