import os

import numpy as np
from PIL import Image

from prepocr.imaging import image_io
from prepocr.imaging.gray_image import GrayImage
from prepocr.test_utils import helpers
from prepocr.test_utils.abstract_test_case import AbstractTestCase


class ImageIoTest(AbstractTestCase):

    def test_png_round_trip(self):
        img = helpers.random_image(17, 11)
        path = os.path.join(self.make_temp_dir(), "img.png")
        image_io.save_png(img, path)
        self.assertEqual(img, image_io.load_gray(path))

    def test_colour_uses_bt601_luma(self):
        rgb = np.zeros((1, 3, 3), dtype=np.uint8)
        rgb[0, 0] = (255, 0, 0)
        rgb[0, 1] = (0, 255, 0)
        rgb[0, 2] = (0, 0, 255)
        path = os.path.join(self.make_temp_dir(), "rgb.png")
        Image.fromarray(rgb).save(path)
        self.assertEqual([[76, 150, 29]], image_io.load_gray(path).data.tolist())

    def test_checksum_depends_on_dimensions(self):
        img = helpers.random_image(4, 6)
        reshaped = GrayImage(img.data.reshape(4, 6))
        self.assertEqual(image_io.checksum(img), image_io.checksum(GrayImage(img.data)))
        self.assertNotEqual(image_io.checksum(img), image_io.checksum(reshaped))
        self.assertEqual(64, len(image_io.checksum(img)))
