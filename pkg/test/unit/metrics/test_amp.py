import os

import numpy as np

from prepocr.exceptions import ImageDimensionError, RegionEmptyError
from prepocr.imaging import image_io
from prepocr.imaging.gray_image import GrayImage
from prepocr.metrics import amp
from prepocr.metrics.psnr_accumulator import PsnrAccumulator
from prepocr.models.amp_region import AmpRegion
from prepocr.test_utils import helpers, oracles
from prepocr.test_utils.abstract_test_case import AbstractTestCase
from prepocr.utils import seeds


class AmpTest(AbstractTestCase):

    def test_identical_prediction_is_100_db(self):
        img = helpers.text_like_image(256, 256)
        mask, psnr_map = amp.masked_psnr_map(img, img)
        self.assertTrue(mask.any())
        self.assertTrue((psnr_map[mask] == 100.0).all())
        acc = amp.accumulate(PsnrAccumulator(), psnr_map, mask)
        for region in AmpRegion:
            self.assertEqual(100.0, amp.finalize_amp(acc, region)[0])

    def test_closed_form_pixels(self):
        gt = np.full((4, 4), 255, dtype=np.uint8)
        gt[0, 0] = 0
        gt[0, 1] = 100
        pred = gt.copy()
        pred[0, 0] = 255
        pred[0, 1] = 101
        mask, psnr_map = amp.masked_psnr_map(GrayImage(gt), GrayImage(pred))
        self.assertTrue(mask[0, 0] and mask[0, 1])
        self.assertAlmostEqual(0.0, psnr_map[0, 0])
        self.assertAlmostEqual(48.1308036, psnr_map[0, 1], places=6)
        self.assertFalse(mask[3, 3])

    def test_mask_is_union_of_both_foregrounds(self):
        gt = helpers.two_level_image(16, 16, 0, 255, 0.25)
        pred = GrayImage(np.flipud(gt.data))
        mask, _ = amp.masked_psnr_map(gt, pred)
        self.assertTrue(np.array_equal(mask, (gt.data == 0) | (pred.data == 0)))

    def test_dimension_mismatch(self):
        with self.assertRaises(ImageDimensionError):
            amp.masked_psnr_map(GrayImage.filled(4, 4), GrayImage.filled(4, 5))
        with self.assertRaises(ImageDimensionError):
            PsnrAccumulator(4, 4).accumulate(np.zeros((5, 4)), np.zeros((5, 4), dtype=bool))

    def test_accumulate_counts(self):
        acc = PsnrAccumulator(2, 2)
        psnr_map = np.array([[100.0, 0.0], [20.0, 30.0]])
        mask = np.array([[True, False], [True, False]])
        acc.accumulate(psnr_map, np.zeros((2, 2), dtype=bool))
        self.assertEqual(0, acc.total_count())
        acc.accumulate(psnr_map, mask).accumulate(psnr_map, mask)
        self.assertEqual([[2, 0], [2, 0]], acc.count_map.tolist())
        self.assertEqual(0.0, acc.sum_map[0, 1])
        acc.accumulate(np.zeros((2, 2)), np.array([[False, False], [True, False]]))
        self.assertEqual(100.0, acc.mean_map()[0, 0])
        self.assertAlmostEqual(40.0 / 3, acc.mean_map()[1, 0])

    def test_two_point_mean(self):
        acc = PsnrAccumulator(2, 1)
        acc.accumulate(np.array([[0.0, 100.0]]), np.array([[True, True]]))
        self.assertEqual(50.0, amp.finalize_amp(acc)[0])

    def test_empty_region(self):
        acc = PsnrAccumulator()
        acc.accumulate(np.full((256, 256), 50.0), np.pad(np.ones((10, 10), dtype=bool), ((0, 246), (0, 246))))
        self.assertEqual(50.0, amp.finalize_amp(acc, AmpRegion.FULL)[0])
        with self.assertRaises(RegionEmptyError):
            amp.finalize_amp(acc, AmpRegion.CENTRAL_128)

    def test_central_region_matches_precropped(self):
        rng = seeds.create_rng(3)
        acc = PsnrAccumulator()
        for _ in range(3):
            acc.accumulate(rng.uniform(0, 100, size=(256, 256)), rng.random((256, 256)) < 0.3)
        central, mean = amp.finalize_amp(acc, AmpRegion.CENTRAL_128)
        self.assertEqual((128, 128), mean.shape)
        self.assertEqual(central, amp.finalize_amp(acc.crop(64), AmpRegion.FULL)[0])

    def test_border_errors_favour_central_region(self):
        acc = PsnrAccumulator()
        for seed in range(3):
            gt = helpers.text_like_image(256, 256, seed=seed)
            pred = gt.data.copy()
            pred[:32, :] = 255 - pred[:32, :]
            pred[:, :16] = 128
            amp.accumulate_pair(acc, gt, GrayImage(pred))
        full = amp.finalize_amp(acc, AmpRegion.FULL)[0]
        self.assertGreater(amp.finalize_amp(acc, AmpRegion.CENTRAL_128)[0], full)
        self.assertEqual(100.0, amp.finalize_amp(acc, AmpRegion.CENTRAL_128)[0])

    def test_matches_naive_oracle(self):
        pairs = []
        for seed in range(2):
            gt = helpers.text_like_image(256, 256, seed=seed)
            pairs.append((gt, helpers.mutate_pixels(gt, 4000, seed=seed)))
        acc, patch_count = amp.evaluate_pairs(pairs)
        self.assertEqual(2, patch_count)
        self.assertAlmostEqual(oracles.naive_amp(pairs), amp.finalize_amp(acc)[0], delta=1e-9)
        self.assertAlmostEqual(oracles.naive_amp(pairs, 64), amp.finalize_amp(acc, AmpRegion.CENTRAL_128)[0],
                               delta=1e-9)

    def test_merge_order_independent(self):
        rng = seeds.create_rng(9)
        parts = []
        for _ in range(4):
            part = PsnrAccumulator(8, 8)
            part.accumulate(rng.uniform(0, 100, size=(8, 8)), rng.random((8, 8)) < 0.5)
            parts.append(part)
        forward = PsnrAccumulator(8, 8)
        backward = PsnrAccumulator(8, 8)
        for part in parts:
            forward.merge(part)
        for part in reversed(parts):
            backward.merge(part)
        self.assertTrue(np.array_equal(forward.count_map, backward.count_map))
        self.assertTrue(np.allclose(forward.sum_map, backward.sum_map, rtol=0, atol=1e-9))

    def test_fixed_patch_rects(self):
        rects = amp.fixed_patch_rects(1000, 1500)
        self.assertEqual(2, len(rects))
        self.assertEqual((205, 372), (rects[0].x0, rects[0].y0))
        self.assertEqual((539, 872), (rects[1].x0, rects[1].y0))
        edge = amp.fixed_patch_rects(256, 300, count=3)
        self.assertTrue(all(rect.fits(256, 300) for rect in edge))
        with self.assertRaises(ImageDimensionError):
            amp.fixed_patch_rects(255, 1000)

    def test_evaluate_directories(self):
        gt_dir = self.make_temp_dir()
        pred_dir = self.make_temp_dir()
        for index in range(3):
            gt = helpers.text_like_image(600, 400, seed=index)
            image_io.save_png(gt, os.path.join(gt_dir, "{}.png".format(index)))
            image_io.save_png(gt, os.path.join(pred_dir, "{}.png".format(index)))
        image_io.save_png(GrayImage.filled(256, 256), os.path.join(gt_dir, "extra.png"))
        heat_path = os.path.join(self.make_temp_dir(), "heat.png")

        report = amp.evaluate_directories(gt_dir, pred_dir, heat_path=heat_path)
        self.assertEqual(3, report.pair_count)
        self.assertEqual(6, report.patch_count)
        self.assertEqual(["extra.png"], report.unpaired)
        self.assertEqual({"full": 100.0, "central-192": 100.0, "central-128": 100.0}, report.amp)
        heat = image_io.load_gray(heat_path)
        self.assertEqual((256, 256), (heat.width, heat.height))
        self.assertTrue(set(np.unique(heat.data).tolist()) <= {0, 255})

    def test_heat_image_scale(self):
        acc = PsnrAccumulator(3, 1)
        acc.accumulate(np.array([[50.0, 100.0, 0.0]]), np.array([[True, True, False]]))
        self.assertEqual([[128, 255, 0]], amp.heat_image(acc).data.tolist())
