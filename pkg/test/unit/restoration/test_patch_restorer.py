from typing import List

import numpy as np

from prepocr.exceptions import ImageDimensionError, RestorerError
from prepocr.imaging.gray_image import GrayImage
from prepocr.models.fusion_method import FusionMethod
from prepocr.models.restoration_mode import RestorationMode
from prepocr.models.restorer_kind import RestorerKind
from prepocr.models.scan_direction import ScanDirection
from prepocr.restoration import patch_plan, patch_restorer
from prepocr.restoration.restorers.abstract_restorer import AbstractRestorer
from prepocr.restoration.restorers.identity_restorer import IdentityRestorer
from prepocr.restoration.restorers.median_restorer import MedianRestorer
from prepocr.restoration.restorers.otsu_restorer import OtsuRestorer
from prepocr.test_utils import helpers
from prepocr.test_utils.abstract_test_case import AbstractTestCase
from prepocr.utils import seeds
from prepocr.utils.proxy import task_pool_proxy


class ShrinkingRestorer(AbstractRestorer):

    def __init__(self):
        super(ShrinkingRestorer, self).__init__(RestorerKind.EXTERNAL, deterministic=False)

    def restore_batch(self, patches: List[GrayImage], first_index: int = 0) -> List[GrayImage]:
        return [GrayImage.filled(128, 128) for _ in patches]


def _pixel_stack(*values):
    return [GrayImage(np.array([[value]], dtype=np.uint8)) for value in values]


class PatchRestorerTest(AbstractTestCase):

    def test_identity_pass_is_identity(self):
        img = helpers.random_image(300, 170, seed=1)
        for trim in (0, 32, 64):
            for direction in ScanDirection:
                plan = patch_plan.plan_patches(img.width, img.height, direction, trim)
                self.assertEqual(img, patch_restorer.restore_pass(img, plan, IdentityRestorer(), batch_size=3))

    def test_identity_restore_all_modes(self):
        img = helpers.random_image(97, 411, seed=2)
        for trim in (0, 32, 64):
            for fusion in FusionMethod:
                self.assertEqual(img, patch_restorer.restore_image(img, IdentityRestorer(), RestorationMode.MULTI,
                                                                   trim, fusion))
            self.assertEqual(img, patch_restorer.restore_image(img, IdentityRestorer(), RestorationMode.SINGLE, trim))

    def test_otsu_restorer_output_is_two_level(self):
        img = helpers.two_level_image(300, 300, 40, 210, 0.4)
        data = img.data.copy()
        np.random.default_rng(0).shuffle(data.reshape(-1))
        restored = patch_restorer.restore_image(
            GrayImage(data), OtsuRestorer(prefilter=False), RestorationMode.SINGLE
        )
        self.assertLessEqual(len(np.unique(restored.data)), 2)

    def test_stride_aligned_image_passes_coincide(self):
        img = helpers.text_like_image(256, 384, seed=4)
        restored, report = patch_restorer.restore_image_with_report(img, MedianRestorer(), trim=64)
        self.assertTrue(report.passes_identical())
        single = patch_restorer.restore_image(img, MedianRestorer(), RestorationMode.SINGLE, 64)
        self.assertEqual(single, restored)

    def test_unaligned_image_records_checksums(self):
        img = helpers.text_like_image(200, 150, seed=4)
        _, report = patch_restorer.restore_image_with_report(img, MedianRestorer(), trim=64)
        self.assertEqual(4, len(report.pass_checksums))
        self.assertEqual(["tl-br", "tr-bl", "bl-tr", "br-tl"], report.directions)
        self.assertEqual(4, report.patches_per_pass)

    def test_wrong_patch_size_names_patch(self):
        img = helpers.random_image(300, 300)
        plan = patch_plan.plan_patches(img.width, img.height, ScanDirection.TL_BR, 64)
        with self.assertRaises(RestorerError) as context:
            patch_restorer.restore_pass(img, plan, ShrinkingRestorer(), batch_size=4)
        self.assertEqual(0, context.exception.patch_index)
        self.assertIn("patch 0", str(context.exception))

    def test_parallel_output_matches_sequential(self):
        img = helpers.text_like_image(333, 290, seed=8)
        sequential = patch_restorer.restore_image(img, OtsuRestorer(), batch_size=2)
        task_pool_proxy.init(4)
        self.assertEqual(sequential, patch_restorer.restore_image(img, OtsuRestorer(), batch_size=2))

    def test_resize_width(self):
        img = helpers.random_image(400, 200)
        restored, report = patch_restorer.restore_image_with_report(img, IdentityRestorer(), resize_width=1216)
        self.assertEqual((1216, 608), (restored.width, restored.height))
        self.assertEqual(1216, report.width)

    def test_fuse_suppresses_single_outlier(self):
        self.assertEqual(10, patch_restorer.fuse(_pixel_stack(10, 10, 10, 200)).data[0, 0])
        self.assertEqual(10, patch_restorer.fuse(_pixel_stack(200, 10, 10, 10)).data[0, 0])

    def test_fuse_even_count_median_and_mean(self):
        self.assertEqual(25, patch_restorer.fuse(_pixel_stack(10, 20, 30, 40), FusionMethod.MEDIAN).data[0, 0])
        self.assertEqual(25, patch_restorer.fuse(_pixel_stack(10, 20, 30, 40), FusionMethod.MEAN).data[0, 0])
        # 10.5 and 10.25 / 10.75
        self.assertEqual(11, patch_restorer.fuse(_pixel_stack(0, 10, 11, 255), FusionMethod.MEDIAN).data[0, 0])
        self.assertEqual(10, patch_restorer.fuse(_pixel_stack(10, 10, 10, 11), FusionMethod.MEAN).data[0, 0])
        self.assertEqual(11, patch_restorer.fuse(_pixel_stack(10, 11, 11, 11), FusionMethod.MEAN).data[0, 0])

    def test_fuse_identical_inputs(self):
        img = helpers.random_image(20, 30)
        for method in FusionMethod:
            self.assertEqual(img, patch_restorer.fuse([img] * 4, method))

    def test_fuse_three_agree_randomized(self):
        rng = seeds.create_rng(11)
        agreed = rng.integers(0, 256, size=(200, 200))
        outlier = rng.integers(0, 256, size=(200, 200))
        position = rng.integers(0, 4, size=(200, 200))
        stack = np.repeat(agreed[None], 4, axis=0)
        np.put_along_axis(stack, position[None], outlier[None], axis=0)
        passes = [GrayImage(layer.astype(np.uint8)) for layer in stack]
        self.assertTrue(np.array_equal(agreed, patch_restorer.fuse(passes).data))

    def test_fuse_rejects_bad_input(self):
        with self.assertRaises(ImageDimensionError):
            patch_restorer.fuse(_pixel_stack(1, 2, 3))
        with self.assertRaises(ImageDimensionError):
            patch_restorer.fuse(_pixel_stack(1, 2, 3) + [GrayImage.filled(2, 1)])
