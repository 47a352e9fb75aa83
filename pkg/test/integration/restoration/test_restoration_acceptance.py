import numpy as np

from prepocr.imaging.gray_image import GrayImage
from prepocr.metrics import amp
from prepocr.models.amp_region import AmpRegion
from prepocr.models.config.dataset_config_model import DatasetConfigModel
from prepocr.models.fusion_method import FusionMethod
from prepocr.models.render_spec import RenderSpec
from prepocr.models.restoration_mode import RestorationMode
from prepocr.models.scan_direction import ScanDirection
from prepocr.restoration import patch_plan, patch_restorer
from prepocr.restoration.restorers.identity_restorer import IdentityRestorer
from prepocr.restoration.restorers.otsu_restorer import OtsuRestorer
from prepocr.synthesis import dataset_generator, noise_levels
from prepocr.test_utils import helpers
from prepocr.test_utils.abstract_test_case import AbstractTestCase
from prepocr.utils import seeds
from prepocr.utils.proxy import task_pool_proxy

TRIMS = (0, 32, 64)
SIZE_COUNT = 200
FUSION_DRAWS = 1000


def coverage_of(plan) -> np.ndarray:
    padded_width, padded_height = plan.padded_size()
    coverage = np.zeros((padded_height, padded_width), dtype=np.int32)
    for patch in plan.patches:
        center = plan.retained_center(patch)
        coverage[center.y0:center.y0 + center.height, center.x0:center.x0 + center.width] += 1
    return coverage


class RestorationAcceptanceTest(AbstractTestCase):

    def test_retained_centers_tile_and_identity_round_trips(self):
        task_pool_proxy.init(4)
        rng = seeds.create_rng(2024)
        for _ in range(SIZE_COUNT):
            width, height = (int(value) for value in rng.integers(1, 2001, size=2))
            img = helpers.random_image(width, height, seed=width * 2003 + height)
            for trim in TRIMS:
                for direction in ScanDirection:
                    plan = patch_plan.plan_patches(width, height, direction, trim)
                    coverage = coverage_of(plan)
                    area = plan.original_area()
                    original = coverage[area.y0:area.y0 + area.height, area.x0:area.x0 + area.width]
                    self.assertTrue((original == 1).all(), (width, height, trim, direction))
                    self.assertLessEqual(int(coverage.max()), 1)
                self.assertEqual(img, patch_restorer.restore_image(img, IdentityRestorer(), RestorationMode.MULTI,
                                                                   trim), (width, height, trim))

    def test_fusion_law(self):
        rng = seeds.create_rng(99)
        shape = (FUSION_DRAWS, FUSION_DRAWS)
        agreed = rng.integers(0, 256, size=shape)
        odd = rng.integers(0, 256, size=shape)
        position = rng.integers(0, 4, size=shape)
        stack = np.repeat(agreed[None], 4, axis=0)
        np.put_along_axis(stack, position[None], odd[None], axis=0)
        passes = [GrayImage(layer.astype(np.uint8)) for layer in stack]
        self.assertTrue(np.array_equal(agreed, patch_restorer.fuse(passes, FusionMethod.MEDIAN).data))

        values = rng.integers(0, 256, size=(4, 200, 200))
        ordered = np.sort(values, axis=0)
        passes = [GrayImage(layer.astype(np.uint8)) for layer in values]
        median = patch_restorer.fuse(passes, FusionMethod.MEDIAN).data.astype(np.int64)
        mean = patch_restorer.fuse(passes, FusionMethod.MEAN).data.astype(np.int64)
        for y in range(0, 200, 7):
            for x in range(0, 200, 3):
                middle = int(ordered[1, y, x]) + int(ordered[2, y, x])
                total = int(values[:, y, x].sum())
                self.assertEqual(middle // 2 + middle % 2, median[y, x])
                self.assertEqual(total // 4 + (1 if total % 4 >= 2 else 0), mean[y, x])

    def test_otsu_beats_identity_on_level_three_pairs(self):
        task_pool_proxy.init(4)
        config = DatasetConfigModel(count=200, level_weights={3: 1.0}, master_seed=7, stitch_fraction=0.0,
                                    lines_per_page=12, wrap_width=40)
        template = RenderSpec(text="", font_size=24, margins=20)
        levels = noise_levels.load_noise_levels()
        page_texts = dataset_generator.split_corpus(helpers.in_domain_text(150000, seed=7), config.lines_per_page,
                                                    config.wrap_width)

        def make_pair(index: int):
            pair = dataset_generator.generate_pair(page_texts[index], dataset_generator.plan_pair(index, config),
                                                   config, levels, template)
            restored = patch_restorer.restore_image(pair.degraded, OtsuRestorer(), RestorationMode.MULTI, 64,
                                                    FusionMethod.MEDIAN)
            return pair.clean, pair.degraded, restored

        triples = task_pool_proxy.map_tasks(make_pair, range(config.count))
        identity_acc, _count = amp.evaluate_pairs([(clean, degraded) for clean, degraded, _ in triples])
        otsu_acc, _count = amp.evaluate_pairs([(clean, restored) for clean, _, restored in triples])

        identity_amp = amp.finalize_amp(identity_acc, AmpRegion.FULL)[0]
        otsu_amp = amp.finalize_amp(otsu_acc, AmpRegion.FULL)[0]
        self.assertGreater(otsu_amp, identity_amp)
