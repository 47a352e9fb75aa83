import os
import time
from dataclasses import dataclass
from typing import Dict, List, Optional

import numpy as np

from prepocr import constants
from prepocr.exceptions import ConfigError, CorpusExhaustedError, EmptyCorpusError
from prepocr.imaging import image_io
from prepocr.models.config.dataset_config_model import DatasetConfigModel
from prepocr.models.dataset_record import DatasetRecord
from prepocr.models.noise_level import NoiseLevel
from prepocr.models.page_pair import PagePair
from prepocr.models.render_spec import RenderSpec
from prepocr.synthesis import degrader, noise_levels, renderer, stitching
from prepocr.utils import json_utils, seeds
from prepocr.utils.proxy import task_pool_proxy
from prepocr.utils.stats.pipeline_statistics_service import synthesis_statistics
from preputils import logging

logger = logging.get_logger(__name__)

SYNTHESIS_STAGE = "synthesis"


@dataclass
class PairPlan:
    index: int
    seed: int
    levels: List[int]
    fonts: List[str]
    stitched: bool


def split_corpus(corpus: str, lines_per_page: int, wrap_width: int) -> List[str]:
    """
    Cuts the corpus into consecutive page texts of at most `lines_per_page` wrapped lines.
    """
    lines = renderer.wrap_lines(" ".join(corpus.split()), wrap_width)
    return ["\n".join(lines[i:i + lines_per_page]) for i in range(0, len(lines), lines_per_page)]


def plan_pair(index: int, config: DatasetConfigModel) -> PairPlan:
    """
    Level, font and stitching draws of pair `index`; a pure function of the master seed and index.
    """
    seed = seeds.mix(config.master_seed, index)
    rng = seeds.create_rng(seed)
    levels = sorted(config.level_weights)
    weights = np.asarray([config.level_weights[level] for level in levels], dtype=np.float64)
    probabilities = weights / weights.sum()
    stitched = bool(rng.random() < config.stitch_fraction)
    sub_renders = 2 if stitched else 1
    plan_levels = [int(levels[rng.choice(len(levels), p=probabilities)]) for _ in range(sub_renders)]
    plan_fonts = [config.fonts[int(rng.integers(0, len(config.fonts)))] for _ in range(sub_renders)]
    return PairPlan(index, seed, plan_levels, plan_fonts, stitched)


def generate_pair(text: str, plan: PairPlan, config: DatasetConfigModel,
                  levels: Dict[int, NoiseLevel], render_template: Optional[RenderSpec] = None) -> PagePair:
    if plan.stitched:
        lines = text.split("\n")
        middle = max(1, (len(lines) + 1) // 2)
        sub_texts = ["\n".join(lines[:middle]), "\n".join(lines[middle:]) or lines[-1]]
    else:
        sub_texts = [text]

    cleans = []
    degradeds = []
    op_orders = []
    binarized = []
    for sub_index, (sub_text, level, font) in enumerate(zip(sub_texts, plan.levels, plan.fonts)):
        spec = _render_spec(sub_text, font, config, render_template)
        rendered = renderer.render_base(spec, seeds.mix(plan.seed, 2 * sub_index))
        degradation = degrader.degrade(rendered.image, levels[level], seeds.mix(plan.seed, 2 * sub_index + 1))
        cleans.append(rendered.image)
        degradeds.append(degradation.image)
        op_orders.append(degradation.op_order)
        binarized.append(degradation.binarized)

    if plan.stitched:
        clean = stitching.stitch_pages(cleans)
        degraded = stitching.stitch_pages(degradeds)
    else:
        clean, degraded = cleans[0], degradeds[0]
    return PagePair(
        clean=clean,
        degraded=degraded,
        text="\n".join(sub_texts),
        level=max(plan.levels),
        seed=plan.seed,
        op_order=op_orders,
        sub_levels=list(plan.levels),
        fonts=list(plan.fonts),
        stitched=plan.stitched,
        binarized=binarized,
    )


def generate_dataset(corpus: str, config: DatasetConfigModel, out_dir: str,
                     render_template: Optional[RenderSpec] = None) -> List[DatasetRecord]:
    """
    Writes `config.count` clean/degraded pairs plus `manifest.jsonl` under `out_dir`.

    Pairs are generated on the worker pool; each pair's randomness derives from the master seed and its
    index only, so the output bytes do not depend on the number of workers.
    """
    if not corpus.strip():
        raise EmptyCorpusError("Corpus is empty")
    if not config.fonts:
        raise ConfigError("At least one font is required")
    if not config.level_weights or min(config.level_weights.values()) < 0 or \
            sum(config.level_weights.values()) <= 0:
        raise ConfigError("Level weights must be non-negative with a positive sum: {}".format(config.level_weights))

    levels = noise_levels.load_noise_levels(config.noise_levels_path)
    unknown = [level for level in config.level_weights if level not in levels]
    if unknown:
        raise ConfigError("No noise level definition for {}".format(unknown))

    page_texts = split_corpus(corpus, config.lines_per_page, config.wrap_width)
    if len(page_texts) < config.count:
        raise CorpusExhaustedError(
            "Corpus yields {} pages, {} requested".format(len(page_texts), config.count),
            needed=config.count,
            available=len(page_texts),
        )
    try:
        for directory in (constants.CLEAN_DIR, constants.DEGRADED_DIR):
            os.makedirs(os.path.join(out_dir, directory), exist_ok=True)
    except OSError as e:
        raise ConfigError("Output directory {} is not writable: {}".format(out_dir, e))

    def generate_one(index: int) -> DatasetRecord:
        started_at = time.time()
        plan = plan_pair(index, config)
        pair = generate_pair(page_texts[index], plan, config, levels, render_template)
        name = constants.IMAGE_NAME_FORMAT.format(index)
        clean_path = os.path.join(constants.CLEAN_DIR, name)
        degraded_path = os.path.join(constants.DEGRADED_DIR, name)
        image_io.save_png(pair.clean, os.path.join(out_dir, clean_path))
        image_io.save_png(pair.degraded, os.path.join(out_dir, degraded_path))
        synthesis_statistics.add_stage_result(SYNTHESIS_STAGE, started_at)
        logger.debug("Pair {} written (level {}, stitched {})", index, pair.level, pair.stitched)
        return DatasetRecord(
            index=index,
            clean=clean_path,
            degraded=degraded_path,
            text=pair.text,
            level=pair.level,
            seed=pair.seed,
            op_order=pair.op_order,
            sub_levels=pair.sub_levels,
            fonts=pair.fonts,
            stitched=pair.stitched,
            binarized=pair.binarized,
        )

    records = task_pool_proxy.map_tasks(generate_one, range(config.count))
    json_utils.write_jsonl(os.path.join(out_dir, constants.DATASET_MANIFEST_FILE), records)
    synthesis_statistics.flush_info()
    logger.info("Generated {} pairs ({} stitched) in {}", len(records), sum(r.stitched for r in records), out_dir)
    return records


def _render_spec(text: str, font: str, config: DatasetConfigModel, template: Optional[RenderSpec]) -> RenderSpec:
    if template is None:
        return RenderSpec(text=text, font=font, font_size=config.font_size, wrap_width=config.wrap_width)
    return RenderSpec(**{**template.__dict__, "text": text, "font": font})
