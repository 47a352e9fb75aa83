"""
End-to-end runs comparing three pipelines per page:

    raw   OCR on the original image
    pre   restore, then OCR
    prep  restore, OCR, then post-correct

Pages are independent pool tasks writing under `<out>/pages/<page_id>/`. The manifest and the
reports are written once all pages are done.
"""
import os
import time
from dataclasses import dataclass
from typing import List, Optional, Tuple

from prepocr import constants
from prepocr.alignment import error_rates
from prepocr.correction import char_lm, noisy_channel_corrector
from prepocr.correction.char_lm import CharLM
from prepocr.correction.noisy_channel_corrector import ReverseChannel
from prepocr.exceptions import ConfigError, ImageDimensionError, PrepError
from prepocr.imaging import geometry, image_io
from prepocr.imaging.gray_image import GrayImage
from prepocr.metrics import amp
from prepocr.metrics.psnr_accumulator import PsnrAccumulator
from prepocr.models.beam_config import BeamConfig
from prepocr.models.config.pipeline_config_model import PipelineConfigModel
from prepocr.models.error_model import ErrorModel
from prepocr.models.ocr_job import OcrJob
from prepocr.models.page_input import PageInput
from prepocr.models.page_record import PageRecord
from prepocr.models.run_manifest import RunManifest
from prepocr.ocrnoise import error_model_io
from prepocr.pipeline import ocr_runner, pages as pages_reader, report
from prepocr.pipeline.engines import ocr_engine_factory
from prepocr.pipeline.engines.abstract_ocr_engine import AbstractOcrEngine
from prepocr.restoration import patch_restorer
from prepocr.restoration.restorers import restorer_factory
from prepocr.restoration.restorers.abstract_restorer import AbstractRestorer
from prepocr.utils import json_utils, text_files
from prepocr.utils.proxy import task_pool_proxy
from prepocr.utils.stats.pipeline_statistics_service import pipeline_statistics
from preputils import logging

logger = logging.get_logger(__name__)

RESTORED_IMAGE_FILE = "restored.png"
TEXT_FILE_FORMAT = "{}.txt"
AMP_RAW = "raw"
AMP_PRE = "pre"


@dataclass
class _Corrector:
    lm: CharLM
    channel: ErrorModel
    reverse: ReverseChannel
    beam: BeamConfig


@dataclass
class _Components:
    engine: AbstractOcrEngine
    restorer: AbstractRestorer
    corrector: Optional[_Corrector]


def validate_config(config: PipelineConfigModel) -> PipelineConfigModel:
    if config.version != constants.PIPELINE_CONFIG_VERSION:
        raise ConfigError("Unsupported pipeline config version {} (expected {})".format(
            config.version, constants.PIPELINE_CONFIG_VERSION
        ))
    config.fusion.validate()
    if config.outlier_threshold < 0:
        raise ConfigError("Outlier threshold must be non-negative, got {}".format(config.outlier_threshold))
    if config.alignment.anchor_n < 1:
        raise ConfigError("anchor_n must be at least 1, got {}".format(config.alignment.anchor_n))
    corrector = config.corrector
    if corrector.enabled and (not corrector.lm or not corrector.channel):
        raise ConfigError("The corrector needs both an LM (corrector.lm) and a channel model (corrector.channel)")
    return config


def _build_components(config: PipelineConfigModel) -> _Components:
    engine = ocr_engine_factory.create_engine(config.engine, config.seed)
    restorer = restorer_factory.create_restorer(config.restorer)
    corrector = None
    if config.corrector.enabled:
        lm = char_lm.load_char_lm(config.corrector.lm)
        channel = error_model_io.load_error_model(config.corrector.channel)
        beam = BeamConfig(
            beam_width=config.corrector.beam_width,
            channel_weight=config.corrector.channel_weight,
            lm_weight=config.corrector.lm_weight,
            max_edits_per_window=config.corrector.max_edits_per_window,
            edit_window=config.corrector.edit_window,
        ).validate()
        corrector = _Corrector(lm, channel, ReverseChannel(channel), beam)
    return _Components(engine, restorer, corrector)


def stages_of(config: PipelineConfigModel) -> List[str]:
    if config.corrector.enabled:
        return list(constants.PIPELINE_STAGES)
    return [constants.STAGE_RAW, constants.STAGE_PRE]


def run_pipeline(pages: List[PageInput], config: PipelineConfigModel,
                 output_dir: Optional[str] = None) -> RunManifest:
    """
    Runs every page through the configured stages and writes the run manifest and both reports.

    Failures of one page in one stage are recorded in that page's row and never stop the run.
    """
    validate_config(config)
    output_dir = output_dir or config.output_dir
    if not output_dir:
        raise ConfigError("No output directory given")
    if not pages:
        raise ConfigError("No pages to process")
    components = _build_components(config)
    stages = stages_of(config)
    try:
        os.makedirs(os.path.join(output_dir, constants.PAGES_DIR), exist_ok=True)
    except OSError as e:
        raise ConfigError("Output directory {} is not writable: {}".format(output_dir, e))

    logger.info("Running {} pages through {} with engine {}, restorer {}", len(pages), "/".join(stages),
                components.engine, components.restorer)
    results = task_pool_proxy.map_tasks(
        lambda page: _process_page(page, config, components, stages, output_dir), pages
    )

    raw_amp = PsnrAccumulator(config.fusion.patch_size, config.fusion.patch_size)
    pre_amp = PsnrAccumulator(config.fusion.patch_size, config.fusion.patch_size)
    amp_pairs = 0
    for _record, raw_partial, pre_partial in results:
        if raw_partial is not None and pre_partial is not None:
            raw_amp.merge(raw_partial)
            pre_amp.merge(pre_partial)
            amp_pairs += 1

    manifest = RunManifest(
        engine=components.engine.describe(),
        restorer=components.restorer.describe(),
        fusion="{}/{}/trim {}".format(config.fusion.mode, config.fusion.fusion, config.fusion.trim),
        corrector=constants.REFERENCE_CORRECTOR_LABEL if components.corrector else "",
        outlier_threshold=config.outlier_threshold,
        seed=config.seed,
        stages=stages,
        pages=[record for record, _raw, _pre in results],
        amp_pair_count=amp_pairs,
    )
    if amp_pairs:
        manifest.amp = {AMP_RAW: amp.amp_by_region(raw_amp), AMP_PRE: amp.amp_by_region(pre_amp)}

    json_utils.write_json(os.path.join(output_dir, constants.RUN_MANIFEST_FILE), manifest)
    report.write_reports(manifest, output_dir)
    pipeline_statistics.flush_info()
    partial = sum(record.is_partial() for record in manifest.pages)
    logger.info("Pipeline finished: {} pages, {} partial, outputs in {}", len(manifest.pages), partial, output_dir)
    return manifest


def _process_page(page: PageInput, config: PipelineConfigModel, components: _Components, stages: List[str],
                  output_dir: str) -> Tuple[PageRecord, Optional[PsnrAccumulator], Optional[PsnrAccumulator]]:
    page_rel_dir = os.path.join(constants.PAGES_DIR, page.page_id)
    page_dir = os.path.join(output_dir, page_rel_dir)
    os.makedirs(page_dir, exist_ok=True)
    record = PageRecord(
        page_id=page.page_id,
        image=page.image,
        gt_source="gt_text" if page.gt_text is not None else page.gt_path,
        book_level=page.gt_text is None and page.gt_path is not None,
        clean=page.clean,
    )

    gt = None
    try:
        gt = pages_reader.read_ground_truth(page)
    except ConfigError as e:
        record.errors["gt"] = str(e)

    def text_job(stage: str, image_path: str) -> OcrJob:
        return OcrJob(page.page_id, image_path, os.path.join(page_dir, TEXT_FILE_FORMAT.format(stage)), gt)

    def run_stage_ocr(stage: str, image_path: str) -> Optional[str]:
        result = ocr_runner.recognize_page(text_job(stage, image_path), components.engine, stage)
        if not result.succeeded():
            record.errors[stage] = result.error
            return None
        record.texts[stage] = os.path.join(page_rel_dir, TEXT_FILE_FORMAT.format(stage))
        return result.text

    texts = {constants.STAGE_RAW: run_stage_ocr(constants.STAGE_RAW, page.image)}

    original, restored = None, None
    started_at = time.time()
    try:
        original = image_io.load_gray(page.image)
        restored, _restoration = patch_restorer.restore_with_config(original, components.restorer, config.fusion)
        image_io.save_png(restored, os.path.join(page_dir, RESTORED_IMAGE_FILE))
        record.restored = os.path.join(page_rel_dir, RESTORED_IMAGE_FILE)
        pipeline_statistics.add_stage_result("restore", started_at)
    except (PrepError, OSError, ValueError) as e:
        logger.warning("Restoration failed on page {}: {}", page.page_id, e)
        pipeline_statistics.add_stage_result("restore", started_at, succeeded=False)
        record.errors[constants.STAGE_PRE] = "restoration: {}".format(e)

    if restored is not None:
        texts[constants.STAGE_PRE] = run_stage_ocr(constants.STAGE_PRE, os.path.join(page_dir, RESTORED_IMAGE_FILE))

    if constants.STAGE_PREP in stages:
        pre_text = texts.get(constants.STAGE_PRE)
        if pre_text is None:
            record.errors[constants.STAGE_PREP] = "no {} text to correct".format(constants.STAGE_PRE)
        else:
            texts[constants.STAGE_PREP] = _correct(pre_text, components.corrector)
            text_files.write_text(os.path.join(page_dir, TEXT_FILE_FORMAT.format(constants.STAGE_PREP)),
                                           texts[constants.STAGE_PREP])
            record.texts[constants.STAGE_PREP] = os.path.join(page_rel_dir,
                                                              TEXT_FILE_FORMAT.format(constants.STAGE_PREP))

    if gt is not None:
        for stage in stages:
            if texts.get(stage) is None:
                continue
            try:
                record.evals[stage] = error_rates.evaluate_page(page.page_id, gt, texts[stage], record.book_level,
                                                                config.alignment, config.outlier_threshold)
            except PrepError as e:
                record.errors[stage] = "evaluation: {}".format(e)

    raw_partial, pre_partial = _page_amp(page, original, restored, config.fusion.patch_size)
    return record, raw_partial, pre_partial


def _correct(text: str, corrector: _Corrector) -> str:
    lines = noisy_channel_corrector.correct_lines(text.split("\n"), corrector.lm, corrector.channel, corrector.beam,
                                                  corrector.reverse)
    return "\n".join(lines)


def _page_amp(page: PageInput, original: Optional[GrayImage], restored: Optional[GrayImage],
              patch_size: int) -> Tuple[Optional[PsnrAccumulator], Optional[PsnrAccumulator]]:
    """
    AMP partials of the unrestored (identity) and restored image against the clean reference.
    """
    if page.clean is None or original is None or restored is None:
        return None, None
    try:
        clean = image_io.load_gray(page.clean)
        raw_partial, _count = amp.evaluate_pairs([(clean, original)], patch_size=patch_size)
        if not clean.same_size(restored):
            clean = geometry.resize_to_width(clean, restored.width)
        pre_partial, _count = amp.evaluate_pairs([(clean, restored)], patch_size=patch_size)
    except (ImageDimensionError, OSError, ValueError) as e:
        logger.warning("Page {} left out of AMP: {}", page.page_id, e)
        return None, None
    return raw_partial, pre_partial
