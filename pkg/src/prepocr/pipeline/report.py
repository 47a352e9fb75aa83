"""
Comparison reports of a pipeline run, computed from the run manifest alone.

Rates are printed as percentages in the form "mean (mean excluding outliers)", where an
outlier is a page whose CER is strictly above the run's threshold.
"""
import os
from typing import List, Optional

from prepocr import constants
from prepocr.alignment import error_rates
from prepocr.exceptions import ConfigError
from prepocr.models.amp_region import AmpRegion
from prepocr.models.pipeline_report import PipelineReport
from prepocr.models.run_manifest import RunManifest
from prepocr.models.ocr_engine_kind import OcrEngineKind
from prepocr.models.stage_summary import StageSummary
from prepocr.utils import json_utils, model_loader, text_files
from preputils import logging
from preputils.encoding import json_encoder

logger = logging.get_logger(__name__)

STAGE_LABELS = {
    constants.STAGE_RAW: "OCR on original images",
    constants.STAGE_PRE: "restore + OCR",
    constants.STAGE_PREP: "restore + OCR + " + constants.REFERENCE_CORRECTOR_LABEL,
}
NOT_AVAILABLE = "n/a"
TABLE_HEADER = ("stage", "CER %", "WER %", "pages", "outliers", "failed", "pipeline")
AMP_SETS = (("pre", "restored"), ("raw", "unrestored"))


def build_report(manifest: RunManifest) -> PipelineReport:
    stages = []
    for stage in manifest.stages:
        evaluated = [record.evals[stage] for record in manifest.pages if stage in record.evals]
        stages.append(StageSummary(
            stage=stage,
            label=STAGE_LABELS.get(stage, stage),
            ran_count=sum(stage in record.texts for record in manifest.pages),
            failed_pages=[record.page_id for record in manifest.pages if stage in record.errors],
            summary=error_rates.summarize(evaluated, manifest.outlier_threshold),
        ))

    notes = []
    if manifest.engine.startswith(OcrEngineKind.MOCK.value):
        notes.append(constants.MOCK_ENGINE_NOTE)
    if manifest.corrector:
        notes.append("prep uses the {}, a character n-gram noisy-channel decoder".format(manifest.corrector))

    return PipelineReport(
        page_count=len(manifest.pages),
        partial_pages=[record.page_id for record in manifest.pages if record.is_partial()],
        outlier_threshold=manifest.outlier_threshold,
        engine=manifest.engine,
        restorer=manifest.restorer,
        corrector=manifest.corrector,
        stages=stages,
        amp=manifest.amp,
        amp_pair_count=manifest.amp_pair_count,
        notes=notes,
    )


def _percent_pair(mean: Optional[float], kept_mean: Optional[float]) -> str:
    if mean is None:
        return NOT_AVAILABLE
    kept = "{:.2f}".format(100 * kept_mean) if kept_mean is not None else NOT_AVAILABLE
    return "{:.2f} ({})".format(100 * mean, kept)


def render_text(report: PipelineReport) -> str:
    lines = [
        "pipeline report",
        "engine: {}".format(report.engine),
        "restorer: {}".format(report.restorer),
        "pages: {} ({} partial)".format(report.page_count, len(report.partial_pages)),
        "outliers: pages with CER > {:.2f}; rates are mean (mean excluding outliers)".format(
            report.outlier_threshold
        ),
        "",
    ]
    rows: List[tuple] = [TABLE_HEADER]
    for stage in report.stages:
        summary = stage.summary
        rows.append((
            stage.stage,
            _percent_pair(summary.mean_cer, summary.kept_mean_cer),
            _percent_pair(summary.mean_wer, summary.kept_mean_wer),
            str(summary.page_count),
            str(summary.dropped_count),
            str(len(stage.failed_pages)),
            stage.label,
        ))
    widths = [max(len(row[column]) for row in rows) for column in range(len(TABLE_HEADER))]
    for row in rows:
        lines.append("  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip())

    if report.amp:
        lines.append("")
        lines.append("AMP over {} page pairs (dB):".format(report.amp_pair_count))
        for amp_set, description in AMP_SETS:
            values = report.amp.get(amp_set, {})
            lines.append("  {:<10} {}".format(description, "  ".join(
                "{} {}".format(region.value, "{:.2f}".format(values[region.value]) if region.value in values
                               else NOT_AVAILABLE)
                for region in AmpRegion
            )))

    if report.partial_pages:
        lines.append("")
        lines.append("partial pages: {}".format(", ".join(report.partial_pages)))
    if report.notes:
        lines.append("")
        lines.extend("note: {}".format(note) for note in report.notes)
    return "\n".join(lines) + "\n"


def write_reports(manifest: RunManifest, output_dir: str) -> PipelineReport:
    report = build_report(manifest)
    json_utils.write_json(os.path.join(output_dir, constants.REPORT_JSON_FILE), report)
    text_files.write_text(os.path.join(output_dir, constants.REPORT_TEXT_FILE), render_text(report))
    return report


def load_manifest(output_dir: str) -> RunManifest:
    path = os.path.join(output_dir, constants.RUN_MANIFEST_FILE)
    try:
        document = json_encoder.load_json_from_file(path)
        return model_loader.load_model(RunManifest, document)
    except (ValueError, TypeError, KeyError) as e:
        raise ConfigError("Cannot read run manifest {}: {}".format(path, e))


def missing_artifacts(manifest: RunManifest, output_dir: str) -> List[str]:
    referenced = []
    for record in manifest.pages:
        referenced.extend(record.texts.values())
        if record.restored:
            referenced.append(record.restored)
    return [path for path in referenced if not os.path.isfile(os.path.join(output_dir, path))]


def regenerate_reports(output_dir: str) -> PipelineReport:
    """
    Rewrites both reports of a finished run from its manifest; no stage is rerun.
    """
    manifest = load_manifest(output_dir)
    missing = missing_artifacts(manifest, output_dir)
    if missing:
        raise ConfigError("Run in {} references {} missing files, e.g. {}".format(output_dir, len(missing),
                                                                                missing[:5]))
    report = write_reports(manifest, output_dir)
    logger.info("Reports regenerated for {} pages in {}", report.page_count, output_dir)
    return report
