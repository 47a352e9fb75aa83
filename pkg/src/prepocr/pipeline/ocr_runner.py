import time
from typing import List

from prepocr.exceptions import OcrEngineError
from prepocr.models.ocr_job import OcrJob
from prepocr.models.ocr_result import OcrResult
from prepocr.pipeline.engines.abstract_ocr_engine import AbstractOcrEngine
from prepocr.utils.proxy import task_pool_proxy
from prepocr.utils.stats.pipeline_statistics_service import pipeline_statistics
from preputils import logging

logger = logging.get_logger(__name__)


def recognize_page(job: OcrJob, engine: AbstractOcrEngine, stage: str = "ocr") -> OcrResult:
    """
    Runs the engine on one page. An engine failure flags the page instead of raising.
    """
    started_at = time.time()
    try:
        text = engine.recognize(job)
    except OcrEngineError as e:
        logger.warning("OCR failed on page {} ({}): {}", job.page_id, stage, e)
        pipeline_statistics.add_stage_result(stage, started_at, succeeded=False)
        return OcrResult(job.page_id, error=str(e))
    pipeline_statistics.add_stage_result(stage, started_at)
    return OcrResult(job.page_id, text=text)


def run_ocr(jobs: List[OcrJob], engine: AbstractOcrEngine) -> List[OcrResult]:
    """
    One result per job, in job order; failed pages carry an error and the run goes on.
    """
    results = task_pool_proxy.map_tasks(lambda job: recognize_page(job, engine), jobs)
    failed = sum(not result.succeeded() for result in results)
    if failed:
        logger.warning("{} of {} pages failed OCR with {}", failed, len(results), engine)
    else:
        logger.info("Recognized {} pages with {}", len(results), engine)
    return results
