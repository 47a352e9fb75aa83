import os

from prepocr import constants
from prepocr.exceptions import OcrEngineError
from prepocr.models.ocr_engine_kind import OcrEngineKind
from prepocr.models.ocr_job import OcrJob
from prepocr.pipeline.engines.abstract_ocr_engine import AbstractOcrEngine
from prepocr.utils import command_runner, text_files
from prepocr.utils.command_runner import CommandFailure


class ExternalCommandOcrEngine(AbstractOcrEngine):
    """
    Runs an OCR program per page, e.g. `tesseract {image} {output_base}` or
    `my-ocr --in {image} --out {output}`. The program must exit with status 0 and leave a UTF-8
    text file at `{output}` (`{output_base}` is the same path without the `.txt` suffix).
    """
    command_template: str
    timeout_s: int

    def __init__(self, command_template: str, timeout_s: int = constants.EXTERNAL_OCR_TIMEOUT_S):
        super(ExternalCommandOcrEngine, self).__init__(OcrEngineKind.EXTERNAL)
        self.command_template = command_template
        self.timeout_s = timeout_s

    def describe(self) -> str:
        return "{}:{}".format(self.kind.value, self.command_template)

    def recognize(self, job: OcrJob) -> str:
        output_dir = os.path.dirname(os.path.abspath(job.output_path))
        os.makedirs(output_dir, exist_ok=True)
        if os.path.exists(job.output_path):
            os.remove(job.output_path)
        output_base, _extension = os.path.splitext(job.output_path)
        try:
            command_runner.run_template(
                self.command_template,
                {"image": job.image_path, "output": job.output_path, "output_base": output_base},
                self.timeout_s,
            )
        except CommandFailure as e:
            raise OcrEngineError("OCR command failed: {}".format(e), job.page_id)
        if not os.path.isfile(job.output_path):
            raise OcrEngineError("OCR command left no text at {}".format(job.output_path), job.page_id)
        try:
            return text_files.read_text(job.output_path)
        except (OSError, UnicodeDecodeError) as e:
            raise OcrEngineError("Unreadable OCR output {}: {}".format(job.output_path, e), job.page_id)
