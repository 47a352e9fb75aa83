import os
from abc import ABCMeta, abstractmethod

from prepocr.models.ocr_engine_kind import OcrEngineKind
from prepocr.models.ocr_job import OcrJob


class AbstractOcrEngine(metaclass=ABCMeta):
    """
    Reads one page image into text. The text is also left at the job's output path. Engines are
    called from several pool workers at once.
    """
    kind: OcrEngineKind

    def __init__(self, kind: OcrEngineKind):
        self.kind = kind

    @abstractmethod
    def recognize(self, job: OcrJob) -> str:
        """
        :raises OcrEngineError: when the page cannot be read
        """
        pass

    def describe(self) -> str:
        return self.kind.value

    def __repr__(self):
        return "{}<{}>".format(self.__class__.__name__, self.describe())
