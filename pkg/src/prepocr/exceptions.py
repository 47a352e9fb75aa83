#
# Exceptions
#
from typing import Optional


class PrepError(Exception):
    def __init__(self, msg):
        super(PrepError, self).__init__(msg)

        self.msg = msg


class ImageDimensionError(PrepError):
    pass


class FontLoadError(PrepError):
    pass


class RenderError(PrepError):
    pass


class EmptyCorpusError(PrepError):
    pass


class CorpusExhaustedError(PrepError):
    def __init__(self, msg, needed: int, available: int):
        super(CorpusExhaustedError, self).__init__(msg)

        self.needed = needed
        self.available = available


class ConfigError(PrepError):
    pass


class RestorerError(PrepError):
    def __init__(self, msg, patch_index: Optional[int] = None):
        if patch_index is not None:
            msg = "patch {}: {}".format(patch_index, msg)
        super(RestorerError, self).__init__(msg)

        self.patch_index = patch_index


class UndefinedRateError(PrepError):
    pass


class RegionEmptyError(PrepError):
    pass


class OcrEngineError(PrepError):
    def __init__(self, msg, page_id: Optional[str] = None):
        super(OcrEngineError, self).__init__(msg)

        self.page_id = page_id


class ModelFormatError(PrepError):
    pass
