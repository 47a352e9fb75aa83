from prepocr.models.serializeable_enum import SerializeableEnum


class OcrEngineKind(SerializeableEnum):
    MOCK = "mock"
    EXTERNAL = "exec"
