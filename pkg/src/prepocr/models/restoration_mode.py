from prepocr.models.serializeable_enum import SerializeableEnum


class RestorationMode(SerializeableEnum):
    SINGLE = "single"
    MULTI = "multi"
