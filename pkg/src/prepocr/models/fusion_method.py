from prepocr.models.serializeable_enum import SerializeableEnum


class FusionMethod(SerializeableEnum):
    MEDIAN = "median"
    MEAN = "mean"
