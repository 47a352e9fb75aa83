from prepocr.models.serializeable_enum import SerializeableEnum


class RestorerKind(SerializeableEnum):
    IDENTITY = "identity"
    OTSU = "otsu"
    MEDIAN3 = "median3"
    EXTERNAL = "exec"
