from prepocr.models.serializeable_enum import SerializeableEnum


class EditOpType(SerializeableEnum):
    MATCH = "match"
    SUBSTITUTE = "substitute"
    INSERT = "insert"
    DELETE = "delete"
