from prepocr.models.serializeable_enum import SerializeableEnum


class ScanDirection(SerializeableEnum):
    """
    Corner-to-corner patch enumeration order. The trailing alignment padding of a pass sits on the
    edges opposite the scan origin.
    """
    TL_BR = "tl-br"
    TR_BL = "tr-bl"
    BL_TR = "bl-tr"
    BR_TL = "br-tl"
