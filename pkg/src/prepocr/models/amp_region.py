from prepocr import constants
from prepocr.models.serializeable_enum import SerializeableEnum


class AmpRegion(SerializeableEnum):
    FULL = "full"
    CENTRAL_192 = "central-192"
    CENTRAL_128 = "central-128"

    @classmethod
    def from_string(cls, value: str) -> "AmpRegion":
        # the CLI spells central regions by their side length
        if value in ("192", "128"):
            value = "central-{}".format(value)
        return super(AmpRegion, cls).from_string(value)

    def margin(self) -> int:
        return constants.AMP_REGION_MARGINS[self.value]
