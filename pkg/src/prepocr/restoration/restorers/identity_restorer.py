from typing import List

from prepocr.imaging.gray_image import GrayImage
from prepocr.models.restorer_kind import RestorerKind
from prepocr.restoration.restorers.abstract_restorer import AbstractRestorer


class IdentityRestorer(AbstractRestorer):

    def __init__(self):
        super(IdentityRestorer, self).__init__(RestorerKind.IDENTITY)

    def restore_batch(self, patches: List[GrayImage], first_index: int = 0) -> List[GrayImage]:
        return list(patches)
