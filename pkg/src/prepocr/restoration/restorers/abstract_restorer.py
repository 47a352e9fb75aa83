from abc import ABCMeta, abstractmethod
from typing import List

from prepocr.imaging.gray_image import GrayImage
from prepocr.models.restorer_kind import RestorerKind


class AbstractRestorer(metaclass=ABCMeta):
    """
    Maps patches to restored patches of the same size. Implementations must be safe to call from
    several worker threads at once.
    """
    kind: RestorerKind
    deterministic: bool = True

    def __init__(self, kind: RestorerKind, deterministic: bool = True):
        self.kind = kind
        self.deterministic = deterministic

    @abstractmethod
    def restore_batch(self, patches: List[GrayImage], first_index: int = 0) -> List[GrayImage]:
        """
        :param patches: patches to restore
        :param first_index: plan index of the first patch, used in error reports
        :return: one restored patch per input, in input order
        """
        pass

    def describe(self) -> str:
        return self.kind.value

    def __repr__(self):
        return "{}<{}>".format(self.__class__.__name__, self.describe())
