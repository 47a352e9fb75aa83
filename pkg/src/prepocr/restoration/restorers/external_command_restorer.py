import os
import tempfile
from typing import List

from prepocr import constants
from prepocr.exceptions import RestorerError
from prepocr.imaging import image_io
from prepocr.imaging.gray_image import GrayImage
from prepocr.models.restorer_kind import RestorerKind
from prepocr.restoration.restorers.abstract_restorer import AbstractRestorer
from prepocr.utils import command_runner
from prepocr.utils.command_runner import CommandFailure
from preputils import logging

logger = logging.get_logger(__name__)


class ExternalCommandRestorer(AbstractRestorer):
    """
    Delegates a batch of patches to an external program, one invocation per batch.

    Patches are written as PNG files into a temporary input directory together with an index file
    listing one file name per line; the program must write a restored PNG of the same name and size
    into the output directory for every entry and exit with status 0. Template placeholders:
    `{input_dir}`, `{output_dir}`, `{index_file}`.
    """
    command_template: str
    timeout_s: int

    def __init__(self, command_template: str, deterministic: bool = False,
                 timeout_s: int = constants.EXTERNAL_RESTORER_TIMEOUT_S):
        super(ExternalCommandRestorer, self).__init__(RestorerKind.EXTERNAL, deterministic)
        self.command_template = command_template
        self.timeout_s = timeout_s

    def describe(self) -> str:
        return "{}:{}".format(self.kind.value, self.command_template)

    def restore_batch(self, patches: List[GrayImage], first_index: int = 0) -> List[GrayImage]:
        with tempfile.TemporaryDirectory(prefix="prepocr-restore-") as work_dir:
            input_dir = os.path.join(work_dir, "input")
            output_dir = os.path.join(work_dir, "output")
            os.makedirs(input_dir)
            os.makedirs(output_dir)
            names = [constants.IMAGE_NAME_FORMAT.format(first_index + offset) for offset in range(len(patches))]
            for name, patch in zip(names, patches):
                image_io.save_png(patch, os.path.join(input_dir, name))
            index_file = os.path.join(work_dir, constants.EXTERNAL_RESTORER_INDEX_FILE)
            with open(index_file, "w", encoding=constants.DEFAULT_TEXT_ENCODING) as index:
                index.write("".join(name + "\n" for name in names))

            try:
                command_runner.run_template(
                    self.command_template,
                    {"input_dir": input_dir, "output_dir": output_dir, "index_file": index_file},
                    self.timeout_s,
                )
            except CommandFailure as e:
                raise RestorerError("restorer command failed for batch of {}: {}".format(len(patches), e),
                                    patch_index=first_index)

            return [
                self._read_output(os.path.join(output_dir, name), patch, first_index + offset)
                for offset, (name, patch) in enumerate(zip(names, patches))
            ]

    def _read_output(self, path: str, source: GrayImage, patch_index: int) -> GrayImage:
        if not os.path.isfile(path):
            raise RestorerError("restorer produced no output {}".format(os.path.basename(path)), patch_index)
        try:
            restored = image_io.load_gray(path)
        except (OSError, ValueError, SyntaxError) as e:
            raise RestorerError("malformed restorer output {}: {}".format(os.path.basename(path), e), patch_index)
        if not restored.same_size(source):
            raise RestorerError(
                "restorer returned {}x{} instead of {}x{}".format(
                    restored.width, restored.height, source.width, source.height
                ),
                patch_index,
            )
        return restored
