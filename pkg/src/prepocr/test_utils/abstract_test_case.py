import shutil
import tempfile
import unittest

from prepocr.utils.proxy import task_pool_proxy
from preputils.logging import log_config
from preputils.logging.log_level import LogLevel


class AbstractTestCase(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        log_config.create_logger(None)
        log_config.set_level(["prepocr", "preputils"], LogLevel.DEBUG)
        log_config.set_level(["stats"], LogLevel.WARNING)

    def tearDown(self) -> None:
        task_pool_proxy.shutdown()

    def make_temp_dir(self) -> str:
        temp_dir = tempfile.mkdtemp(prefix="prepocr-test-")
        self.addCleanup(shutil.rmtree, temp_dir, True)
        return temp_dir

    @classmethod
    def make_class_temp_dir(cls) -> str:
        temp_dir = tempfile.mkdtemp(prefix="prepocr-test-")
        cls.addClassCleanup(shutil.rmtree, temp_dir, True)
        return temp_dir
