from dataclasses import dataclass, field
from typing import Optional

from prepocr import constants
from prepocr.models.config.abstract_config_model import AbstractConfigModel
from prepocr.models.config.alignment_config_model import AlignmentConfigModel
from prepocr.models.config.corrector_config_model import CorrectorConfigModel
from prepocr.models.config.engine_config_model import EngineConfigModel
from prepocr.models.config.fusion_config_model import FusionConfigModel
from prepocr.models.config.log_config_model import LogConfigModel


@dataclass
class PipelineConfigModel(AbstractConfigModel):
    """
    Versioned run configuration of the `pipeline` verb. See README.md for the documented schema.
    """
    version: int = constants.PIPELINE_CONFIG_VERSION
    engine: EngineConfigModel = field(default_factory=EngineConfigModel)
    restorer: str = "identity"
    fusion: FusionConfigModel = field(default_factory=FusionConfigModel)
    corrector: CorrectorConfigModel = field(default_factory=CorrectorConfigModel)
    alignment: AlignmentConfigModel = field(default_factory=AlignmentConfigModel)
    outlier_threshold: float = constants.OUTLIER_CER_THRESHOLD
    seed: int = constants.DEFAULT_SEED
    workers: int = constants.DEFAULT_THREAD_POOL_PARALLELISM_DEGREE
    output_dir: Optional[str] = None
    log_config: LogConfigModel = field(default_factory=LogConfigModel)
