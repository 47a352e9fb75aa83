import multiprocessing

from prepocr import constants
from prepocr.exceptions import ConfigError
from prepocr.models.config.pipeline_config_model import PipelineConfigModel
from prepocr.utils import model_loader
from preputils.encoding import json_encoder


def get_thread_pool_parallelism_degree(parallelism_degree_str: str) -> int:
    parallelism_degree = int(parallelism_degree_str)
    if parallelism_degree <= 0:
        parallelism_degree = 1
    return min(
        parallelism_degree,
        max(multiprocessing.cpu_count(), 1)
    )


def load_pipeline_config(config_path: str) -> PipelineConfigModel:
    """
    Reads a versioned pipeline config file.
    :param config_path: path to the JSON config
    :return: parsed config model
    """
    try:
        raw_config = json_encoder.load_json_from_file(config_path)
    except ValueError as e:
        raise ConfigError("Unable to read pipeline config at {}: {}".format(config_path, e))
    if not isinstance(raw_config, dict):
        raise ConfigError("Pipeline config at {} must be a JSON object".format(config_path))

    version = raw_config.get("version")
    if version != constants.PIPELINE_CONFIG_VERSION:
        raise ConfigError(
            "Unsupported pipeline config version {} (expected {})".format(version, constants.PIPELINE_CONFIG_VERSION)
        )
    return model_loader.load_model(PipelineConfigModel, raw_config)
