from typing import Dict, List

from prepocr.exceptions import ConfigError


def str_to_bool(value):
    return value in ["True", "true", "1", "yes"]


def str_to_resize_width(value: str) -> int:
    """
    Parses `--resize-width`: a pixel count or "off" (returned as 0).
    """
    if value is None or value.lower() in ("off", "none", "0", ""):
        return 0
    width = int(value)
    if width < 1:
        raise ConfigError("resize width must be positive, got {}".format(width))
    return width


def str_to_level_weights(value: str) -> Dict[int, float]:
    """
    Parses noise level weights such as "1=0.2,2=0.3,3=0.3,4=0.2" or "3".
    """
    weights = {}
    for pair in value.split(","):
        if "=" in pair:
            level, weight = pair.split("=", 1)
        else:
            level, weight = pair, "1"
        weights[int(level)] = float(weight)
    return weights


def str_to_float_list(value: str) -> List[float]:
    return [float(item) for item in value.split(",") if item.strip()]
