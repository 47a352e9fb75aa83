from dataclasses import dataclass


@dataclass
class RateScale:
    # multiplier applied to every candidate probability before clipping
    rate_lambda: float
    target_cer: float
    measured_cer: float = 0.0
    # the target was out of reach below the lambda ceiling
    saturated: bool = False
    iterations: int = 0
