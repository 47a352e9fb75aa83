from dataclasses import dataclass

from prepocr import constants
from prepocr.exceptions import ConfigError


@dataclass
class BeamConfig:
    beam_width: int = constants.DEFAULT_BEAM_WIDTH
    channel_weight: float = 1.0
    lm_weight: float = 1.0
    # at most this many edits among any `edit_window` consecutive input positions
    max_edits_per_window: int = constants.DEFAULT_MAX_EDITS_PER_WINDOW
    edit_window: int = constants.DEFAULT_EDIT_WINDOW

    def validate(self) -> "BeamConfig":
        if self.beam_width < 1:
            raise ConfigError("beam_width must be at least 1, got {}".format(self.beam_width))
        if self.channel_weight < 0 or self.lm_weight < 0:
            raise ConfigError("Beam weights must be non-negative")
        if self.max_edits_per_window < 0 or self.edit_window < 1:
            raise ConfigError("Invalid edit window {} / {}".format(self.max_edits_per_window, self.edit_window))
        return self
