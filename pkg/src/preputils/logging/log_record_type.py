from enum import Enum


class LogRecordType(Enum):
    """
    Logger names of the structured statistics streams; all share the `stats` prefix so one override
    (`--log-level-overrides stats=WARNING`) silences them together.
    """
    Stats = "stats"
    PipelineStats = "stats.pipeline"
    RestorationStats = "stats.restoration"
    SynthesisStats = "stats.synthesis"
