from preputils.logging.log_format import LogFormat
from preputils.logging.log_level import LogLevel

DEFAULT_LOG_LEVEL = LogLevel.INFO
DEFAULT_LOG_FORMAT = LogFormat.PLAIN

# Python logging attributes used below:
#   %(asctime)s     creation time of the record
#   %(process)d     process id
#   %(threadName)s  worker thread name (pool workers are named "prepocr-worker_N")
#   %(name)s        logger name
#   %(levelname)s   level name, including the custom STATS and TRACE levels
#   %(message)s     the record message after "{}" formatting
DEBUG_LOG_FORMAT_PATTERN = "%(asctime)s - %(process)d - %(threadName)s - %(name)s - %(levelname)s - %(message)s"
INFO_LOG_FORMAT_PATTERN = "%(asctime)s - %(levelname)s - %(message)s"
