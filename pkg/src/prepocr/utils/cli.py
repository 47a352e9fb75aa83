import argparse
from typing import Callable, Dict, Optional

from prepocr.exceptions import ConfigError
from prepocr.utils import config
from preputils.logging import log_config, log_level
from preputils.logging.log_format import LogFormat
from preputils.logging.log_level import LogLevel

LOGGER_NAMES = ["prepocr", "preputils", "stats"]

Handler = Callable[[argparse.Namespace], None]


def str_to_log_format(value: str) -> LogFormat:
    try:
        return LogFormat[value.upper()]
    except KeyError:
        raise argparse.ArgumentTypeError("unknown log format {!r}".format(value))


def str_to_log_level(value: str) -> LogLevel:
    try:
        return log_level.from_string(value)
    except KeyError:
        raise argparse.ArgumentTypeError("unknown log level {!r}".format(value))


def add_common_arguments(arg_parser: argparse.ArgumentParser) -> None:
    """
    Flags every verb accepts. Defaults are `None` so that a config file may supply them.
    """
    arg_parser.add_argument(
        "--log-level",
        help="set log level (default: INFO)",
        type=str_to_log_level,
        choices=list(LogLevel),
        default=None
    )
    arg_parser.add_argument(
        "--log-format",
        help="set log format (default: PLAIN)",
        type=str_to_log_format,
        choices=list(LogFormat),
        default=None
    )
    arg_parser.add_argument(
        "--log-level-overrides",
        help="override log level for namespace stats=INFO,prepocr.alignment=DEBUG",
        default={},
        type=log_config.str_to_log_options
    )
    arg_parser.add_argument(
        "--workers",
        help="The degree of parallelism of the shared worker pool (default: 1). Results do not depend on it.",
        default=None,
        type=config.get_thread_pool_parallelism_degree
    )


def get_argument_parser(registrars: Dict[str, Callable[[argparse.ArgumentParser], Handler]]) -> argparse.ArgumentParser:
    """
    :param registrars: verb name -> function adding the verb's arguments and returning its handler
    """
    arg_parser = argparse.ArgumentParser(
        prog="prepocr",
        description="Document restoration, OCR evaluation and post-correction toolkit"
    )
    subparsers = arg_parser.add_subparsers(dest="verb", metavar="verb")
    subparsers.required = True
    for verb, registrar in registrars.items():
        verb_parser = subparsers.add_parser(verb)
        add_common_arguments(verb_parser)
        verb_parser.set_defaults(handler=registrar(verb_parser))
    return arg_parser


def require(value: Optional[object], flag: str) -> object:
    if value is None:
        raise ConfigError("{} is required".format(flag))
    return value
