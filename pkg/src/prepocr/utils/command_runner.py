import shlex
import subprocess
from typing import Dict, Optional

from preputils import logging

logger = logging.get_logger(__name__)


class CommandFailure(Exception):
    def __init__(self, msg: str, returncode: Optional[int] = None):
        super(CommandFailure, self).__init__(msg)

        self.returncode = returncode


def run_template(template: str, placeholders: Dict[str, str], timeout_s: int) -> None:
    """
    Runs an external command template such as `restore.sh {input_dir} {output_dir}`.

    The template is split like a shell command line first and the placeholders are substituted per
    argument, so paths containing spaces stay single arguments. Exit status 0 is required.
    """
    try:
        args = [token.format(**placeholders) for token in shlex.split(template)]
    except (KeyError, IndexError, ValueError) as e:
        raise CommandFailure("Invalid command template {!r}: {}".format(template, e))
    if not args:
        raise CommandFailure("Empty command template")

    logger.debug("Running {}", args)
    try:
        completed = subprocess.run(args, stdout=subprocess.PIPE, stderr=subprocess.PIPE, timeout=timeout_s)
    except subprocess.TimeoutExpired:
        raise CommandFailure("{} timed out after {}s".format(args[0], timeout_s))
    except OSError as e:
        raise CommandFailure("{} could not be started: {}".format(args[0], e))
    if completed.returncode != 0:
        stderr = completed.stderr.decode("utf-8", errors="replace").strip()
        raise CommandFailure(
            "{} exited with status {}{}".format(args[0], completed.returncode, ": " + stderr[-500:] if stderr else ""),
            completed.returncode,
        )
