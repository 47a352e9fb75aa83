from prepocr.exceptions import ConfigError
from prepocr.models.restorer_kind import RestorerKind
from prepocr.restoration.restorers.abstract_restorer import AbstractRestorer
from prepocr.restoration.restorers.external_command_restorer import ExternalCommandRestorer
from prepocr.restoration.restorers.identity_restorer import IdentityRestorer
from prepocr.restoration.restorers.median_restorer import MedianRestorer
from prepocr.restoration.restorers.otsu_restorer import OtsuRestorer


def create_restorer(spec: str) -> AbstractRestorer:
    """
    Parses `identity | otsu | median3 | exec:<command template>`.
    """
    if spec is None:
        raise ConfigError("No restorer given")
    prefix = RestorerKind.EXTERNAL.value + ":"
    if spec.startswith(prefix):
        template = spec[len(prefix):].strip()
        if not template:
            raise ConfigError("exec restorer needs a command template")
        return ExternalCommandRestorer(template)

    kind = RestorerKind.from_string(spec)
    if kind == RestorerKind.IDENTITY:
        return IdentityRestorer()
    if kind == RestorerKind.OTSU:
        return OtsuRestorer()
    if kind == RestorerKind.MEDIAN3:
        return MedianRestorer()
    raise ConfigError("Restorer {!r} needs a command template: use exec:<template>".format(spec))
