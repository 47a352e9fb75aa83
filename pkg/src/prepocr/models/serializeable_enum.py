from enum import Enum

from prepocr.exceptions import ConfigError


class SerializeableEnum(Enum):
    """
    Enum serialized by value, both in JSON documents and on the command line.
    """

    def __str__(self):
        return self.value

    @classmethod
    def from_string(cls, value: str) -> "SerializeableEnum":
        if isinstance(value, cls):
            return value
        for member in cls:
            if member.value == value or member.name.lower() == str(value).lower():
                return member
        raise ConfigError("Unknown {} {!r}; expected one of {}".format(
            cls.__name__, value, ", ".join(member.value for member in cls)
        ))
