import dataclasses
from typing import Type, TypeVar

T = TypeVar("T", bound="AbstractConfigModel")


class AbstractConfigModel:
    """
    Base of the dataclass config models. A config file is loaded first and command line
    values are merged over it; `None` marks a value that was not given.
    """

    @classmethod
    def unset(cls: Type[T]) -> T:
        return cls(**{field.name: None for field in dataclasses.fields(cls) if field.init})  # pyre-ignore

    def merge(self: T, config: "AbstractConfigModel") -> T:
        for key, value in self.__dict__.items():
            updated_attr = getattr(config, key, None)
            if updated_attr is None:
                continue
            if isinstance(value, AbstractConfigModel) and isinstance(updated_attr, AbstractConfigModel):
                value.merge(updated_attr)
            elif isinstance(updated_attr, dict) and hasattr(value, "__dict__"):
                value.__dict__.update(updated_attr)
            else:
                self.__dict__[key] = updated_attr
        return self
