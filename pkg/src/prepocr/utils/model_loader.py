"""
Loads dataclass models (configs, manifests, reports) from parsed JSON.
"""

# pyre-ignore-all-errors
# This file does type manipulation that type checkers will not understand.

import dataclasses
import json
import typing
from enum import Enum, Flag
from typing import Any, Dict, List, Optional, Tuple, Type, TypeVar, Union

from preputils import logging

logger = logging.get_logger(__name__)
T = TypeVar("T")
_TYPE_HANDLER_MAPPING = {}


def load_model_from_json(model_class: Type[T], model_params: str) -> T:
    return load_model(model_class, json.loads(model_params))


def load_model(model_class: Type[T], model_params: Dict[str, Any]) -> T:
    """
    Ensures models are forward compatible - keys the current version does not know about are dropped with a
    debug log, missing keys fall back to the dataclass defaults.

    :param model_class: dataclass to load into
    :param model_params: attributes from the parsed JSON document
    :return: instance of model class
    """
    if not dataclasses.is_dataclass(model_class):
        raise TypeError("{} is not a dataclass model".format(model_class))
    if not isinstance(model_params, dict):
        raise TypeError("Cannot load {} from {}".format(model_class.__name__, type(model_params).__name__))

    type_hints = typing.get_type_hints(model_class)
    known_fields = {field.name for field in dataclasses.fields(model_class) if field.init}
    attributes = {}
    for attribute_name, attribute_value in model_params.items():
        if attribute_name not in known_fields:
            logger.debug("Ignoring unknown attribute {} for {}", attribute_name, model_class.__name__)
            continue
        attributes[attribute_name] = _load_attribute(type_hints[attribute_name], attribute_value)
    return model_class(**attributes)


def _load_attribute(attribute_type: Type[T], attribute_value: Any, cast_basic_values: bool = True) -> Optional[T]:
    """
    Loads an attribute and attempts to cast it to the correct class type.
    For data classes, recurse and load the nested model.
    For Any types, None values, or TypeVars, return the provided value as is.
    For built in `typing` generics, dispatch to the handlers below.
    For basic types, construct the objects normally.

    :param attribute_type: class of the attribute to load
    :param attribute_value: attribute value to parse
    :param cast_basic_values: if to cast between str, int, etc.
    :return: instance of attribute value
    """
    origin = typing.get_origin(attribute_type)
    if dataclasses.is_dataclass(attribute_type) and attribute_value is not None:
        if dataclasses.is_dataclass(attribute_value):
            return attribute_value
        return load_model(attribute_type, attribute_value)
    elif attribute_type == Any or attribute_value is None or attribute_type.__class__ == TypeVar:
        return attribute_value
    elif origin is not None:
        if origin in _TYPE_HANDLER_MAPPING:
            return _TYPE_HANDLER_MAPPING[origin](attribute_type, attribute_value)
        else:
            raise NotImplementedError("Model loader is not capable of loading a {} type. Please implement a handler."
                                      .format(origin))
    elif isinstance(attribute_type, type) and issubclass(attribute_type, Flag):
        return attribute_type[attribute_value]
    elif isinstance(attribute_type, type) and issubclass(attribute_type, Enum):
        if isinstance(attribute_value, attribute_type):
            return attribute_value
        return attribute_type(attribute_value)
    else:
        if attribute_type is float and isinstance(attribute_value, int) and not isinstance(attribute_value, bool):
            return float(attribute_value)
        if cast_basic_values:
            return attribute_type(attribute_value)
        elif not isinstance(attribute_value, attribute_type):
            raise TypeError("{} is not of type {}.".format(attribute_value, attribute_type))
        else:
            return attribute_value


def _load_list(list_type: Type[T], list_value: Any) -> List:
    if isinstance(list_value, dict):
        raise ValueError("Forcibly raising when trying to cast Dict to List.")

    list_args = typing.get_args(list_type)
    if len(list_args) != 1:
        raise ValueError("List type annotation requires 1 or 0 args.")
    return [_load_attribute(list_args[0], list_entry) for list_entry in list_value]


def _load_tuple(tuple_type: Type[T], tuple_value: Any) -> Tuple:
    tuple_args = typing.get_args(tuple_type)
    if len(tuple_args) == 2 and tuple_args[1] is Ellipsis:
        return tuple(_load_attribute(tuple_args[0], entry) for entry in tuple_value)
    if len(tuple_args) != len(tuple_value):
        raise ValueError("Expected {} values for {}, got {}".format(len(tuple_args), tuple_type, tuple_value))
    return tuple(_load_attribute(entry_type, entry) for entry_type, entry in zip(tuple_args, tuple_value))


def _load_dict(dict_type: Type[T], dict_value: Any) -> Dict:
    if not isinstance(dict_value, dict):
        raise TypeError("Cannot deserialize value {} to Dict type {}".format(dict_value, dict_type))

    dict_args = typing.get_args(dict_type)
    if len(dict_args) != 2:
        raise ValueError("Dict type annotation requires 2 or 0 args.")

    key_type, value_type = dict_args
    return {_load_attribute(key_type, key): _load_attribute(value_type, value) for key, value in dict_value.items()}


def _load_union(union_type: Type[T], union_value: Any) -> Any:
    union_args = typing.get_args(union_type)
    if len(union_args) == 2 and type(None) in union_args:
        # special case of an optional
        inner_type = union_args[0] if union_args[1] is type(None) else union_args[1]
        return _load_attribute(inner_type, union_value)
    else:
        for union_param in union_args:
            # noinspection PyBroadException
            try:
                return _load_attribute(union_param, union_value, cast_basic_values=False)
            except Exception as _e:
                continue
        raise NotImplementedError("Could not find a union type that matched value. Types: {}, Value: {}"
                                  .format(union_args, union_value))


# noinspection PyRedeclaration
_TYPE_HANDLER_MAPPING = {
    list: _load_list,
    tuple: _load_tuple,
    dict: _load_dict,
    Union: _load_union,
}
