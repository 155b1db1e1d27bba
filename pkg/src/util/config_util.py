################################################################################
#
# Dataclass configuration objects which cast the values they receive from yaml
# files, hydra overrides or the command line to the annotated field types.
#
# Author(s): Anonymous
################################################################################

import dataclasses
import typing

from collections.abc import Mapping
from enum import Enum
from typing import Any, Union

################################################################################
# base configuration which casts every field to its type hint

_TRUE = frozenset({"true", "yes", "on", "1"})
_FALSE = frozenset({"false", "no", "off", "0"})


@dataclasses.dataclass()
class CastingConfig:
    def __post_init__(self):
        post_init_type_cast(self)


def post_init_type_cast(config):
    if not dataclasses.is_dataclass(config):
        raise TypeError(f"can only cast the fields of a dataclass, got {config!r}")

    hints = typing.get_type_hints(type(config))

    for field in dataclasses.fields(config):
        value = getattr(config, field.name)
        hint = hints.get(field.name, field.type)

        try:
            setattr(config, field.name, cast_value(value, hint))
        except (TypeError, ValueError, KeyError) as e:
            raise ValueError(
                f"{type(config).__name__}.{field.name}: "
                f"cannot cast {value!r} to {hint}"
            ) from e


################################################################################
# casting single values


def cast_value(value: Any, hint: Any) -> Any:
    if value is None or hint is Any:
        return value

    origin = typing.get_origin(hint)
    args = typing.get_args(hint)

    # Optional[t]
    if origin is Union:
        options = [a for a in args if a is not type(None)]
        return cast_value(value, options[0]) if len(options) == 1 else value

    # List[t]
    if origin is list:
        if isinstance(value, (str, bytes)):
            raise TypeError(f"expected a list, got the string {value!r}")

        item = args[0] if args else Any
        return [cast_value(v, item) for v in value]

    # other generics are kept as given
    if origin is not None:
        return value

    if isinstance(value, hint):
        return value

    if dataclasses.is_dataclass(hint) and isinstance(value, Mapping):
        # a nested configuration written as a mapping
        nested = hint(**value)

        if not isinstance(nested, CastingConfig):
            post_init_type_cast(nested)

        return nested

    if issubclass(hint, Enum):
        return _enum(hint, value)

    if hint is bool:
        return _boolean(value)

    return hint(value)


def _enum(hint, value):
    # by value first, then by member name
    try:
        return hint(value)
    except ValueError:
        return hint[value]


def _boolean(value) -> bool:
    if isinstance(value, str):
        word = value.strip().lower()

        if word in _TRUE:
            return True
        if word in _FALSE:
            return False

    elif isinstance(value, (int, float)) and value in (0, 1):
        return bool(value)

    raise ValueError(f"not a boolean: {value!r}")
