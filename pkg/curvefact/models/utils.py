import inspect
import warnings
from enum import Enum
from fractions import Fraction
from typing import Any

from pydantic import BaseModel, Field

from curvefact.exactalg import MPoly, PolyMatrix, TSeries

_PYDANTIC_FIELD_KWARGS = list(inspect.signature(Field).parameters.keys())

__all__ = ("StrictField", "CurvefactModel", "Rational", "plain")


def StrictField(
    *args,
    description: str = None,
    **kwargs,
) -> Field:
    """A wrapper around `pydantic.Field` that does the following:

    - Forbids any "extra" keys that would be passed to `pydantic.Field`.
    - Emits a warning when no description is provided.

    Arguments:
        *args: Positional arguments passed through to `Field`.
        description: The description of the `Field`; if this is not
            specified then a `UserWarning` will be emitted.
        **kwargs: Extra keyword arguments to be passed to `Field`.

    Raises:
        RuntimeError: If `**kwargs` contains a key not found in the
            function signature of `Field`.

    Returns:
        The pydantic `Field`.

    """
    _banned = [k for k in kwargs if k not in set(_PYDANTIC_FIELD_KWARGS)]

    if _banned:
        raise RuntimeError(
            f"Not creating StrictField({args}, {kwargs}) with forbidden keywords {_banned}."
        )

    if description is not None:
        kwargs["description"] = description
    else:
        warnings.warn(
            f"No description provided for StrictField specified by {args}, {kwargs}."
        )

    return Field(*args, **kwargs)


class Rational(Fraction):
    """Pydantic type for exact rationals, accepting integers, `Fraction`s and `"p/q"` strings."""

    @classmethod
    def __get_validators__(cls):
        yield cls.validate

    @classmethod
    def __modify_schema__(cls, field_schema):
        field_schema.update(type="string", pattern=r"^-?\d+(/\d+)?$")

    @classmethod
    def validate(cls, v) -> Fraction:
        if isinstance(v, bool) or isinstance(v, float):
            raise TypeError(f"Rationals must be exact, got {v!r}")
        try:
            return Fraction(v)
        except (TypeError, ValueError) as exc:
            raise TypeError(f"Not a rational number: {v!r}") from exc


class CurvefactModel(BaseModel):
    """Base model: immutable, with canonical JSON printing of exact types."""

    class Config:
        allow_mutation = False
        arbitrary_types_allowed = True
        json_encoders = {
            MPoly: str,
            TSeries: str,
            PolyMatrix: lambda m: m.tolist(),
            Fraction: str,
        }


def plain(obj: Any) -> Any:
    """Convert results to YAML/JSON-safe builtins with canonical strings for exact types.

    Sets are sorted; integral rationals become integers.

    """
    if isinstance(obj, BaseModel):
        return {k: plain(v) for k, v in obj._iter(to_dict=False)}
    if isinstance(obj, (MPoly, TSeries)):
        return str(obj)
    if isinstance(obj, PolyMatrix):
        return obj.tolist()
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, int)):
        return obj
    if isinstance(obj, Fraction):
        return obj.numerator if obj.denominator == 1 else str(obj)
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, dict):
        return {str(k): plain(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return [plain(v) for v in sorted(obj)]
    if isinstance(obj, (list, tuple)):
        return [plain(v) for v in obj]
    return str(obj)
