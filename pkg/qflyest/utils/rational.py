import math
from fractions import Fraction
from typing import Annotated, Any

from pydantic import PlainSerializer, PlainValidator


def parse_rational(value: Any) -> Fraction:
    """
    Convert config and JSON inputs into an exact Fraction.

    Floats go through their shortest decimal repr so that 9.19 becomes 919/100
    instead of the binary approximation.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError("boolean is not a rational number")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"non-finite value {value!r} is not a rational number")
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"cannot parse {value!r} as a rational: {e}") from e
    raise ValueError(f"unsupported rational input of type {type(value).__name__}")


def format_rational(value: Fraction) -> str:
    """Canonical "p/q" text, or "p" for integers."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


Rational = Annotated[Fraction, PlainValidator(parse_rational), PlainSerializer(format_rational, return_type=str)]
