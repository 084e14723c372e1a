"""
Exact scalars. Every coefficient in gsystems is an element of sympy's ``QQ_I``
domain (the Gaussian rationals). This module wraps construction, parsing and
formatting so the rest of the package never touches floats.
"""
from fractions import Fraction
from math import factorial, prod

from sympy import QQ, QQ_I

__all__ = (
    "GaussianRational",
    "ZERO",
    "ONE",
    "I",
    "gaussian",
    "to_scalar",
    "parse_rational",
    "format_rational",
    "scalar_to_json",
    "scalar_from_json",
    "inverse_factorial",
    "minus_i_power",
)

GaussianRational = type(QQ_I.one)

ZERO = QQ_I.zero
ONE = QQ_I.one
I = QQ_I(0, 1)
_MINUS_I = QQ_I(0, -1)


def parse_rational(text: str):
    """
    Parse ``"p"`` or ``"p/q"`` into an exact rational. Raises ValueError on a
    zero denominator or anything that is not a pair of integers.
    """
    num, sep, den = str(text).strip().partition("/")
    p = int(num)
    q = int(den) if sep else 1
    if q == 0:
        raise ValueError(f"zero denominator in rational {text!r}")
    return QQ(p, q)


def format_rational(value) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _rational(value):
    match value:
        case bool():
            raise TypeError("booleans are not scalars")
        case int():
            return QQ(value)
        case Fraction():
            return QQ(value.numerator, value.denominator)
        case str():
            return parse_rational(value)
        case _ if QQ.of_type(value):
            return value
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def gaussian(re=0, im=0) -> GaussianRational:
    """
    Build ``re + i*im`` from ints, Fractions, ``"p/q"`` strings or QQ elements.
    """
    return QQ_I(_rational(re), _rational(im))


def to_scalar(value) -> GaussianRational:
    """
    Coerce ``value`` to a Gaussian rational. Gaussian rationals pass through.
    """
    if isinstance(value, GaussianRational):
        return value
    return gaussian(value)


def scalar_to_json(value: GaussianRational) -> dict:
    return {"re": format_rational(value.x), "im": format_rational(value.y)}


def scalar_from_json(data) -> GaussianRational:
    if isinstance(data, dict):
        return gaussian(data.get("re", "0"), data.get("im", "0"))
    return gaussian(data)


def inverse_factorial(alpha) -> GaussianRational:
    """
    1/alpha! for a multi-index, with alpha! the product of componentwise factorials.
    """
    return QQ_I(QQ(1, prod(factorial(a) for a in alpha)), QQ(0))


def minus_i_power(k: int) -> GaussianRational:
    return _MINUS_I ** k
