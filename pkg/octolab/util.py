import dataclasses
import enum
from fractions import Fraction

import numpy as np

from .octonion import BiOctonion, ComplexRational, Octonion


def format_fraction(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f'{x.numerator}/{x.denominator}'


def jsonable(value):
    """Turn witness data into plain JSON values.

    Fractions become "p/q" strings and octonions their literal form, so the
    output stays exact and byte-stable.
    """
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return format_fraction(value)
    if isinstance(value, (Octonion, BiOctonion, ComplexRational)):
        return str(value)
    if isinstance(value, np.ndarray):
        return jsonable(value.tolist())
    if isinstance(value, np.integer):
        return int(value)
    if dataclasses.is_dataclass(value):
        return {f.name: jsonable(getattr(value, f.name))
                for f in dataclasses.fields(value)}
    if isinstance(value, dict):
        return {_key(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [jsonable(v) for v in value]
        if isinstance(value, (set, frozenset)):
            items.sort(key=str)
        return items
    return str(value)


def _key(key):
    if isinstance(key, tuple):
        return ','.join(str(k) for k in key)
    return str(jsonable(key))


class list_of_str(list):
    def __init__(self, arg=None):
        if not isinstance(arg, list):
            arg = ((item.strip() for item in arg.split(','))
                   if arg is not None else ())
        super().__init__(item for item in arg if item)

    def __str__(self):
        return ', '.join(self)
