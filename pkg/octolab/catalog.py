"""Exactly-rational points of S⁷ and sampled orthonormal imaginary frames.

Points come from inverse stereographic projection, which maps every rational
vector to a rational point of the unit sphere, so no check in the suite ever
needs a tolerance.
"""
import functools
import itertools
import logging
from fractions import Fraction

import numpy as np

from .octonion import (
    E,
    Octonion,
    DomainError,
    conjugate,
    multiply,
    parse_octonion,
    require_unit,
)
from .vector import vectorize

log = logging.getLogger('octolab.catalog')

# the built-in points, in literal form
POINTS = (
    '1',
    'e1',
    '-1',
    '3/5+4/5e1',
    '3/5+4/5e4',
    '1/2+1/2e1+1/2e2+1/2e4',
    '2/3+1/3e1+2/3e3',
    '1/3e2+2/3e5+2/3e6',
    '2/7+3/7e1+6/7e7',
    '1/2e1+1/2e3+1/2e5+1/2e7',
    '12/13+5/13e6',
    '1/3+2/3e4-2/3e7',
    '1/9+4/9e2+8/9e3',
    '1/2-1/2e3+1/2e5-1/2e6',
    '3/5e2+4/5e4',
)

# support of the canonical quaternion subalgebra span{1, e1, e2, e4}
QUATERNION_SUPPORT = (0, 1, 2, 4)


def sphere_point(v):
    """Inverse stereographic projection of v ∈ Qⁿ onto Sⁿ ⊂ Qⁿ⁺¹.

    >>> sphere_point((Fraction(1, 2),))
    (Fraction(3, 5), Fraction(4, 5))
    """
    v = tuple(Fraction(x) for x in v)
    s = sum((x * x for x in v), Fraction(0))
    return ((1 - s) / (1 + s),) + tuple(2 * x / (1 + s) for x in v)


def unit_from_rational(v):
    """A rational unit octonion from 7 rationals, or a rational unit
    imaginary octonion from 6 rationals."""
    v = tuple(v)
    if len(v) == 7:
        return Octonion(sphere_point(v))
    if len(v) == 6:
        return Octonion.from_imaginary(sphere_point(v))
    raise DomainError(f'expected 6 or 7 rationals, got {len(v)}')


@functools.cache
def builtin_points():
    return tuple(require_unit(parse_octonion(literal)) for literal in POINTS)


def load_points(extra=()):
    """The built-in catalog followed by extra literals (each must be unit)"""
    points = list(builtin_points())
    for literal in extra:
        point = parse_octonion(literal) if isinstance(literal, str) else literal
        points.append(require_unit(point))
    log.debug('catalog has %d points', len(points))
    return tuple(points)


def in_quaternion_subalgebra(x):
    return set(x.support()) <= set(QUATERNION_SUPPORT)


def _random_rational(rng, size, height=9):
    nums = rng.integers(-height, height + 1, size=size)
    dens = rng.integers(1, height + 1, size=size)
    return tuple(Fraction(int(n), int(d)) for n, d in zip(nums, dens))


@vectorize
def random_octonions(count, seed, height=9):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        yield Octonion(_random_rational(rng, 8, height))


@vectorize
def random_unit_octonions(count, seed, height=5):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        yield unit_from_rational(_random_rational(rng, 7, height))


def rotate(p, x):
    """x ↦ p x p̄, an isometry of Im O for unit p"""
    return multiply(multiply(p, x), conjugate(p))


@vectorize
def orthonormal_triples(count, seed):
    """Orthonormal imaginary triples: basis triples moved by random rational
    rotations, cycling through all 35 basis triples."""
    rng = np.random.default_rng(seed)
    basis_triples = list(itertools.combinations(range(1, 8), 3))
    for n in range(count):
        i, j, k = basis_triples[n % len(basis_triples)]
        p = unit_from_rational(_random_rational(rng, 7, height=3))
        yield tuple(rotate(p, E[m]) for m in (i, j, k))
