from fractions import Fraction

import pytest

from octolab import catalog
from octolab.octonion import E, ONE, DomainError, NormalizationError, inner, norm, parse_octonion


def test_builtin_points_are_units():
    points = catalog.builtin_points()
    assert len(points) == len(catalog.POINTS) >= 10
    assert all(norm(p) == 1 for p in points)
    assert points[0] == ONE


def test_sphere_point():
    assert catalog.sphere_point((Fraction(1, 2),)) == (Fraction(3, 5), Fraction(4, 5))
    assert catalog.sphere_point((0, 0)) == (1, 0, 0)


def test_unit_from_rational():
    x = catalog.unit_from_rational([Fraction(1, 3)] * 7)
    assert norm(x) == 1
    y = catalog.unit_from_rational([1, 2, 3, 4, 5, 6])
    assert norm(y) == 1 and y.is_imaginary()
    with pytest.raises(DomainError):
        catalog.unit_from_rational([1] * 5)


def test_load_points():
    points = catalog.load_points(['e2', '3/5e3-4/5e6'])
    assert len(points) == len(catalog.POINTS) + 2
    assert points[-1] == parse_octonion('3/5e3-4/5e6')
    with pytest.raises(NormalizationError):
        catalog.load_points(['1+e1'])


def test_random_octonions_are_reproducible():
    a = catalog.random_octonions(20, 7)
    assert len(a) == 20
    assert a == catalog.random_octonions(20, 7)
    assert a != catalog.random_octonions(20, 8)


def test_random_unit_octonions():
    assert all(norm(x) == 1 for x in catalog.random_unit_octonions(30, 1))


def test_orthonormal_triples():
    triples = catalog.orthonormal_triples(40, 3)
    assert len(triples) == 40
    for triple in triples:
        for p, x in enumerate(triple):
            assert x.is_imaginary()
            for q, y in enumerate(triple):
                assert inner(x, y) == (1 if p == q else 0)


def test_quaternion_subalgebra():
    assert catalog.in_quaternion_subalgebra(parse_octonion('1/2+1/2e1+1/2e2+1/2e4'))
    assert not catalog.in_quaternion_subalgebra(E[3])


def test_rotate_preserves_the_unit():
    p = parse_octonion('3/5+4/5e1')
    assert catalog.rotate(p, ONE) == ONE
    assert norm(catalog.rotate(p, E[5])) == 1
