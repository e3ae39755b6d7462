import itertools

import pytest

from octolab import catalog, xproduct
from octolab.octonion import (
    E, ONE, TRIPLES, DomainError, NormalizationError,
    associator, multiply, norm, parse_octonion,
)
from octolab.xproduct import PathPair


def test_x_product_at_identity_is_the_product():
    for i, j in itertools.product(range(8), repeat=2):
        assert xproduct.x_product(E[i], E[j], ONE) == E[i] * E[j]


def test_x_product_depends_on_the_point():
    assert xproduct.x_product(ONE, ONE, E[1]) == ONE
    X = parse_octonion('3/5+4/5e3')
    changed = [(i, j) for i, j in itertools.product(range(1, 8), repeat=2)
               if xproduct.x_product(E[i], E[j], X) != E[i] * E[j]]
    assert changed


@pytest.mark.parametrize('X', catalog.builtin_points(), ids=str)
def test_one_is_the_identity(X):
    assert xproduct.xproduct_identity_check(X) is None


def test_x_product_is_a_composition():
    a = catalog.random_octonions(20, 11)
    b = catalog.random_octonions(20, 12)
    for x, y, X in zip(a, b, catalog.random_unit_octonions(20, 13)):
        assert norm(xproduct.x_product(x, y, X)) == norm(x) * norm(y)


def test_x_product_needs_a_unit():
    with pytest.raises(NormalizationError):
        xproduct.x_product(E[1], E[2], parse_octonion('1+e1'))


def test_xy_product():
    X = parse_octonion('3/5+4/5e4')
    Y = parse_octonion('12/13+5/13e6')
    assert xproduct.xy_product(E[2], E[5], X, X) == xproduct.x_product(E[2], E[5], X)
    assert xproduct.xy_product(E[2], E[5], ONE, ONE) == E[2] * E[5]
    value = xproduct.xy_product(E[2], E[5], X, Y)
    assert value == multiply(multiply(E[2], X), multiply(Y.conjugate(), E[5]))
    assert norm(value) == 1


def test_torsion_at_identity_is_the_structure_constants():
    t = xproduct.torsion_tensor(ONE)
    assert t[1, 2, 4] == 1
    assert t[2, 1, 4] == -1
    assert t[1, 2, 3] == 0
    for (i, j, k), value in t.nonzero():
        assert value == xproduct.structure_constant(i, j, k)
    assert len(t.nonzero()) == 7 * 6


def test_torsion_varies_over_the_sphere():
    at_e1 = xproduct.torsion_tensor(E[1])
    at_1 = xproduct.torsion_tensor(ONE)
    assert at_e1[2, 3, 5] == -1
    assert at_1[2, 3, 5] == 1
    assert at_e1.first_difference(at_1) is not None
    assert at_1.first_difference(at_1) is None


@pytest.mark.parametrize('X', catalog.builtin_points(), ids=str)
def test_torsion_is_antisymmetric(X):
    assert xproduct.torsion_tensor(X).is_antisymmetric()


def test_torsion_on_the_quaternions():
    indices = (1, 2, 4)
    reference = xproduct.torsion_tensor(ONE).restrict(indices)
    X = parse_octonion('1/2+1/2e1+1/2e2+1/2e4')
    assert xproduct.torsion_tensor(X).restrict(indices) == reference


def test_torsion_is_cached_per_point():
    assert xproduct.torsion_tensor(E[1]).t is xproduct.torsion_tensor(E[1]).t


def test_jacobi_defect_is_six_associators():
    for i, j, k in itertools.combinations(range(1, 8), 3):
        assert xproduct.jacobi_defect(i, j, k, ONE) == 6 * associator(E[i], E[j], E[k])


def test_jacobi_defect_vanishes_on_quaternion_triples():
    nonzero = [t for t in itertools.combinations(range(1, 8), 3)
               if xproduct.jacobi_defect(*t, ONE)]
    assert len(nonzero) == 35 - 7
    for triple in TRIPLES:
        assert not xproduct.jacobi_defect(*triple, ONE)


def test_jacobi_defect_domain():
    with pytest.raises(DomainError):
        xproduct.jacobi_defect(0, 1, 2, ONE)
    with pytest.raises(DomainError):
        xproduct.jacobi_defect(1, 2, 8, ONE)


def test_path_discrepancy():
    assert xproduct.path_discrepancy(PathPair(E[1], E[2], E[3])) == 4
    assert not xproduct.path_discrepancy(PathPair(E[1], E[2], E[4]))
    assert not xproduct.path_discrepancy(PathPair(ONE + E[1], E[2], E[4]))


def test_unit_point():
    assert str(xproduct.unit_point(E[3])) == 'e3'
    with pytest.raises(NormalizationError):
        xproduct.UnitPoint(2 * E[3])


def test_tangent_bracket():
    assert xproduct.tangent_bracket(E[1], E[2], ONE) == 2 * E[4]
    X = parse_octonion('3/5+4/5e3')
    u, v = E[1] * X, E[5] * X
    assert xproduct.tangent_bracket(u, v, X) == -xproduct.tangent_bracket(v, u, X)
    assert not xproduct.tangent_bracket(u, u, X)
