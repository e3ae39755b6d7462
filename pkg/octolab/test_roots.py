import itertools
from fractions import Fraction

import numpy as np
import pytest

from octolab import roots
from octolab.octonion import DomainError
from octolab.roots import HALF, RootSet


def system(*vectors):
    return RootSet(tuple(vectors)).with_negatives()


def test_d4_roots():
    rs = roots.d4_roots()
    assert len(rs) == 24
    assert len(rs.as_set()) == 24
    assert all(roots.dot(v, v) == 1 for v in rs)
    assert (HALF, -HALF, -HALF, -HALF) in rs.as_set()
    assert rs.angle_spectrum() == [-1, -HALF, 0, HALF]


def test_d4_is_a_root_system():
    outcome = roots.root_axiom_check(roots.d4_roots())
    assert outcome
    assert outcome.witness is None


def test_positive_and_simple_roots():
    rs = roots.d4_roots()
    positive = roots.positive_roots(rs)
    assert len(positive) == 12
    simple = roots.simple_roots(rs)
    assert len(simple) == 4
    assert (HALF, -HALF, -HALF, -HALF) in simple


def test_d4_cartan_matrix():
    a = roots.cartan_matrix(roots.simple_roots(roots.d4_roots()))
    assert (np.diag(a) == 2).all()
    assert (a == a.T).all()
    degrees = sorted(int((row < 0).sum()) for row in a)
    assert degrees == [1, 1, 1, 3]


@pytest.mark.parametrize('rs, name', [
    (roots.d4_roots(), 'D4'),
    (roots.A2_EXAMPLE, 'A2'),
    (roots.A1_EXAMPLE, 'A1'),
    (system((0, 1, 0, 0), (0, 0, 1, 0)), 'A1xA1'),
    (system((0, 1, 0, 0), (0, 0, 1, 0), (0, 1, 1, 0), (0, 1, -1, 0)), 'B2'),
    (system((0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)), 'A1xA1xA1'),
])
def test_dynkin_identify(rs, name):
    assert str(roots.dynkin_identify(rs)) == name


def test_dynkin_rank():
    assert roots.dynkin_identify(roots.d4_roots()).rank == 4


def test_axiom_failures():
    assert 'negation' in roots.root_axiom_check(RootSet(((1, 0, 0, 0),))).witness
    skew = system((1, 0, 0, 0), (1, 1, 0, 0))
    assert 'reflection' in roots.root_axiom_check(skew).witness
    doubled = system((1, 0, 0, 0), (2, 0, 0, 0))
    assert list(roots.root_axiom_check(doubled).witness) == ['reduced']
    with pytest.raises(DomainError):
        roots.root_axiom_check(RootSet(()))


def test_identify_rejects_non_root_systems():
    with pytest.raises(roots.ClassificationError):
        roots.dynkin_identify(system((1, 0, 0, 0), (1, 1, 0, 0)))


def test_weyl_orbit():
    rs = roots.d4_roots()
    assert roots.weyl_orbit((1, 0, 0, 0), rs) == rs.as_set()
    assert roots.weyl_orbit((0, 0, 0, 0), rs) == {(0, 0, 0, 0)}


def test_reflect():
    assert roots.reflect((1, 1, 0, 0), (1, 0, 0, 0)) == (-1, 1, 0, 0)


def test_root_count():
    assert roots.root_count('D', 4) == 24
    assert roots.root_count('A', 2) == 6
    assert roots.root_count('E', 8) == 240


def test_format_root():
    assert roots.format_root((Fraction(1), 0, 0, 0)) == '1'
    assert roots.format_root((HALF, -HALF, -HALF, -HALF)) == '1/2-1/2i-1/2j-1/2k'
    assert roots.format_root((0, 0, -1, 0)) == '-j'
