import pytest

from octolab import dims, roots
from octolab.octonion import DomainError
from octolab.report import Status


@pytest.mark.parametrize('name, dim', [
    ('Spin(8)', 28),
    ('Spin(7)', 21),
    ('G2', 14),
    ('SU(3)', 8),
    ('U(4)', 16),
    ('Spin(6)xU(1)', 16),
    ('SU(2)×U(1)', 4),
    ('(SU(2)xU(1))', 4),
    ('D5', 45),
    ('D4xU(1)', 29),
    ('E6', 78),
    ('1', 0),
])
def test_group_dim(name, dim):
    assert dims.group_dim(name) == dim


@pytest.mark.parametrize('name', ['Foo(3)', '', 'SU(3', 'E9'])
def test_unknown_groups(name):
    with pytest.raises(DomainError):
        dims.group_dim(name)


def test_factors():
    assert dims.factors('SU(3)x(SU(2)xU(1))') == ['SU(3)', 'SU(2)xU(1)']
    assert dims.factors(' S^2 x S^2 ') == ['S^2', 'S^2']


def test_coset_and_space_dims():
    assert dims.coset_dim('Spin(8)/U(4)') == 12
    assert dims.coset_dim('SU(3)/(SU(2)xU(1))') == 4
    assert dims.coset_dim('U(1)') == 1
    assert dims.space_dim('CP^2') == 4
    assert dims.space_dim('S^7xRP^1') == 8
    with pytest.raises(DomainError):
        dims.space_dim('Q^3')


def test_symmetric_space_table():
    rows = dict(dims.symmetric_space_check())
    assert list(rows) == ['Spin(5)', 'SU(3)', 'SU(2)', 'U(1)']
    assert rows['Spin(5)'].status is Status.PASS
    assert rows['SU(3)'].status is Status.PASS
    assert rows['SU(2)'].status is Status.DISCREPANCY
    assert (rows['SU(2)'].witness['coset_dim'], rows['SU(2)'].witness['space_dim']) == (2, 4)
    assert rows['U(1)'].status is Status.DISCREPANCY
    assert (rows['U(1)'].witness['coset_dim'], rows['U(1)'].witness['space_dim']) == (1, 4)


def test_shilov_boundaries():
    cases = dict(dims.shilov_check())
    assert all(outcome.status is Status.PASS for outcome in cases.values())
    assert cases['E6'].witness['complex_dim'] == 16
    assert cases['D5'].witness['complex_dim'] == 8
    assert cases['Spin(8)/U(4)'].witness == {'coset_dim': 12, 'positive_roots': 12}


def test_dimension_identities():
    for name, lhs, rhs in dims.dimension_identities():
        assert lhs == rhs, name


def test_coset_blocks_cover_the_positive_roots():
    positive = dims.positive_split()
    assert len(positive) == 12
    assert set(positive) == set(roots.positive_roots(roots.d4_roots()))


def test_coset_split_report():
    report = dict(dims.coset_split_report())
    assert list(report) == ['SU(3)', 'SU(2)', 'U(1)']
    assert all(o.status is Status.INDETERMINATE for o in report.values())
    assert report['SU(3)'].witness['root_type'] is None
    assert 'reflection' in report['SU(3)'].witness['root_axiom_failures']
    assert report['SU(2)'].witness['root_type'] == 'A1xA1xA1'
    assert report['U(1)'].witness['root_type'] == 'A1'


def test_evaluate_block():
    a1 = ((1, 0, 0, 0),)
    assert dims.evaluate_block('SU(2)', 'A1', a1, a1).status is Status.PASS
    assert dims.evaluate_block('SU(3)', 'A2', a1, a1).status is Status.DISCREPANCY
