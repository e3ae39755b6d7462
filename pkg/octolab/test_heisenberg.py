import itertools

import pytest

from octolab import catalog, heisenberg
from octolab.heisenberg import HeisenbergElement, h_add, h_bracket, h_dagger, h_multiply
from octolab.octonion import E, ONE, ZERO, DomainError, conjugate, parse_octonion


def element(creator='0', annihilator='0', central='0', lower=False):
    return HeisenbergElement(parse_octonion(creator), parse_octonion(annihilator),
                             parse_octonion(central), lower)


def test_product_lands_in_the_corner():
    product = h_multiply(element(creator='e1'), element(annihilator='e2'))
    assert product == HeisenbergElement(central=E[4])
    assert product.is_central()
    assert product.degree() == 2


def test_product_uses_creator_then_annihilator():
    m1 = element('1+e3', '2e5', 'e7')
    m2 = element('e2', '1/2-e6', '3')
    assert h_multiply(m1, m2).central == parse_octonion('1+e3') * parse_octonion('1/2-e6')
    assert not h_multiply(element(central='e5'), m2)
    assert not h_multiply(m1, element(central='e5'))


def test_add():
    total = h_add(element('e1', 'e2'), element('e1', central='e3'))
    assert total == element('2e1', 'e2', 'e3')
    assert h_add(total, heisenberg.h_zero()) == total


def test_mixed_orientations():
    upper, lower = element('e1'), element('e2', lower=True)
    with pytest.raises(DomainError):
        h_multiply(upper, lower)
    with pytest.raises(DomainError):
        h_bracket(upper, lower)
    with pytest.raises(DomainError):
        h_add(upper, lower)


def test_bracket():
    m1, m2 = element('e1', 'e1'), element('e2', 'e2')
    value = h_bracket(m1, m2)
    assert value.central == 2 * E[4]
    assert value.is_central()
    assert not h_bracket(m1, m1)
    assert h_bracket(m2, m1).central == -2 * E[4]


def test_bracket_of_central_elements_vanishes():
    assert not h_bracket(element(central='e1'), element(central='e2'))


def test_dagger():
    m = element('3/5+4/5e4', 'e2', 'e1')
    d = h_dagger(m)
    assert d.lower
    assert d.creator == conjugate(E[2])
    assert d.annihilator == parse_octonion('3/5-4/5e4')
    assert d.central == -E[1]
    assert h_dagger(d) == m


def test_dagger_reverses_products():
    values = catalog.random_octonions(12, 3)
    elements = [HeisenbergElement(*values[n:n + 3]) for n in range(0, 12, 3)]
    for m, n in itertools.product(elements, repeat=2):
        assert h_dagger(h_multiply(m, n)) == h_multiply(h_dagger(n), h_dagger(m))


def test_lower_elements_multiply_among_themselves():
    m = element('e1', 'e2', lower=True)
    assert h_multiply(m, m) == HeisenbergElement(central=E[4], lower=True)


def test_basis_elements():
    basis = list(heisenberg.basis_elements())
    assert len(basis) == 24
    assert all(b.degree() in (1, 2) for b in basis)
    assert heisenberg.h_zero().degree() is None


def test_nilpotency():
    outcome = heisenberg.nilpotency_check()
    assert outcome
    assert outcome.witness == {'triples': 24 ** 3, 'orders': 2}


def test_center():
    assert heisenberg.center_check()


def test_commutators_span_the_imaginary_octonions():
    outcome = heisenberg.commutator_span_check()
    assert outcome
    assert outcome.witness['rank'] == 7


def test_vector_spacetime_element_squares_to_zero():
    for p in catalog.builtin_points():
        v = heisenberg.vector_spacetime_element(p)
        assert v.central == p
        assert not h_multiply(v, v)
