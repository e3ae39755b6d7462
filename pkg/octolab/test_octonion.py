from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from octolab.octonion import (
    E, ONE, ZERO, TRIPLES,
    BiOctonion, ComplexRational, DomainError, NormalizationError, Octonion,
    ParseError, Helicity, Particle,
    associator, bioct_multiply, commutator, conjugate, fermion_label,
    format_octonion, inner, multiply, norm, parse_octonion, quadratic_form,
    rational_sqrt, require_unit, split_amplitude, split_octonion_basis,
    split_octonion_null_vector, in_split_form, zero_divisor_witness,
)


def rationals(bound=5, denominator=7):
    return st.fractions(min_value=-bound, max_value=bound,
                        max_denominator=denominator)


def octonions(bound=5, denominator=7):
    return st.tuples(*[rationals(bound, denominator)] * 8).map(Octonion)


def imaginary_octonions():
    return st.tuples(*[rationals()] * 7).map(Octonion.from_imaginary)


def test_squares_of_imaginary_units():
    for k in range(1, 8):
        assert E[k] * E[k] == -ONE
    assert E[0] == ONE


@pytest.mark.parametrize('triple', TRIPLES)
def test_triples_multiply_cyclically(triple):
    i, j, k = triple
    assert E[i] * E[j] == E[k]
    assert E[j] * E[k] == E[i]
    assert E[k] * E[i] == E[j]
    assert E[j] * E[i] == -E[k]


def test_table_examples():
    assert E[1] * E[2] == E[4]
    assert E[2] * E[3] == E[5]
    assert E[7] * E[1] == E[3]
    assert E[5] * E[6] == E[1]


def test_scalars_and_identity():
    x = parse_octonion('1/2-e3+2e7')
    assert ONE * x == x == x * ONE
    assert 2 * x == x + x
    assert x / 2 == Fraction(1, 2) * x
    assert x - x == ZERO
    assert not ZERO and x


@given(octonions(), octonions())
def test_composition(x, y):
    assert norm(x * y) == norm(x) * norm(y)


@given(octonions(), octonions())
def test_alternative(x, y):
    assert not associator(x, x, y)
    assert not associator(x, y, y)
    assert not associator(x, y, x)


@given(octonions(), octonions())
def test_conjugate_reverses_products(x, y):
    assert conjugate(x * y) == conjugate(y) * conjugate(x)
    assert conjugate(conjugate(x)) == x


@given(octonions(), octonions())
def test_inner_is_real_part(x, y):
    assert inner(x, y) == (x * conjugate(y)).real_part
    assert norm(x) >= 0


@given(imaginary_octonions(), imaginary_octonions())
@settings(max_examples=50)
def test_commutator_of_imaginary_is_imaginary(x, y):
    c = commutator(x, y)
    assert c.is_imaginary()
    assert c == -commutator(y, x)


def test_associator_example():
    assert associator(E[1], E[2], E[3]) == -2 * E[6]
    assert not associator(E[1], E[2], E[4])
    assert associator(E[2], E[1], E[3]) == 2 * E[6]


def test_commutator_example():
    assert commutator(E[1], E[2]) == 2 * E[4]
    assert not commutator(ONE, E[3])


def test_wrong_number_of_coefficients():
    with pytest.raises(DomainError):
        Octonion((1, 2, 3))
    with pytest.raises(DomainError):
        Octonion.from_imaginary((1, 2))


def test_require_unit():
    assert require_unit(E[3]) is E[3]
    with pytest.raises(NormalizationError) as excinfo:
        require_unit(parse_octonion('1+e1'))
    assert 'norm 2' in str(excinfo.value)


@pytest.mark.parametrize('literal, coeffs', [
    ('1', (1, 0, 0, 0, 0, 0, 0, 0)),
    ('3/5+4/5e4', (Fraction(3, 5), 0, 0, 0, Fraction(4, 5), 0, 0, 0)),
    ('-e7', (0, 0, 0, 0, 0, 0, 0, -1)),
    ('e1+e1', (0, 2, 0, 0, 0, 0, 0, 0)),
    ('1/2-1/3e2', (Fraction(1, 2), 0, Fraction(-1, 3), 0, 0, 0, 0, 0)),
    ('+2e5', (0, 0, 0, 0, 0, 2, 0, 0)),
])
def test_parse(literal, coeffs):
    assert parse_octonion(literal).coeffs == coeffs


@pytest.mark.parametrize('literal, position', [
    ('e8', 0),
    ('', 0),
    ('1+', 2),
    ('1/0', 2),
    ('1e1e2', 3),
    ('x', 0),
])
def test_parse_errors(literal, position):
    with pytest.raises(ParseError) as excinfo:
        parse_octonion(literal)
    assert excinfo.value.position == position
    assert repr(literal) in str(excinfo.value)


def test_format():
    assert format_octonion(parse_octonion('3/5+4/5e4')) == '3/5+4/5e4'
    assert format_octonion(ZERO) == '0'
    assert str(-E[3]) == '-e3'
    assert str(parse_octonion('-1/2+e1-3e2')) == '-1/2+e1-3e2'


@given(octonions())
def test_format_parses_back(x):
    assert parse_octonion(format_octonion(x)) == x


def test_zero_divisor_witness():
    u, v = zero_divisor_witness()
    assert u and v
    assert not bioct_multiply(u, v)
    assert quadratic_form(u) == ComplexRational(0, 0)
    assert not quadratic_form(v)


def test_bioctonion_embedding():
    for i in range(8):
        for j in range(8):
            assert BiOctonion(E[i]) * BiOctonion(E[j]) == BiOctonion(E[i] * E[j])
    i = BiOctonion(ZERO, ONE)
    assert i * i == BiOctonion(-ONE)


@given(octonions(3, 3), octonions(3, 3), octonions(3, 3), octonions(3, 3))
@settings(max_examples=30)
def test_bioctonion_composition(a, b, c, d):
    z, w = BiOctonion(a, b), BiOctonion(c, d)
    assert quadratic_form(z * w) == quadratic_form(z) * quadratic_form(w)


def test_complex_rational_str():
    assert str(ComplexRational(Fraction(1, 2), Fraction(-3))) == '1/2-3i'
    assert str(ComplexRational(2, 1)) == '2+1i'
    assert str(ComplexRational(Fraction(5))) == '5'


def test_split_octonions():
    basis = split_octonion_basis()
    assert len(basis) == 8
    for x in basis:
        for y in basis:
            assert in_split_form(x * y)
    signs = sorted(quadratic_form(b).re for b in basis)
    assert signs == [-1] * 4 + [1] * 4
    null = split_octonion_null_vector()
    assert null and not quadratic_form(null)


@pytest.mark.parametrize('index, particle, helicity', [
    (0, Particle.E_NEUTRINO, Helicity.WEYL),
    (1, Particle.RED_UP, Helicity.DIRAC),
    (4, Particle.ELECTRON, Helicity.DIRAC),
    (6, Particle.BLUE_UP, Helicity.DIRAC),
    (7, Particle.BLUE_DOWN, Helicity.DIRAC),
])
def test_fermion_label(index, particle, helicity):
    label = fermion_label(index)
    assert label.basis_index == index
    assert label.name is particle
    assert label.helicity_class is helicity


@pytest.mark.parametrize('index', [8, -1, 1.0, True, '3'])
def test_fermion_label_domain(index):
    with pytest.raises(DomainError):
        fermion_label(index)


def test_fermion_labels_distinct():
    assert len({fermion_label(k).name for k in range(8)}) == 8


def test_split_amplitude():
    split = split_amplitude(parse_octonion('3/5+4/5e4'))
    assert split.nu_amplitude == Fraction(3, 5)
    assert split.r_squared == Fraction(16, 25)
    assert split.r == Fraction(4, 5)
    assert split.direction == E[4]
    assert split.direction_is_unit


def test_split_amplitude_pure_and_negative():
    assert split_amplitude(ONE).direction is None
    split = split_amplitude(-ONE)
    assert split.nu_amplitude == 1 and split.r_squared == 0


def test_split_amplitude_irrational_radius():
    x = parse_octonion('1/2+1/2e1+1/2e2+1/2e3')
    split = split_amplitude(x)
    assert split.r_squared == Fraction(3, 4)
    assert split.r is None
    assert not split.direction_is_unit
    assert split.direction == x.imaginary_part


def test_split_amplitude_needs_unit():
    with pytest.raises(NormalizationError):
        split_amplitude(parse_octonion('1+e1'))


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 16)) == Fraction(3, 4)
    assert rational_sqrt(2) is None
    assert rational_sqrt(-1) is None
