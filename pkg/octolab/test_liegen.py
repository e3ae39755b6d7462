from fractions import Fraction

import numpy as np
import pytest

from octolab import liegen
from octolab.octonion import E, ONE, ZERO, DomainError, parse_octonion
from octolab.report import Status


def rotation(n, p, q):
    m = liegen.zeros(n)
    m[p, q], m[q, p] = Fraction(1), Fraction(-1)
    return m


def test_left_mult_matrix():
    L = liegen.left_mult_matrix
    assert (L(ONE) == liegen.identity()).all()
    assert L(E[1])[1, 0] == 1
    for i in range(1, 8):
        assert liegen.is_antisymmetric(L(E[i]))
    x = parse_octonion('1/2-e3+2e6')
    assert liegen.apply(L(E[5]), x) == E[5] * x


def test_right_mult_matrix():
    x = parse_octonion('2-e1+1/3e7')
    assert liegen.apply(liegen.right_mult_matrix(E[2]), x) == x * E[2]


def test_as_matrix_rejects_non_square():
    with pytest.raises(DomainError):
        liegen.as_matrix([[1, 2, 3]])


def test_so3_closure():
    basis = liegen.lie_closure([rotation(3, 0, 1), rotation(3, 1, 2)])
    assert basis.closed
    assert basis.dim == 3
    assert basis.contains(rotation(3, 0, 2))
    assert basis.bracket_closure_witness() is None


def test_closure_of_commuting_generators():
    basis = liegen.lie_closure([liegen.left_mult_matrix(E[3]),
                                2 * liegen.left_mult_matrix(E[3])])
    assert basis.dim == 1


def test_closure_of_nothing():
    assert liegen.lie_closure([]).dim == 0


def test_mixed_shapes():
    with pytest.raises(DomainError):
        liegen.lie_closure([rotation(3, 0, 1), rotation(4, 0, 1)])


def test_left_multiplications_generate_so8():
    basis = liegen.so8_closure()
    assert basis.closed
    assert basis.dim == 28
    assert all(liegen.is_antisymmetric(m) for m in basis.members)
    for p in range(8):
        for q in range(p + 1, 8):
            assert basis.contains(rotation(8, p, q))


def test_derivations_form_g2():
    g2 = liegen.derivation_algebra()
    assert g2.dim == 14
    assert g2.closed
    for d in g2.members:
        assert not liegen.apply(d, ONE)
        x, y = E[1], parse_octonion('1+e2-e5')
        assert liegen.apply(d, x * y) == liegen.apply(d, x) * y + x * liegen.apply(d, y)


def test_fibration_chain():
    so8 = liegen.so8_closure()
    spin7 = liegen.stabilizer_subalgebra(so8, ONE)
    g2 = liegen.derivation_algebra()
    assert (g2.dim, spin7.dim, so8.dim) == (14, 21, 28)
    assert so8.contains_all(spin7)
    assert spin7.contains_all(g2)
    assert not g2.contains_all(spin7)
    assert liegen.stabilizer_subalgebra(so8, ZERO) is so8


def test_stabilizer_of_an_imaginary_unit():
    spin7 = liegen.stabilizer_subalgebra(liegen.so8_closure(), E[1])
    assert spin7.dim == 21
    assert all(not liegen.apply(m, E[1]) for m in spin7.members)


def test_antisymmetric_coordinates():
    assert len(liegen.ANTISYMMETRIC_INDEX) == 28
    m = liegen.left_mult_matrix(parse_octonion('e1-1/2e6'))
    coords = liegen.antisymmetric_coordinates(m)
    assert (liegen.from_antisymmetric_coordinates(coords) == m).all()


@pytest.mark.parametrize('i', range(1, 8))
def test_triality_decompose_left_plus_right(i):
    L = liegen.left_mult_matrix(E[i])
    R = liegen.right_mult_matrix(E[i])
    triple = liegen.triality_decompose(L + R)
    assert triple.residual_witness() is None
    assert (triple.a_prime == L).all()
    assert (triple.a_dblprime == R).all()


def test_triality_of_derivations_is_trivial():
    for t in liegen.triality_solve(liegen.derivation_algebra().members[:3]):
        assert (t.a_prime == t.a).all()
        assert (t.a_dblprime == t.a).all()


def test_triality_needs_antisymmetric():
    with pytest.raises(DomainError):
        liegen.triality_decompose(liegen.identity())


def test_triality_maps():
    theta, theta2 = liegen.triality_maps()
    assert theta.shape == (28, 28)
    assert (theta.dot(theta) == liegen.identity(28)).all()
    assert liegen.bracket_preservation_witness(theta) is None


def test_triality_order_probe():
    outcome = liegen.triality_order_probe()
    assert outcome.status is Status.PASS
    assert outcome.witness['theta_order'] == 2
    assert outcome.witness['rho_order'] == 3
    assert outcome.witness['theta_rank'] == 28
    assert outcome.witness['rho_cubed_deviation'] == []
    assert outcome.witness['theta_cubed_is_identity'] is False
    assert outcome.witness['theta_cubed_deviation']


def test_matrix_order():
    assert liegen.matrix_order(liegen.identity(3)) == 1
    swap = np.array([[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]], dtype=object)
    assert liegen.matrix_order(swap) == 2
    assert liegen.matrix_order(2 * liegen.identity(2)) is None


def test_fingerprint_depends_on_the_span_only():
    a = liegen.lie_closure([rotation(3, 0, 1), rotation(3, 1, 2)])
    b = liegen.lie_closure([rotation(3, 1, 2), rotation(3, 0, 2)])
    assert liegen.fingerprint(a) == liegen.fingerprint(b)
    assert len(liegen.fingerprint(a)) == 64
