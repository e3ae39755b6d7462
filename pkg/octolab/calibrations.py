"""The associative 3-form, the coassociative 4-form and quaternionic hulls.

φ(x, y, z) = Re(x·conj(yz)) calibrates the associative 3-planes of Im O,
ψ calibrates their orthogonal complements. A quaternionic hull {1, a, b, ab}
is the largest associative subalgebra through two orthonormal directions.
"""
import dataclasses
import functools
import itertools
import logging
from fractions import Fraction

import numpy as np
from sympy.combinatorics import Permutation
from sympy.solvers.diophantine.diophantine import sum_of_four_squares

from . import linalg
from .octonion import (
    E,
    ONE,
    Octonion,
    DomainError,
    associator,
    conjugate,
    inner,
    multiply,
    norm,
)
from .report import Outcome, Status

log = logging.getLogger('octolab.calibrations')

OPERATIONS = (
    'phi',
    'psi',
    'is_associative_plane',
    'quaternion_hull',
    'coassociative_complement',
    'hodge_dual_check',
)

IMAGINARY = range(1, 8)


class DegenerateInputError(DomainError):
    pass


class CalibrationInconsistency(ArithmeticError):
    """φ and the associator disagree on a triple"""


def _require_imaginary(*args):
    for x in args:
        if not x.is_imaginary():
            raise DomainError(f'expected an imaginary octonion, got {x}')


def _require_orthonormal(*args):
    for (p, x), (q, y) in itertools.combinations_with_replacement(enumerate(args), 2):
        if inner(x, y) != (1 if p == q else 0):
            raise DegenerateInputError(f'{x} and {y} are not orthonormal')


def phi(x, y, z):
    _require_imaginary(x, y, z)
    return inner(x, multiply(y, z))


def psi(x, y, z, w):
    _require_imaginary(x, y, z, w)
    zbar = conjugate(z)
    return inner(x, multiply(y, multiply(zbar, w)) - multiply(w, multiply(zbar, y))) / 2


@dataclasses.dataclass(frozen=True, eq=False)
class ThreeForm:
    components: np.ndarray      # 7x7x7, components[i-1, j-1, k-1] = φ_ijk

    def __getitem__(self, ijk):
        return self.components[tuple(i - 1 for i in ijk)]

    def support(self):
        return [t for t in itertools.combinations(IMAGINARY, 3) if self[t]]


@dataclasses.dataclass(frozen=True, eq=False)
class FourForm:
    components: np.ndarray      # 7x7x7x7

    def __getitem__(self, ijkl):
        return self.components[tuple(i - 1 for i in ijkl)]

    def support(self):
        return [q for q in itertools.combinations(IMAGINARY, 4) if self[q]]


@functools.cache
def three_form():
    c = np.empty((7, 7, 7), dtype=object)
    for i, j, k in itertools.product(IMAGINARY, repeat=3):
        c[i - 1, j - 1, k - 1] = phi(E[i], E[j], E[k])
    return ThreeForm(c)


@functools.cache
def four_form():
    c = np.empty((7, 7, 7, 7), dtype=object)
    for i, j, k, l in itertools.product(IMAGINARY, repeat=4):
        c[i - 1, j - 1, k - 1, l - 1] = psi(E[i], E[j], E[k], E[l])
    return FourForm(c)


def is_associative_plane(x, y, z):
    """True iff x, y, z span an associative 3-plane.

    Decided by the associator; |φ| = 1 must agree, otherwise the inputs
    contradict the calibration inequality and CalibrationInconsistency is
    raised.
    """
    _require_imaginary(x, y, z)
    _require_orthonormal(x, y, z)
    associative = not associator(x, y, z)
    if associative != (abs(phi(x, y, z)) == 1):
        raise CalibrationInconsistency(x, y, z)
    return associative


def calibration_defect(x, y, z):
    """φ² + |[x, y, z]|²/4, equal to 1 on orthonormal imaginary triples"""
    return phi(x, y, z) ** 2 + norm(associator(x, y, z)) / 4


@dataclasses.dataclass(frozen=True)
class Subalgebra:
    basis: tuple

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, x):
        return linalg.in_span([b.coeffs for b in self.basis], x.coeffs)

    def closure_witness(self):
        """First product of basis elements outside the span, or None"""
        for x, y in itertools.product(self.basis, repeat=2):
            if not self.contains(multiply(x, y)):
                return x, y
        return None

    def associator_witness(self):
        for x, y, z in itertools.product(self.basis, repeat=3):
            if associator(x, y, z):
                return x, y, z
        return None

    def __str__(self):
        return ', '.join(str(b) for b in self.basis)


def quaternion_hull(a, b):
    _require_imaginary(a, b)
    if linalg.rank([a.coeffs, b.coeffs]) < 2:
        raise DegenerateInputError(f'{a} and {b} are linearly dependent')
    _require_orthonormal(a, b)
    return Subalgebra((ONE, a, b, multiply(a, b)))


def _rational_unit_scale(v):
    """A quaternion-coordinate vector r with |r|² = 1/|v|²"""
    target = 1 / norm(v)
    p, q = target.numerator, target.denominator
    squares = sum_of_four_squares(p * q)
    return tuple(Fraction(s, q) for s in squares)


def coassociative_complement(s):
    """Orthonormal basis c, a·c, b·c, (ab)·c of the complement of a hull.

    c is a rational unit vector orthogonal to the hull: a null-space vector
    rescaled by a quaternion of the hull with the reciprocal norm.
    """
    if s.dim != 4:
        raise DomainError(f'expected a 4-dimensional subalgebra, got dimension {s.dim}')
    v = Octonion(linalg.nullspace([b.coeffs for b in s.basis], 8)[0])
    r = _rational_unit_scale(v)
    q = sum((x * b for x, b in zip(r, s.basis)), Octonion.real(0))
    c = multiply(q, v)
    _, a, b, ab = s.basis
    return [c, multiply(a, c), multiply(b, c), multiply(ab, c)]


def maximality_witness(hull, extra):
    """Why hull plus extra is not an associative subalgebra.

    Returns ('product', x, y) for a product leaving the 5-dimensional span,
    ('associator', x, y, z) for a nonzero associator, or None if the
    extension survives both tests.
    """
    extended = Subalgebra(hull.basis + (extra,))
    found = extended.closure_witness()
    if found:
        return ('product',) + found
    found = extended.associator_witness()
    if found:
        return ('associator',) + found
    return None


def hodge_sign(triple, quadruple):
    """Sign of e^T ∧ e^Q against e1∧...∧e7"""
    return Permutation([i - 1 for i in triple + quadruple]).signature()


def hodge_dual_check(orientation=1):
    """Compare ψ with ⋆φ on all 35 basis quadruples."""
    form3, form4 = three_form(), four_form()
    table = {}
    for quadruple in itertools.combinations(IMAGINARY, 4):
        triple = tuple(i for i in IMAGINARY if i not in quadruple)
        dual = orientation * hodge_sign(triple, quadruple) * form3[triple]
        table[quadruple] = (form4[quadruple], dual)
    mismatched = {q: v for q, v in table.items() if v[0] != v[1]}
    witness = {
        'phi_support': form3.support(),
        'psi_support': form4.support(),
        'mismatches': sorted(mismatched),
    }
    if not mismatched:
        return Outcome(Status.PASS, witness)
    if all(psi_value == -dual for psi_value, dual in table.values()):
        log.info('ψ = -⋆φ for orientation %+d', orientation)
        return Outcome(Status.DISCREPANCY, witness)
    return Outcome(Status.FAIL, witness)
