"""Strictly triangular 3x3 matrices with octonion entries.

An element stores the creator (1,2), annihilator (2,3) and central (1,3)
entries. The dagger transposes, so its image is lower triangular; the
``lower`` flag records that orientation and the three fields keep their
roles (the (3,2) entry is the creator of a lower element, (2,1) its
annihilator, (3,1) its central entry).
"""
import dataclasses
import itertools
import logging

from . import linalg
from .octonion import E, ZERO, Octonion, DomainError, conjugate, multiply
from .report import Outcome

log = logging.getLogger('octolab.heisenberg')

OPERATIONS = (
    'h_multiply',
    'h_bracket',
    'h_dagger',
    'nilpotency_check',
)

SLOTS = ('creator', 'annihilator', 'central')


@dataclasses.dataclass(frozen=True)
class HeisenbergElement:
    creator: Octonion = ZERO
    annihilator: Octonion = ZERO
    central: Octonion = ZERO
    lower: bool = False

    def __bool__(self):
        return bool(self.creator) or bool(self.annihilator) or bool(self.central)

    def is_central(self):
        return not self.creator and not self.annihilator

    def degree(self):
        """Lowest grading degree present: 1 for creator/annihilator, 2 for central"""
        if self.creator or self.annihilator:
            return 1
        return 2 if self.central else None


def h_zero(lower=False):
    return HeisenbergElement(lower=lower)


def _same_orientation(m1, m2):
    if m1.lower != m2.lower:
        raise DomainError('cannot combine an upper and a lower triangular element')
    return m1.lower


def h_add(m1, m2):
    lower = _same_orientation(m1, m2)
    return HeisenbergElement(m1.creator + m2.creator,
                             m1.annihilator + m2.annihilator,
                             m1.central + m2.central, lower)


def h_multiply(m1, m2):
    lower = _same_orientation(m1, m2)
    return HeisenbergElement(central=multiply(m1.creator, m2.annihilator), lower=lower)


def h_bracket(m1, m2):
    lower = _same_orientation(m1, m2)
    central = (multiply(m1.creator, m2.annihilator) -
               multiply(m2.creator, m1.annihilator))
    return HeisenbergElement(central=central, lower=lower)


def h_dagger(m):
    return HeisenbergElement(conjugate(m.annihilator), conjugate(m.creator),
                             conjugate(m.central), not m.lower)


def basis_elements(lower=False):
    """The 24 elements with a single basis unit in a single slot"""
    for slot, k in itertools.product(SLOTS, range(8)):
        yield HeisenbergElement(lower=lower, **{slot: E[k]})


def nilpotency_check():
    """All length-3 products of basis elements vanish in both association
    orders; length-2 products are central-only."""
    basis = list(basis_elements())
    for m1, m2 in itertools.product(basis, repeat=2):
        if not h_multiply(m1, m2).is_central():
            return Outcome.of(False, {'not_central': (m1, m2)})
    count = 0
    for m1, m2, m3 in itertools.product(basis, repeat=3):
        left = h_multiply(h_multiply(m1, m2), m3)
        right = h_multiply(m1, h_multiply(m2, m3))
        if left or right:
            return Outcome.of(False, {'nonzero': (m1, m2, m3)})
        count += 1
    log.debug('checked %d triple products', count)
    return Outcome.of(True, {'triples': count, 'orders': 2})


def center_check():
    """The elements commuting with every basis element are exactly the
    central-only ones."""
    basis = list(basis_elements())
    for m in basis:
        commutes = all(not h_bracket(m, n) for n in basis)
        if commutes != m.is_central():
            return Outcome.of(False, {'element': m, 'commutes': commutes})
    return Outcome.of(True, {'basis_elements': len(basis)})


def commutator_span_check():
    """Bracket images of unit creator/annihilator pairs span Im O."""
    images = []
    for i, j in itertools.combinations(range(8), 2):
        m1 = HeisenbergElement(E[i], E[i])
        m2 = HeisenbergElement(E[j], E[j])
        images.append(h_bracket(m1, m2).central)
    rank = linalg.rank([x.coeffs for x in images])
    real = any(x.real_part for x in images)
    return Outcome.of(rank == 7 and not real, {'rank': rank})


def vector_spacetime_element(x):
    """The central-only element carrying x, which squares to zero"""
    return HeisenbergElement(central=x)
