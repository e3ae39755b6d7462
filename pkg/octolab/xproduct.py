"""Point-dependent products on S⁷ and their torsion.

Every unit octonion X carries its own product a∘b = (aX)(X̄b), isomorphic
to the octonions and equal to the ordinary product at X = 1. The structure
constants of its commutator in the tangent frame {e_i X} depend on X, which
is what the torsion tensor records.
"""
import dataclasses
import functools
import itertools
import logging
from fractions import Fraction

import numpy as np

from . import linalg
from .octonion import (
    E,
    ONE,
    Octonion,
    DomainError,
    associator,
    conjugate,
    multiply,
    norm,
    require_unit,
)

log = logging.getLogger('octolab.xproduct')

OPERATIONS = (
    'x_product',
    'xy_product',
    'torsion_tensor',
    'jacobi_defect',
    'path_discrepancy',
)

IMAGINARY = range(1, 8)


class ConsistencyError(ArithmeticError):
    def __str__(self):
        return 'tangent bracket at {} is not uniquely expressed in the frame {{e_k X}}: {}'.format(*self.args)


@dataclasses.dataclass(frozen=True)
class UnitPoint:
    value: Octonion

    def __post_init__(self):
        require_unit(self.value)

    def __str__(self):
        return str(self.value)


def unit_point(X):
    return X if isinstance(X, UnitPoint) else UnitPoint(X)


@dataclasses.dataclass(frozen=True, eq=False)
class TorsionTensor:
    base: UnitPoint
    t: np.ndarray       # 7x7x7 object array, t[i-1, j-1, k-1] = T_ijk

    def __getitem__(self, ijk):
        i, j, k = ijk
        return self.t[i - 1, j - 1, k - 1]

    def nonzero(self):
        """((i, j, k), T_ijk) for the nonzero entries in lexicographic order"""
        return [((i, j, k), self[i, j, k])
                for i, j, k in itertools.product(IMAGINARY, repeat=3)
                if self[i, j, k]]

    def is_antisymmetric(self):
        return self.antisymmetry_witness() is None

    def antisymmetry_witness(self):
        for i, j, k in itertools.product(IMAGINARY, repeat=3):
            value = self[i, j, k]
            for p, q, r in ((j, i, k), (i, k, j), (k, j, i)):
                if self[p, q, r] != -value:
                    return (i, j, k), (p, q, r)
        return None

    def restrict(self, indices):
        return {(i, j, k): self[i, j, k]
                for i, j, k in itertools.product(indices, repeat=3)}

    def first_difference(self, other):
        for i, j, k in itertools.product(IMAGINARY, repeat=3):
            if self[i, j, k] != other[i, j, k]:
                return (i, j, k), self[i, j, k], other[i, j, k]
        return None


@dataclasses.dataclass(frozen=True)
class PathPair:
    start: Octonion
    seg_a: Octonion
    seg_b: Octonion


def x_product(a, b, X):
    X = unit_point(X).value
    return multiply(multiply(a, X), multiply(conjugate(X), b))


def xy_product(a, b, X, Y):
    X, Y = unit_point(X).value, unit_point(Y).value
    return multiply(multiply(a, X), multiply(conjugate(Y), b))


def x_commutator(a, b, X):
    return x_product(a, b, X) - x_product(b, a, X)


def tangent_frame(X):
    X = unit_point(X).value
    return tuple(multiply(E[i], X) for i in IMAGINARY)


def tangent_bracket(u, v, X):
    """Bracket of tangent vectors at X: carry u, v to the identity with X̄,
    take the X-product commutator, carry the result back with X."""
    X = unit_point(X).value
    Xbar = conjugate(X)
    return multiply(x_commutator(multiply(u, Xbar), multiply(v, Xbar), X), X)


@functools.cache
def _torsion_entries(X):
    frame = tangent_frame(X)
    brackets = [tangent_bracket(frame[i], frame[j], X)
                for i in range(7) for j in range(7)]
    try:
        solutions = linalg.solve_many(
            [f.coeffs for f in frame], [b.coeffs for b in brackets])
    except (linalg.InconsistentSystem, linalg.Underdetermined) as e:
        raise ConsistencyError(X, e) from e
    t = np.empty((7, 7, 7), dtype=object)
    for n, solution in enumerate(solutions):
        i, j = divmod(n, 7)
        for k in range(7):
            t[i, j, k] = solution[k] / 2
    return t


def torsion_tensor(X):
    """T_ijk(X) defined by [e_iX, e_jX] = 2 T_ijk(X) e_kX."""
    X = unit_point(X)
    log.debug('torsion tensor at %s', X)
    return TorsionTensor(X, _torsion_entries(X.value))


def jacobi_defect(i, j, k, X):
    for index in (i, j, k):
        if index not in IMAGINARY:
            raise DomainError(f'tangent index must be in 1..7, got {index!r}')
    frame = tangent_frame(X)
    f = {n: frame[n - 1] for n in (i, j, k)}

    def br(u, v):
        return tangent_bracket(u, v, X)

    return (br(br(f[i], f[j]), f[k]) +
            br(br(f[j], f[k]), f[i]) +
            br(br(f[k], f[i]), f[j]))


def path_discrepancy(p):
    """Squared size of the gap between (x·a)·b and x·(a·b)"""
    return norm(associator(p.start, p.seg_a, p.seg_b))


def xproduct_identity_check(X):
    """1 is a two-sided identity of the X-product"""
    for k in range(8):
        if x_product(ONE, E[k], X) != E[k] or x_product(E[k], ONE, X) != E[k]:
            return k
    return None


def structure_constant(i, j, k):
    """c_ijk with e_i e_j = Σ c_ijk e_k for imaginary units"""
    return multiply(E[i], E[j]).coeffs[k]
