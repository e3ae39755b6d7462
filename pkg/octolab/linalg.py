"""Exact linear algebra over Q.

Thin layer over sympy's DomainMatrix on QQ: matrices go in as sequences of
rows of Fractions (numpy object arrays work too) and come back the same way.
"""
import logging
from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

log = logging.getLogger('octolab.linalg')


class InconsistentSystem(ArithmeticError):
    def __str__(self):
        return 'linear system has no solution for right-hand side {}'.format(*self.args)


class Underdetermined(ArithmeticError):
    def __str__(self):
        return 'linear system has free unknowns {}'.format(*self.args)


def _qq(x):
    x = Fraction(x)
    return QQ(x.numerator, x.denominator)


def _fraction(x):
    return Fraction(int(x.numerator), int(x.denominator))


def to_domain(rows, ncols=None):
    rows = [[_qq(x) for x in row] for row in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    return DomainMatrix(rows, (len(rows), ncols), QQ)


def from_domain(dm):
    return [[_fraction(x) for x in row] for row in dm.to_list()]


def columns_to_rows(columns):
    columns = [list(c) for c in columns]
    if not columns:
        return []
    return [list(row) for row in zip(*columns)]


def rref(rows, ncols=None):
    """Reduced row-echelon form and pivot columns"""
    rows = [list(r) for r in rows]
    if not rows:
        return [], ()
    log.debug('rref of %dx%d', len(rows), len(rows[0]))
    reduced, pivots = to_domain(rows, ncols).rref()
    return from_domain(reduced)[:len(pivots)], tuple(pivots)


def rank(rows):
    return len(rref(rows)[1])


def nullspace(rows, ncols):
    """Basis of {x : A x = 0}, one vector per free column, in column order"""
    reduced, pivots = rref(rows, ncols)
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[free]
        basis.append(tuple(v))
    return basis


def independent_columns(columns):
    """Indices of the first maximal independent subset, in order"""
    return rref(columns_to_rows(columns))[1]


def in_span(vectors, v):
    vectors = [list(x) for x in vectors]
    if not vectors:
        return not any(v)
    return rank(vectors + [list(v)]) == rank(vectors)


def solve_many(lhs_columns, rhs_columns, unique=True):
    """Solve A x = b for every b in rhs_columns with a single elimination.

    lhs_columns are the columns of A. Returns one solution per right-hand
    side; free unknowns are set to zero unless unique is requested, in
    which case they raise Underdetermined.
    """
    n = len(lhs_columns)
    rows = columns_to_rows(list(lhs_columns) + list(rhs_columns))
    reduced, pivots = rref(rows, n + len(rhs_columns))
    bad = [p - n for p in pivots if p >= n]
    if bad:
        raise InconsistentSystem(bad[0])
    if unique and len(pivots) < n:
        raise Underdetermined(sorted(set(range(n)) - set(pivots)))
    solutions = []
    for r in range(len(rhs_columns)):
        x = [Fraction(0)] * n
        for row, p in zip(reduced, pivots):
            x[p] = row[n + r]
        solutions.append(tuple(x))
    return solutions
