"""Exact-rational matrix Lie algebras acting on O = Q⁸.

Matrices are 8x8 numpy object arrays of Fractions. Spans are maintained by
exact elimination (see linalg), so every dimension reported here is a rank
over Q, not a numerical estimate.
"""
import dataclasses
import functools
import hashlib
import itertools
import logging
from fractions import Fraction

import numpy as np

from . import linalg
from .octonion import E, Octonion, DomainError, multiply
from .report import Outcome, Status

log = logging.getLogger('octolab.liegen')

OPERATIONS = (
    'left_mult_matrix',
    'lie_closure',
    'derivation_algebra',
    'stabilizer_subalgebra',
    'triality_decompose',
    'triality_order_probe',
)

N = 8
MAX_GENERATIONS = 10


class ClosureError(ArithmeticError):
    def __str__(self):
        return 'bracket closure did not stabilise after {} generations (dimension {})'.format(*self.args)


class TrialityViolation(ArithmeticError):
    def __str__(self):
        return 'triality system for {} has no unique solution: {}'.format(*self.args)


def zeros(n=N):
    return np.full((n, n), Fraction(0), dtype=object)


def identity(n=N):
    m = zeros(n)
    for i in range(n):
        m[i, i] = Fraction(1)
    return m


def as_matrix(m):
    m = np.array(m, dtype=object)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DomainError(f'expected a square matrix, got shape {m.shape}')
    return np.vectorize(Fraction, otypes=[object])(m)


def bracket(a, b):
    return a @ b - b @ a


def is_antisymmetric(m):
    return bool((m == -m.T).all())


def apply(m, x):
    """m acting on an octonion in the standard basis"""
    return Octonion(tuple(m.dot(np.array(x.coeffs, dtype=object))))


def flat(m):
    return tuple(m.reshape(-1))


def unflat(v, n=N):
    return np.array(v, dtype=object).reshape(n, n)


def left_mult_matrix(a):
    """Matrix of x ↦ a·x; column j holds a·e_j."""
    m = zeros()
    for j in range(N):
        m[:, j] = multiply(a, E[j]).coeffs
    return m


def right_mult_matrix(a):
    m = zeros()
    for j in range(N):
        m[:, j] = multiply(E[j], a).coeffs
    return m


@dataclasses.dataclass(frozen=True, eq=False)
class LieBasis:
    members: tuple
    closed: bool = False

    @property
    def dim(self):
        return len(self.members)

    @property
    def n(self):
        return self.members[0].shape[0] if self.members else N

    def vectors(self):
        return [flat(m) for m in self.members]

    def contains(self, m):
        return linalg.in_span(self.vectors(), flat(m))

    def contains_all(self, other):
        if not other.members:
            return True
        return (linalg.rank(self.vectors() + other.vectors()) ==
                linalg.rank(self.vectors()))

    def coordinates(self, matrices):
        """Coordinates of each matrix in this basis (all must lie in the span)"""
        return linalg.solve_many(self.vectors(), [flat(m) for m in matrices])

    def bracket_closure_witness(self):
        """First pair of members whose bracket leaves the span, or None"""
        vectors = self.vectors()
        r = len(vectors)
        for (p, a), (q, b) in itertools.combinations(enumerate(self.members), 2):
            if linalg.rank(vectors + [flat(bracket(a, b))]) != r:
                return p, q
        return None


def lie_closure(gens):
    """Smallest bracket-closed span containing gens.

    Each generation brackets every pair that involves a member added in the
    previous generation; the independent ones (pivot columns, in insertion
    order) are appended.
    """
    gens = [as_matrix(g) for g in gens]
    if not gens:
        return LieBasis((), closed=True)
    shapes = {g.shape for g in gens}
    if len(shapes) != 1:
        raise DomainError(f'generators have different shapes {sorted(shapes)}')
    members = [gens[p] for p in linalg.independent_columns([flat(g) for g in gens])]
    done = 0
    for generation in range(MAX_GENERATIONS):
        candidates = [bracket(members[i], members[j])
                      for i, j in itertools.combinations(range(len(members)), 2)
                      if j >= done]
        combined = members + candidates
        pivots = linalg.independent_columns([flat(m) for m in combined])
        log.debug('generation %d: %d members, %d brackets, rank %d',
                  generation, len(members), len(candidates), len(pivots))
        if len(pivots) == len(members):
            return LieBasis(tuple(members), closed=True)
        done = len(members)
        members = [combined[p] for p in pivots]
    raise ClosureError(MAX_GENERATIONS, len(members))


def _system_columns(residual, unknowns):
    """Columns of the linear map residual(u), evaluated on each unknown"""
    return [residual(u) for u in unknowns]


def _matrix_unit(p, q):
    m = zeros()
    m[p, q] = Fraction(1)
    return m


def _derivation_residual(d):
    # D(e_i e_j) - D(e_i) e_j - e_i D(e_j), all 64 pairs stacked
    out = []
    images = [apply(d, E[k]) for k in range(N)]
    for i, j in itertools.product(range(N), repeat=2):
        lhs = apply(d, multiply(E[i], E[j]))
        rhs = multiply(images[i], E[j]) + multiply(E[i], images[j])
        out.extend((lhs - rhs).coeffs)
    return out


@functools.cache
def derivation_algebra():
    """Derivations of O: the null space of the 512x64 Leibniz system."""
    units = [_matrix_unit(p, q) for p, q in itertools.product(range(N), repeat=2)]
    columns = _system_columns(_derivation_residual, units)
    kernel = linalg.nullspace(linalg.columns_to_rows(columns), len(units))
    log.debug('derivation system 512x64, kernel dimension %d', len(kernel))
    return lie_closure([unflat(v) for v in kernel])


@functools.cache
def so8_closure():
    """The closure of the seven left multiplications by imaginary units"""
    basis = lie_closure([left_mult_matrix(E[i]) for i in range(1, N)])
    log.info('left-multiplication closure has dimension %d', basis.dim)
    return basis


def stabilizer_subalgebra(ambient, v):
    """{a in span(ambient) : a(v) = 0}"""
    if not v:
        return ambient
    columns = [apply(m, v).coeffs for m in ambient.members]
    kernel = linalg.nullspace(linalg.columns_to_rows(columns), ambient.dim)
    members = [sum((c * m for c, m in zip(coeffs, ambient.members)), zeros(ambient.n))
               for coeffs in kernel]
    return lie_closure(members)


# ---------------------------------------------------------------------------
# infinitesimal triality: a(xy) = a'(x) y + x a''(y)

# antisymmetric basis b_pq = E_pq - E_qp, p < q
ANTISYMMETRIC_INDEX = tuple(itertools.combinations(range(N), 2))


def antisymmetric_basis():
    return tuple(_matrix_unit(p, q) - _matrix_unit(q, p) for p, q in ANTISYMMETRIC_INDEX)


def antisymmetric_coordinates(m):
    return tuple(m[p, q] for p, q in ANTISYMMETRIC_INDEX)


def from_antisymmetric_coordinates(coords):
    return sum((c * b for c, b in zip(coords, antisymmetric_basis())), zeros())


@dataclasses.dataclass(frozen=True, eq=False)
class TrialityTriple:
    a: np.ndarray
    a_prime: np.ndarray
    a_dblprime: np.ndarray

    def residual_witness(self):
        """First basis pair (i, j) where the triality relation fails"""
        for i, j in itertools.product(range(N), repeat=2):
            lhs = apply(self.a, multiply(E[i], E[j]))
            rhs = (multiply(apply(self.a_prime, E[i]), E[j]) +
                   multiply(E[i], apply(self.a_dblprime, E[j])))
            if lhs != rhs:
                return i, j
        return None


def _pair_products(left, right):
    out = []
    for i, j in itertools.product(range(N), repeat=2):
        out.extend((multiply(left(i), right(j))).coeffs)
    return out


@functools.cache
def _triality_lhs():
    # 512x56 system in the coordinates of (a', a'') on the antisymmetric basis
    columns = []
    for b in antisymmetric_basis():
        columns.append(_pair_products(lambda i: apply(b, E[i]), lambda j: E[j]))
    for b in antisymmetric_basis():
        columns.append(_pair_products(lambda i: E[i], lambda j: apply(b, E[j])))
    return tuple(tuple(c) for c in columns)


def _triality_rhs(a):
    out = []
    for i, j in itertools.product(range(N), repeat=2):
        out.extend(apply(a, multiply(E[i], E[j])).coeffs)
    return out


def triality_solve(matrices):
    """Decompose several antisymmetric matrices with one elimination"""
    half = len(ANTISYMMETRIC_INDEX)
    matrices = [as_matrix(a) for a in matrices]
    for a in matrices:
        if a.shape != (N, N) or not is_antisymmetric(a):
            raise DomainError('triality needs antisymmetric 8x8 matrices')
    try:
        solutions = linalg.solve_many(
            _triality_lhs(), [_triality_rhs(a) for a in matrices])
    except (linalg.InconsistentSystem, linalg.Underdetermined) as e:
        raise TrialityViolation(len(matrices), e) from e
    return [TrialityTriple(a,
                           from_antisymmetric_coordinates(x[:half]),
                           from_antisymmetric_coordinates(x[half:]))
            for a, x in zip(matrices, solutions)]


def triality_decompose(a):
    return triality_solve([a])[0]


@functools.cache
def triality_maps():
    """θ: a ↦ a' and a ↦ a'' as 28x28 matrices in antisymmetric coordinates.

    Column r is the image of the r-th antisymmetric basis element.
    """
    triples = triality_solve(antisymmetric_basis())
    theta = np.array([antisymmetric_coordinates(t.a_prime) for t in triples],
                     dtype=object).T
    theta2 = np.array([antisymmetric_coordinates(t.a_dblprime) for t in triples],
                      dtype=object).T
    return theta, theta2


def conjugation_map():
    """σ(A) = K A K with K = diag(1, -1, ..., -1), in antisymmetric coordinates"""
    signs = [Fraction(-1) if p == 0 else Fraction(1) for p, q in ANTISYMMETRIC_INDEX]
    m = np.full((len(signs), len(signs)), Fraction(0), dtype=object)
    for r, s in enumerate(signs):
        m[r, r] = s
    return m


def bracket_preservation_witness(theta):
    """First antisymmetric basis pair where θ([a, b]) ≠ [θ(a), θ(b)]"""
    basis = antisymmetric_basis()
    images = [from_antisymmetric_coordinates(theta[:, r]) for r in range(len(basis))]
    for m, n in itertools.combinations(range(len(basis)), 2):
        coords = np.array(antisymmetric_coordinates(bracket(basis[m], basis[n])),
                          dtype=object)
        lhs = from_antisymmetric_coordinates(theta.dot(coords))
        rhs = bracket(images[m], images[n])
        if not (lhs == rhs).all():
            return m, n
    return None


def matrix_order(m, limit=6):
    ident = identity(m.shape[0])
    power = m
    for k in range(1, limit + 1):
        if (power == ident).all():
            return k
        power = power.dot(m)
    return None


def cube_deviation(m):
    """Entries (row, column) where m³ differs from the identity"""
    cube = m.dot(m).dot(m)
    ident = identity(m.shape[0])
    return [(r, c) for r, c in itertools.product(range(m.shape[0]), repeat=2)
            if cube[r, c] != ident[r, c]]


def triality_order_probe():
    """Report the orders of θ and of ρ = σ∘θ, and whether each cubes to the identity.

    θ alone is an involution in this normalisation; composing with the
    automorphism induced by octonion conjugation gives the order-three map.
    The result is reported, never asserted.
    """
    theta, _ = triality_maps()
    rho = conjugation_map().dot(theta)
    witness = {
        'theta_rank': linalg.rank(theta.tolist()),
        'theta_order': matrix_order(theta),
        'rho_order': matrix_order(rho),
    }
    theta_deviation = cube_deviation(theta)
    deviation = cube_deviation(rho)
    witness['theta_cubed_is_identity'] = not theta_deviation
    witness['theta_cubed_deviation'] = theta_deviation[:5]
    witness['rho_cubed_deviation'] = deviation[:5]
    status = Status.PASS if not deviation else Status.INDETERMINATE
    return Outcome(status, witness)


def fingerprint(basis):
    """sha256 of the canonical reduced row-echelon form of the span"""
    reduced, _ = linalg.rref(basis.vectors())
    text = ';'.join(','.join(str(x) for x in row) for row in reduced)
    return hashlib.sha256(text.encode()).hexdigest()
