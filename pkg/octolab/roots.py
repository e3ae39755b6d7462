"""Root systems in quaternion coordinates.

Roots are 4-tuples of Fractions over the basis {1, i, j, k}. The D4 system
is the set of 24 Hurwitz unit quaternions; all of them have length 1, which
Cartan matrices do not see.
"""
import dataclasses
import itertools
import logging
from fractions import Fraction

import numpy as np

from .octonion import DomainError
from .report import Outcome, Status

log = logging.getLogger('octolab.roots')

OPERATIONS = (
    'd4_roots',
    'root_axiom_check',
    'dynkin_identify',
)

HALF = Fraction(1, 2)


class ClassificationError(ValueError):
    pass


def _vec(*coords):
    return tuple(Fraction(c) for c in coords)


def dot(a, b):
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def neg(a):
    return tuple(-x for x in a)


def reflect(beta, alpha):
    """s_α(β) = β - 2⟨β,α⟩/⟨α,α⟩ α"""
    c = 2 * dot(beta, alpha) / dot(alpha, alpha)
    return tuple(b - c * a for b, a in zip(beta, alpha))


def format_root(v):
    names = ('1', 'i', 'j', 'k')
    terms = []
    for c, name in zip(v, names):
        if not c:
            continue
        sign = '-' if c < 0 else '+'
        size = abs(c)
        if name == '1':
            terms.append(f'{sign}{size}')
        else:
            terms.append(f'{sign}{name}' if size == 1 else f'{sign}{size}{name}')
    return ''.join(terms).lstrip('+') or '0'


@dataclasses.dataclass(frozen=True)
class RootSet:
    vectors: tuple
    full: bool = False      # flagged as a complete root system

    def __post_init__(self):
        object.__setattr__(self, 'vectors', tuple(tuple(Fraction(c) for c in v)
                                                  for v in self.vectors))

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def as_set(self):
        return frozenset(self.vectors)

    def with_negatives(self):
        out = list(self.vectors)
        for v in self.vectors:
            if neg(v) not in out:
                out.append(neg(v))
        return RootSet(tuple(out), full=True)

    def angle_spectrum(self):
        return sorted({dot(a, b) for a, b in itertools.combinations(self.vectors, 2)})


def d4_roots():
    axes = [_vec(*(s if n == m else 0 for n in range(4)))
            for m in range(4) for s in (1, -1)]
    halves = [tuple(HALF * s for s in signs)
              for signs in itertools.product((1, -1), repeat=4)]
    return RootSet(tuple(axes + halves), full=True)


def root_axiom_check(rs):
    """Root-system axioms: nonzero, negation closed, reflection closed,
    integral Cartan numbers and reduced (only ±α proportional to α)."""
    if not len(rs):
        raise DomainError('empty root set')
    roots = rs.as_set()
    witness = {}
    zero = [v for v in rs if not any(v)]
    if zero:
        witness['zero'] = zero[0]
    missing = [v for v in rs if neg(v) not in roots]
    if missing:
        witness['negation'] = missing[0]
    for alpha, beta in itertools.product(rs.vectors, repeat=2):
        if not any(alpha):
            continue
        number = 2 * dot(beta, alpha) / dot(alpha, alpha)
        if number.denominator != 1 and 'integrality' not in witness:
            witness['integrality'] = (alpha, beta, number)
        if reflect(beta, alpha) not in roots and 'reflection' not in witness:
            witness['reflection'] = (alpha, beta, reflect(beta, alpha))
        if alpha != beta and alpha != neg(beta) and dot(alpha, beta) ** 2 == \
                dot(alpha, alpha) * dot(beta, beta) and 'reduced' not in witness:
            witness['reduced'] = (alpha, beta)
    return Outcome.of(not witness, witness or None)


def is_positive(v):
    """Lexicographic: the first nonzero coordinate is positive"""
    for c in v:
        if c:
            return c > 0
    return False


def positive_roots(rs):
    return [v for v in rs if is_positive(v)]


def simple_roots(rs):
    """Positive roots that are not the sum of two positive roots"""
    positive = positive_roots(rs)
    sums = {tuple(x + y for x, y in zip(a, b))
            for a, b in itertools.combinations(positive, 2)}
    return sorted((v for v in positive if v not in sums), reverse=True)


def cartan_matrix(simple):
    n = len(simple)
    a = np.zeros((n, n), dtype=int)
    for i, j in itertools.product(range(n), repeat=2):
        value = 2 * dot(simple[i], simple[j]) / dot(simple[j], simple[j])
        if value.denominator != 1:
            raise ClassificationError(f'non-integral Cartan entry {value}')
        a[i, j] = int(value)
    return a


# |Φ| per irreducible type
def root_count(series, rank):
    return {
        'A': rank * (rank + 1),
        'B': 2 * rank * rank,
        'C': 2 * rank * rank,
        'D': 2 * rank * (rank - 1),
        'E': {6: 72, 7: 126, 8: 240}.get(rank, 0),
        'F': 48,
        'G': 12,
    }[series]


def _components(a):
    n = a.shape[0]
    seen, components = set(), []
    for start in range(n):
        if start in seen:
            continue
        stack, component = [start], []
        seen.add(start)
        while stack:
            i = stack.pop()
            component.append(i)
            for j in range(n):
                if j not in seen and a[i, j]:
                    seen.add(j)
                    stack.append(j)
        components.append(sorted(component))
    return components


def _identify_component(a, lengths):
    n = a.shape[0]
    if n == 1:
        return 'A', 1
    bonds = {(i, j): a[i, j] * a[j, i] for i, j in itertools.combinations(range(n), 2)
             if a[i, j]}
    if n - 1 != len(bonds):
        raise ClassificationError('Dynkin graph has a cycle')
    degree = [sum(1 for edge in bonds if i in edge) for i in range(n)]
    multiplicities = sorted(bonds.values())
    if multiplicities[-1] == 3:
        if n != 2:
            raise ClassificationError('triple bond outside rank 2')
        return 'G', 2
    if multiplicities[-1] == 2:
        if max(degree) > 2 or multiplicities.count(2) > 1:
            raise ClassificationError('unknown doubly-laced diagram')
        (i, j), = [edge for edge, m in bonds.items() if m == 2]
        ends = [k for k in range(n) if degree[k] == 1]
        if n == 2:
            return 'B', 2
        if i not in ends and j not in ends:
            if n == 4:
                return 'F', 4
            raise ClassificationError('double bond in the middle of a long chain')
        end, inner = (i, j) if i in ends else (j, i)
        return ('B', n) if lengths[end] < lengths[inner] else ('C', n)
    if max(degree) <= 2:
        return 'A', n
    centre, = [k for k in range(n) if degree[k] == 3]
    arms = []
    for start in (k for k in range(n) if a[centre, k] and k != centre):
        length, previous, current = 1, centre, start
        while True:
            following = [k for k in range(n)
                         if a[current, k] and k not in (current, previous)]
            if not following:
                break
            previous, current = current, following[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return 'D', n
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return 'E', n
    raise ClassificationError(f'unknown branched diagram with arms {arms}')


@dataclasses.dataclass(frozen=True)
class DynkinType:
    components: tuple       # ((series, rank), ...) sorted

    @property
    def rank(self):
        return sum(r for _, r in self.components)

    def __str__(self):
        return 'x'.join(f'{s}{r}' for s, r in self.components) or '0'


def dynkin_identify(rs):
    if not root_axiom_check(rs):
        raise ClassificationError('not a root system')
    simple = simple_roots(rs)
    a = cartan_matrix(simple)
    components = []
    for indices in _components(a):
        sub = a[np.ix_(indices, indices)]
        lengths = [dot(simple[i], simple[i]) for i in indices]
        components.append(_identify_component(sub, lengths))
    components.sort()
    expected = sum(root_count(s, r) for s, r in components)
    if expected != len(rs):
        raise ClassificationError(f'{len(rs)} roots do not match {components}')
    return DynkinType(tuple(components))


def weyl_orbit(root, rs):
    root = tuple(Fraction(c) for c in root)
    orbit, frontier = {root}, [root]
    while frontier:
        beta = frontier.pop()
        for alpha in rs:
            image = reflect(beta, alpha)
            if image not in orbit:
                orbit.add(image)
                frontier.append(image)
    return orbit


# small reference systems
A1_EXAMPLE = RootSet((_vec(0, 1, 0, 0), _vec(0, -1, 0, 0)), full=True)
A2_EXAMPLE = RootSet((
    _vec(1, 0, 0, 0), _vec(-1, 0, 0, 0),
    (-HALF, HALF, HALF, HALF), (HALF, -HALF, -HALF, -HALF),
    (HALF, HALF, HALF, HALF), (-HALF, -HALF, -HALF, -HALF),
), full=True)
