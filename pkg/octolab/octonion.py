"""Exact octonion and complexified-octonion arithmetic.

All scalars are fractions.Fraction. The multiplication table is fixed by the
seven cyclic triples in TRIPLES: e_i e_j = e_k whenever (i, j, k) is a cyclic
rotation of one of them, and e_j e_i = -e_k.

Also here: the basis-to-fermion label map, the amplitude split between the
neutrino line and the charged sphere, and the literal codec used by the
command line (``3/5+4/5e4``).
"""
from __future__ import annotations

import dataclasses
import enum
import logging
import math
import re
from fractions import Fraction

log = logging.getLogger('octolab.octonion')

OPERATIONS = (
    'multiply',
    'conjugate',
    'inner',
    'associator',
    'commutator',
    'bioct_multiply',
    'zero_divisor_witness',
    'fermion_label',
    'split_amplitude',
)

# quadratic-residue triples; (1, 2, 4) spans the canonical quaternions
TRIPLES = ((1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 7),
           (5, 6, 1), (6, 7, 2), (7, 1, 3))


class DomainError(ValueError):
    """An argument lies outside the domain of an operation"""


class NormalizationError(DomainError):
    def __str__(self):
        return 'expected an exactly unit-norm octonion, got norm {}'.format(*self.args)


class ParseError(ValueError):
    def __init__(self, literal, position, reason):
        super().__init__(literal, position, reason)
        self.literal = literal
        self.position = position
        self.reason = reason

    def __str__(self):
        return (f'cannot parse octonion literal {self.literal!r} at '
                f'position {self.position}: {self.reason}')


def _build_table():
    # table[i][j] = (k, sign) with e_i e_j = sign * e_k, index 0 is the unit
    table = [[None] * 8 for _ in range(8)]
    for i in range(8):
        table[0][i] = (i, 1)
        table[i][0] = (i, 1)
    for i in range(1, 8):
        table[i][i] = (0, -1)
    for a, b, c in TRIPLES:
        for i, j, k in ((a, b, c), (b, c, a), (c, a, b)):
            table[i][j] = (k, 1)
            table[j][i] = (k, -1)
    return tuple(tuple(row) for row in table)

MULTIPLICATION_TABLE = _build_table()


def _exact(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise DomainError(f'floating point coefficient {value!r} is not exact')
    return Fraction(value)


@dataclasses.dataclass(frozen=True)
class Octonion:
    """An octonion c0 + c1 e1 + ... + c7 e7 with rational coefficients.

    Arithmetic operators are overloaded: ``a * b`` is the octonion product
    when both sides are octonions and scaling when one side is a number.

    >>> E[1] * E[2] == E[4]
    True
    >>> str(Fraction(3, 5) + Fraction(4, 5) * E[4])
    '3/5+4/5e4'
    """
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(_exact(c) for c in self.coeffs)
        if len(coeffs) != 8:
            raise DomainError(f'an octonion has 8 coefficients, got {len(coeffs)}')
        object.__setattr__(self, 'coeffs', coeffs)

    @classmethod
    def _make(cls, coeffs):
        # skip coercion, used in the inner loops
        obj = object.__new__(cls)
        object.__setattr__(obj, 'coeffs', tuple(coeffs))
        return obj

    @classmethod
    def real(cls, value):
        return cls((value, 0, 0, 0, 0, 0, 0, 0))

    @classmethod
    def from_imaginary(cls, imag):
        imag = tuple(imag)
        if len(imag) != 7:
            raise DomainError(f'expected 7 imaginary coefficients, got {len(imag)}')
        return cls((0,) + imag)

    @property
    def real_part(self):
        return self.coeffs[0]

    @property
    def imaginary(self):
        return self.coeffs[1:]

    @property
    def imaginary_part(self):
        return Octonion._make((Fraction(0),) + self.coeffs[1:])

    def is_real(self):
        return not any(self.coeffs[1:])

    def is_imaginary(self):
        return self.coeffs[0] == 0

    def support(self):
        return tuple(k for k, c in enumerate(self.coeffs) if c)

    def __bool__(self):
        return any(self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Octonion._make(a + b for a, b in zip(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Octonion._make(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        return -self + other

    def __neg__(self):
        return Octonion._make(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, Octonion):
            return multiply(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / other)
        return NotImplemented

    def scale(self, factor):
        factor = _exact(factor)
        return Octonion._make(factor * c for c in self.coeffs)

    def conjugate(self):
        return conjugate(self)

    def norm(self):
        return norm(self)

    def __str__(self):
        return format_octonion(self)


def _coerce(value):
    if isinstance(value, Octonion):
        return value
    if isinstance(value, (int, Fraction)):
        return Octonion.real(value)
    return NotImplemented


ZERO = Octonion.real(0)
ONE = Octonion.real(1)
# E[0] is the unit, E[1]..E[7] the imaginary units
E = tuple(Octonion.real(1) if k == 0 else
          Octonion._make(Fraction(int(i == k)) for i in range(8))
          for k in range(8))


def multiply(a, b):
    """The octonion product a·b (bilinear, alternative, not associative)."""
    out = [Fraction(0)] * 8
    table = MULTIPLICATION_TABLE
    bcoeffs = [(j, y) for j, y in enumerate(b.coeffs) if y]
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        row = table[i]
        for j, y in bcoeffs:
            k, sign = row[j]
            if sign > 0:
                out[k] += x * y
            else:
                out[k] -= x * y
    return Octonion._make(out)


def conjugate(a):
    c = a.coeffs
    return Octonion._make((c[0],) + tuple(-x for x in c[1:]))


def inner(a, b):
    """Re(a·conjugate(b)); in the standard basis this is the dot product."""
    return sum((x * y for x, y in zip(a.coeffs, b.coeffs)), Fraction(0))


def norm(a):
    return inner(a, a)


def associator(x, y, z):
    return multiply(multiply(x, y), z) - multiply(x, multiply(y, z))


def commutator(x, y):
    return multiply(x, y) - multiply(y, x)


def is_unit(a):
    return norm(a) == 1


def require_unit(a):
    n = norm(a)
    if n != 1:
        raise NormalizationError(n)
    return a


# ---------------------------------------------------------------------------
# complexified octonions C ⊗ O

@dataclasses.dataclass(frozen=True)
class ComplexRational:
    """re + i·im with exact rational parts (values of the bioctonion form N)"""
    re: Fraction
    im: Fraction = Fraction(0)

    def __add__(self, other):
        return ComplexRational(self.re + other.re, self.im + other.im)

    def __mul__(self, other):
        return ComplexRational(self.re * other.re - self.im * other.im,
                               self.re * other.im + self.im * other.re)

    def __bool__(self):
        return bool(self.re or self.im)

    def __str__(self):
        if not self.im:
            return str(self.re)
        sign = '-' if self.im < 0 else '+'
        return f'{self.re}{sign}{abs(self.im)}i'


@dataclasses.dataclass(frozen=True)
class BiOctonion:
    """re + i·im where i is a commuting imaginary unit and re, im are octonions"""
    re: Octonion
    im: Octonion = ZERO

    def __mul__(self, other):
        return bioct_multiply(self, other)

    def __add__(self, other):
        return BiOctonion(self.re + other.re, self.im + other.im)

    def __neg__(self):
        return BiOctonion(-self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __str__(self):
        return f'({self.re})+i({self.im})'


def bioct_multiply(a, b):
    """(p + iq)(r + is) = (pr - qs) + i(ps + qr)"""
    p, q, r, s = a.re, a.im, b.re, b.im
    return BiOctonion(multiply(p, r) - multiply(q, s),
                      multiply(p, s) + multiply(q, r))


def quadratic_form(z):
    """N(z) = Σ (re_k + i·im_k)², the complex bilinear extension of the norm"""
    re = sum((x * x - y * y for x, y in zip(z.re.coeffs, z.im.coeffs)), Fraction(0))
    im = 2 * sum((x * y for x, y in zip(z.re.coeffs, z.im.coeffs)), Fraction(0))
    return ComplexRational(re, im)


def zero_divisor_witness():
    """Return (1 + i·e1, 1 - i·e1): both nonzero, null for N, with product 0."""
    u = BiOctonion(ONE, E[1])
    v = BiOctonion(ONE, -E[1])
    product = bioct_multiply(u, v)
    assert not product, product
    return u, v


# the split-signature real form sitting inside C ⊗ O: the quaternions on the
# triple (2, 3, 5) stay real, their orthogonal complement is multiplied by i
SPLIT_REAL_SUPPORT = (0, 2, 3, 5)
SPLIT_IMAGINARY_SUPPORT = (1, 4, 6, 7)


def split_octonion_basis():
    real = [BiOctonion(E[k]) for k in SPLIT_REAL_SUPPORT]
    imag = [BiOctonion(ZERO, E[k]) for k in SPLIT_IMAGINARY_SUPPORT]
    return tuple(real + imag)


def in_split_form(z):
    return (set(z.re.support()) <= set(SPLIT_REAL_SUPPORT) and
            set(z.im.support()) <= set(SPLIT_IMAGINARY_SUPPORT))


def split_octonion_null_vector():
    """A nonzero split octonion with N = 0, the first half of the witness pair"""
    u, _ = zero_divisor_witness()
    assert in_split_form(u) and not quadratic_form(u)
    return u


# ---------------------------------------------------------------------------
# fermion labels

class Helicity(enum.Enum):
    WEYL = 'Weyl'
    DIRAC = 'Dirac'


class Particle(enum.Enum):
    E_NEUTRINO = 'e-neutrino'
    RED_UP = 'red up quark'
    GREEN_UP = 'green up quark'
    BLUE_UP = 'blue up quark'
    ELECTRON = 'electron'
    RED_DOWN = 'red down quark'
    GREEN_DOWN = 'green down quark'
    BLUE_DOWN = 'blue down quark'


# basis index -> particle, as tabulated (note e6 is the blue up quark)
FERMION_TABLE = {
    0: Particle.E_NEUTRINO,
    1: Particle.RED_UP,
    2: Particle.GREEN_UP,
    6: Particle.BLUE_UP,
    4: Particle.ELECTRON,
    3: Particle.RED_DOWN,
    5: Particle.GREEN_DOWN,
    7: Particle.BLUE_DOWN,
}


@dataclasses.dataclass(frozen=True)
class FermionLabel:
    basis_index: int
    name: Particle
    helicity_class: Helicity


def fermion_label(index):
    if isinstance(index, bool) or not isinstance(index, int) or not 0 <= index <= 7:
        raise DomainError(f'basis index must be an integer in 0..7, got {index!r}')
    helicity = Helicity.WEYL if index == 0 else Helicity.DIRAC
    return FermionLabel(index, FERMION_TABLE[index], helicity)


# ---------------------------------------------------------------------------
# amplitude split |α_ν|² + r² = 1

def rational_sqrt(q):
    """Exact square root of a nonnegative rational, or None if irrational"""
    q = Fraction(q)
    if q < 0:
        return None
    num, den = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if num * num == q.numerator and den * den == q.denominator:
        return Fraction(num, den)
    return None


@dataclasses.dataclass(frozen=True)
class AmplitudeSplit:
    nu_amplitude: Fraction
    r_squared: Fraction
    direction: Octonion | None       # None when r = 0 (pure neutrino)
    direction_is_unit: bool = True   # False when r is irrational

    @property
    def r(self):
        return rational_sqrt(self.r_squared)


def split_amplitude(o):
    require_unit(o)
    c0 = o.real_part
    nu = abs(c0)
    r_squared = 1 - c0 * c0
    if r_squared == 0:
        return AmplitudeSplit(nu, r_squared, None)
    imag = o.imaginary_part
    r = rational_sqrt(r_squared)
    if r is None:
        log.debug('charged radius of %s is irrational, r² = %s', o, r_squared)
        return AmplitudeSplit(nu, r_squared, imag, direction_is_unit=False)
    return AmplitudeSplit(nu, r_squared, imag / r)


# ---------------------------------------------------------------------------
# literal codec: term(±term)*, term = rational[e1..e7]?

_SIGN_RE = re.compile(r'[+-]')
_RATIONAL_RE = re.compile(r'(\d+)(?:/(\d+))?')
_UNIT_RE = re.compile(r'e([1-7])')


def parse_octonion(literal):
    """Parse ``c0+c1e1+...`` into an Octonion; the inverse of format_octonion.

    >>> parse_octonion('3/5+4/5e4').coeffs[4]
    Fraction(4, 5)
    """
    if not isinstance(literal, str) or not literal:
        raise ParseError(literal, 0, 'empty literal')
    coeffs = [Fraction(0)] * 8
    pos = 0
    first = True
    while pos < len(literal):
        start = pos
        sign = 1
        m = _SIGN_RE.match(literal, pos)
        if m:
            sign = -1 if m.group() == '-' else 1
            pos = m.end()
        elif not first:
            raise ParseError(literal, pos, "expected '+' or '-'")
        value = Fraction(1)
        m = _RATIONAL_RE.match(literal, pos)
        have_number = m is not None
        if m:
            if m.group(2) is not None and int(m.group(2)) == 0:
                raise ParseError(literal, m.start(2), 'zero denominator')
            value = Fraction(int(m.group(1)), int(m.group(2) or 1))
            pos = m.end()
        index = 0
        m = _UNIT_RE.match(literal, pos)
        if m:
            index = int(m.group(1))
            pos = m.end()
        elif not have_number:
            raise ParseError(literal, pos, 'expected a rational or a unit e1..e7')
        if pos == start:
            raise ParseError(literal, pos, 'empty term')
        coeffs[index] += sign * value
        first = False
    return Octonion._make(coeffs)


def format_octonion(a):
    terms = []
    for k, c in enumerate(a.coeffs):
        if not c:
            continue
        if k == 0:
            term = str(c)
        elif c == 1:
            term = f'e{k}'
        elif c == -1:
            term = f'-e{k}'
        else:
            term = f'{c}e{k}'
        if terms and not term.startswith('-'):
            term = '+' + term
        terms.append(term)
    return ''.join(terms) or '0'
