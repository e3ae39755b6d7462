"""Dimension bookkeeping for groups, cosets, symmetric spaces and Shilov
boundaries, and the evaluation of the Spin(8)/U(4) coset split.

Exceptional dimensions are taken from the classification, nothing here
constructs E6 or D5.
"""
import itertools
import logging
import re
from fractions import Fraction

from . import roots
from .octonion import DomainError
from .report import Outcome, Status
from .roots import HALF, RootSet, dynkin_identify, format_root, root_axiom_check

log = logging.getLogger('octolab.dims')

OPERATIONS = (
    'coset_split_report',
    'group_dim',
    'symmetric_space_check',
    'shilov_check',
)

CLASSICAL = {
    'Spin': lambda n: n * (n - 1) // 2,
    'SO': lambda n: n * (n - 1) // 2,
    'O': lambda n: n * (n - 1) // 2,
    'SU': lambda n: n * n - 1,
    'U': lambda n: n * n,
    'Sp': lambda n: n * (2 * n + 1),
}

SERIES = {
    'A': lambda n: n * (n + 2),
    'B': lambda n: n * (2 * n + 1),
    'C': lambda n: n * (2 * n + 1),
    'D': lambda n: n * (2 * n - 1),
}

EXCEPTIONAL = {'G2': 14, 'F4': 52, 'E6': 78, 'E7': 133, 'E8': 248}

SPACES = {
    'S': lambda n: n,
    'RP': lambda n: n,
    'T': lambda n: n,
    'R': lambda n: n,
    'CP': lambda n: 2 * n,
    'C': lambda n: 2 * n,
    'HP': lambda n: 4 * n,
}

_CLASSICAL_RE = re.compile(r'(Spin|SO|SU|Sp|U|O)\((\d+)\)$')
_SERIES_RE = re.compile(r'([ABCD])_?(\d+)$')
_SPACE_RE = re.compile(r'(S|RP|T|R|CP|C|HP)\^?(\d+)$')
PRODUCT_SIGNS = 'x×'


def _unwrap(name):
    # drop parentheses around the whole name, (SU(2)xU(1)) -> SU(2)xU(1)
    while name.startswith('(') and name.endswith(')'):
        depth = 0
        for pos, char in enumerate(name):
            depth += {'(': 1, ')': -1}.get(char, 0)
            if depth == 0 and pos < len(name) - 1:
                return name
        name = name[1:-1]
    return name


def factors(name):
    """Split a product name at top-level 'x' or '×'"""
    name = _unwrap(re.sub(r'\s+', '', name))
    depth, start, out = 0, 0, []
    for pos, char in enumerate(name):
        depth += {'(': 1, ')': -1}.get(char, 0)
        if depth == 0 and char in PRODUCT_SIGNS:
            out.append(name[start:pos])
            start = pos + 1
    out.append(name[start:])
    return [_unwrap(f) for f in out if f]


def _simple_group_dim(factor, name):
    if factor == '1':
        return 0
    m = _CLASSICAL_RE.match(factor)
    if m:
        return CLASSICAL[m.group(1)](int(m.group(2)))
    m = _SERIES_RE.match(factor)
    if m:
        return SERIES[m.group(1)](int(m.group(2)))
    if factor in EXCEPTIONAL:
        return EXCEPTIONAL[factor]
    raise DomainError(f'unknown group {factor!r} in {name!r}')


def group_dim(name):
    """Dimension of a named compact group or a product of them.

    >>> group_dim('SU(2)xU(1)')
    4
    """
    parts = factors(name)
    if not parts:
        raise DomainError(f'unknown group {name!r}')
    return sum(_simple_group_dim(part, name) for part in parts)


def coset_dim(name):
    """dim G - dim H for 'G/H'; a bare group is read as G/1"""
    group, _, subgroup = name.partition('/')
    return group_dim(group) - (group_dim(subgroup) if subgroup else 0)


def space_dim(name):
    total = 0
    for factor in factors(name):
        m = _SPACE_RE.match(factor)
        if not m:
            raise DomainError(f'unknown space {factor!r} in {name!r}')
        total += SPACES[m.group(1)](int(m.group(2)))
    return total


# gauge group, symmetric space, the listed Ψ_force
SYMMETRIC_SPACES = (
    ('Spin(5)', 'Spin(5)/Spin(4)', 'S^4'),
    ('SU(3)', 'SU(3)/(SU(2)xU(1))', 'CP^2'),
    ('SU(2)', 'SU(2)/U(1)', 'S^2xS^2'),
    ('U(1)', 'U(1)', 'S^1xS^1xS^1xS^1'),
)


def symmetric_space_check():
    """One (gauge group, Outcome) per table row; a dimension mismatch is a
    discrepancy with the listed space, never a failure."""
    rows = []
    for group, coset, space in SYMMETRIC_SPACES:
        witness = {
            'coset': coset,
            'coset_dim': coset_dim(coset),
            'space': space,
            'space_dim': space_dim(space),
        }
        ok = witness['coset_dim'] == witness['space_dim']
        rows.append((group, Outcome(Status.PASS if ok else Status.DISCREPANCY, witness)))
    return rows


# name, coset, boundary, copies of the boundary
SHILOV_CASES = (
    ('E6', 'E6/(D5xU(1))', 'S^7xRP^1', 2),
    ('D5', 'D5/(D4xU(1))', 'S^7xRP^1', 1),
)


def shilov_check():
    cases = []
    for name, coset, boundary, copies in SHILOV_CASES:
        real = coset_dim(coset)
        witness = {
            'coset': coset,
            'real_dim': real,
            'complex_dim': real // 2,
            'boundary': boundary,
            'copies': copies,
            'boundary_dim': copies * space_dim(boundary),
        }
        ok = real % 2 == 0 and real // 2 == witness['boundary_dim']
        cases.append((name, Outcome.of(ok, witness)))
    positive = len(roots.positive_roots(roots.d4_roots()))
    coset = coset_dim('Spin(8)/U(4)')
    cases.append(('Spin(8)/U(4)', Outcome.of(
        coset == positive, {'coset_dim': coset, 'positive_roots': positive})))
    return cases


def dimension_identities():
    """(name, lhs, rhs) for the dimension identities used in the text"""
    return [
        ('U(4) = Spin(6) x U(1)', group_dim('U(4)'), group_dim('Spin(6)xU(1)')),
        ('Spin(6) conformal', group_dim('Spin(6)'), 15),
        ('Spin(5) de Sitter', group_dim('Spin(5)'), 10),
        ('Spin(6) = Spin(5) + 4 + 1', group_dim('Spin(6)'), group_dim('Spin(5)') + 4 + 1),
        ('Spin(8) - U(4)', coset_dim('Spin(8)/U(4)'), 12),
        ('oriented 2-planes in R^8', coset_dim('Spin(8)/U(4)'), 2 * (8 - 2)),
        ('Spin(7) - G2', group_dim('Spin(7)') - group_dim('G2'), 7),
        ('Spin(8) - Spin(7)', group_dim('Spin(8)') - group_dim('Spin(7)'), 7),
        ('R^8 = C^4', space_dim('R^8'), space_dim('C^4')),
    ]


# ---------------------------------------------------------------------------
# the Spin(8)/U(4) split of the 12 positive roots

def _unit(m):
    return tuple(Fraction(int(n == m)) for n in range(4))


HALF_SUMS = tuple(tuple(HALF * s for s in (1,) + signs)
                  for signs in itertools.product((1, -1), repeat=3))

# claimed group, its root type (None if abelian), members, declared Cartan
COSET_BLOCKS = (
    ('SU(3)', 'A2', HALF_SUMS, (HALF_SUMS[0], HALF_SUMS[-1])),
    ('SU(2)', 'A1', (_unit(1), _unit(2), _unit(3)), (_unit(2),)),
    ('U(1)', None, (_unit(0),), (_unit(0),)),
)


def evaluate_block(group, root_type, members, cartan):
    """pass if the negation-extended block is the root system of the claimed
    group, indeterminate if it is not but the block size is the group's
    dimension, discrepancy otherwise."""
    block = RootSet(members)
    extended = block.with_negatives()
    axioms = root_axiom_check(extended)
    try:
        found = str(dynkin_identify(extended))
    except roots.ClassificationError:
        found = None
    witness = {
        'members': [format_root(v) for v in members],
        'declared_cartan': [format_root(v) for v in cartan],
        'angle_spectrum': block.angle_spectrum(),
        'root_axiom_failures': axioms.witness,
        'root_type': found,
        'expected_root_type': root_type,
        'group_dim': group_dim(group),
    }
    if root_type is not None and found == root_type:
        return Outcome(Status.PASS, witness)
    if len(members) == group_dim(group):
        return Outcome(Status.INDETERMINATE, witness)
    return Outcome(Status.DISCREPANCY, witness)


def coset_split_report():
    """(group, Outcome) for each block of the 8 + 3 + 1 split"""
    return [(group, evaluate_block(group, root_type, members, cartan))
            for group, root_type, members, cartan in COSET_BLOCKS]


def positive_split():
    """The 12 positive roots as the union of the three blocks"""
    return [v for _, _, members, _ in COSET_BLOCKS for v in members]
