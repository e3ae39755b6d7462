"""The verification suite.

Every check is a function of a Context returning an Outcome, registered with
its id, reference, module and the operation it exercises. A check that raises
is recorded as a failure; the run goes on.
"""
import dataclasses
import fnmatch
import functools
import itertools
import logging
import sys
from fractions import Fraction

from . import (
    calibrations,
    catalog,
    dims,
    heisenberg,
    linalg,
    liegen,
    octonion,
    roots,
    xproduct,
)
from .commands import UsageError
from .heisenberg import HeisenbergElement, h_bracket, h_dagger, h_multiply
from .octonion import (
    E,
    ONE,
    ZERO,
    TRIPLES,
    BiOctonion,
    DomainError,
    Octonion,
    ParseError,
    associator,
    bioct_multiply,
    commutator,
    conjugate,
    format_octonion,
    inner,
    multiply,
    norm,
    parse_octonion,
    quadratic_form,
)
from .report import CheckDescriptor, Outcome, Status, VerificationReport
from .xproduct import PathPair

log = logging.getLogger('octolab.checks')

OPERATIONS = (
    'run_verification',
    'parse_octonion',
)

# report module name -> python modules exporting its OPERATIONS
MODULES = {
    'algebra-core': (octonion,),
    'xproduct': (xproduct,),
    'liegen': (liegen,),
    'calibrations': (calibrations,),
    'roots-dims': (roots, dims),
    'heisenberg': (heisenberg,),
    'cli': (sys.modules[__name__],),
}
MODULE_ORDER = tuple(MODULES)

PLUMBING = 'plumbing'


@dataclasses.dataclass(frozen=True)
class Check:
    id: str
    paper_ref: str
    module: str
    operation: str
    func: object


REGISTRY = {}


def register(id, paper_ref, module, operation):
    def decorate(func):
        if id in REGISTRY:
            raise ValueError(f'duplicate check id {id!r}')
        if module not in MODULES:
            raise ValueError(f'unknown module {module!r} for {id!r}')
        REGISTRY[id] = Check(id, paper_ref, module, operation, func)
        return func
    return decorate


@dataclasses.dataclass
class Context:
    config: object

    @functools.cached_property
    def points(self):
        return catalog.load_points(self.config.catalog_literals())

    def seed(self, offset):
        # each check draws from its own stream so selection does not move samples
        return self.config['sampling.seed'] + offset

    def count(self, name):
        return self.config[f'sampling.{name}']


def first(iterable):
    """First element of iterable, None if empty"""
    return next(iter(iterable), None)


# ---------------------------------------------------------------------------
# algebra-core

@register('eq1.labels.table', 'Eq. 1', 'algebra-core', 'fermion_label')
def check_labels(ctx):
    labels = [octonion.fermion_label(k) for k in range(8)]
    names = {label.name for label in labels}
    weyl = [label.basis_index for label in labels
            if label.helicity_class is octonion.Helicity.WEYL]
    try:
        octonion.fermion_label(8)
        out_of_range = False
    except DomainError:
        out_of_range = True
    ok = (len(names) == 8 and weyl == [0] and
          labels[4].name is octonion.Particle.ELECTRON and
          labels[0].name is octonion.Particle.E_NEUTRINO and
          labels[7].name is octonion.Particle.BLUE_DOWN and out_of_range)
    return Outcome.of(ok, {k: label.name for k, label in enumerate(labels)})


def _amplitude_consistent(s):
    if s.nu_amplitude ** 2 + s.r_squared != 1:
        return False
    return s.direction is None or not s.direction_is_unit or norm(s.direction) == 1


@register('eq2.amplitude.split', 'Eq. 2', 'algebra-core', 'split_amplitude')
def check_amplitude(ctx):
    example = octonion.split_amplitude(parse_octonion('3/5+4/5e4'))
    ok = (example.nu_amplitude == Fraction(3, 5) and
          example.r_squared == Fraction(16, 25) and example.direction == E[4])
    pure = octonion.split_amplitude(ONE)
    ok = ok and pure.direction is None and pure.r_squared == 0
    bad = first(p for p in ctx.points if not _amplitude_consistent(octonion.split_amplitude(p)))
    try:
        octonion.split_amplitude(parse_octonion('1+e1'))
        ok = False
    except octonion.NormalizationError:
        pass
    return Outcome.of(ok and bad is None, {'example': example, 'violation': bad})


@register('s2.octonion.basis_table', '§2 basis of the octonions', 'algebra-core', 'multiply')
def check_basis_table(ctx):
    bad = []
    for k in range(8):
        if multiply(ONE, E[k]) != E[k] or multiply(E[k], ONE) != E[k]:
            bad.append(('identity', k))
    for k in range(1, 8):
        if multiply(E[k], E[k]) != -ONE:
            bad.append(('square', k))
    for a, b, c in TRIPLES:
        for i, j, k in ((a, b, c), (b, c, a), (c, a, b)):
            if multiply(E[i], E[j]) != E[k] or multiply(E[j], E[i]) != -E[k]:
                bad.append(('triple', (i, j, k)))
    return Outcome.of(not bad, {'e1e2': multiply(E[1], E[2]), 'violations': bad})


@register('s2.octonion.composition', '§2 basis of the octonions', 'algebra-core', 'multiply')
def check_composition(ctx):
    n = ctx.count('composition_pairs')
    a = catalog.random_octonions(n, ctx.seed(1))
    b = catalog.random_octonions(n, ctx.seed(2))
    bad = first((x, y) for x, y in zip(a, b) if norm(x * y) != norm(x) * norm(y))
    return Outcome.of(bad is None, {'pairs': n, 'violation': bad})


@register('s2.octonion.inverse', '§2 basis of the octonions', 'algebra-core', 'multiply')
def check_right_inverse(ctx):
    n = ctx.count('alternativity_pairs')
    a = catalog.random_octonions(n, ctx.seed(3))
    X = catalog.random_octonions(n, ctx.seed(4))
    bad = first((x, y) for x, y in zip(a, X)
                if multiply(multiply(x, y), conjugate(y)) != x * norm(y))
    return Outcome.of(bad is None, {'pairs': n, 'violation': bad})


@register('s2.octonion.alternativity', '§4 nonassociativity', 'algebra-core', 'associator')
def check_alternativity(ctx):
    n = ctx.count('alternativity_pairs')
    a = catalog.random_octonions(n, ctx.seed(5))
    b = catalog.random_octonions(n, ctx.seed(6))
    bad = first((x, y) for x, y in zip(a, b)
                if associator(x, x, y) or associator(x, y, y))
    return Outcome.of(bad is None, {'pairs': n, 'violation': bad})


@register('s2.octonion.associator_antisymmetry', '§4 nonassociativity', 'algebra-core', 'associator')
def check_associator_antisymmetry(ctx):
    bad = None
    for i, j, k in itertools.product(range(1, 8), repeat=3):
        value = associator(E[i], E[j], E[k])
        if (associator(E[j], E[i], E[k]) != -value or
                associator(E[i], E[k], E[j]) != -value):
            bad = (i, j, k)
            break
    witness = associator(E[1], E[2], E[3])
    ok = (bad is None and witness and not associator(E[1], E[2], E[4]) and
          not associator(ONE, E[2], E[3]))
    return Outcome.of(ok, {'e1,e2,e3': witness, 'violation': bad})


@register('s4.octonion.conjugation', '§4 octonion inner product', 'algebra-core', 'conjugate')
def check_conjugation(ctx):
    bad = first((i, j) for i, j in itertools.product(range(8), repeat=2)
                if conjugate(multiply(E[i], E[j])) !=
                multiply(conjugate(E[j]), conjugate(E[i])))
    points = ctx.points
    involution = all(conjugate(conjugate(p)) == p for p in points)
    ok = bad is None and involution and conjugate(E[5]) == -E[5]
    return Outcome.of(ok, {'violation': bad})


@register('s4.octonion.inner', '§4 octonion inner product', 'algebra-core', 'inner')
def check_inner(ctx):
    n = ctx.count('alternativity_pairs')
    a = catalog.random_octonions(n, ctx.seed(7))
    b = catalog.random_octonions(n, ctx.seed(8))
    bad = first((x, y) for x, y in zip(a, b)
                if inner(x, y) != multiply(x, conjugate(y)).real_part or
                inner(x, y) != inner(y, x) or (x and norm(x) <= 0))
    example = inner(ONE + E[4], ONE - E[4])
    return Outcome.of(bad is None and example == 0, {'(1+e4,1-e4)': example})


@register('eq9.commutator.imaginary', 'Eq. 9', 'algebra-core', 'commutator')
def check_commutator(ctx):
    bad = first((i, j) for i, j in itertools.product(range(8), repeat=2)
                if not commutator(E[i], E[j]).is_imaginary() or
                commutator(E[i], E[j]) != -commutator(E[j], E[i]))
    example = commutator(E[1], E[2])
    ok = bad is None and example == 2 * E[4] and not commutator(ONE, E[5])
    return Outcome.of(ok, {'[e1,e2]': example, 'violation': bad})


def _random_bioctonions(count, seed):
    re = catalog.random_octonions(count, seed, height=5)
    im = catalog.random_octonions(count, seed + 1000, height=5)
    return [BiOctonion(x, y) for x, y in zip(re, im)]


@register('s3.bioctonion.composition', '§3 complexified octonions', 'algebra-core', 'bioct_multiply')
def check_bioctonion_composition(ctx):
    n = ctx.count('bioctonion_pairs')
    z = _random_bioctonions(n, ctx.seed(9))
    w = _random_bioctonions(n, ctx.seed(10))
    bad = first((x, y) for x, y in zip(z, w)
                if quadratic_form(x * y) != quadratic_form(x) * quadratic_form(y))
    return Outcome.of(bad is None, {'pairs': n, 'violation': bad})


@register('s3.bioctonion.embedding', '§3 complexified octonions', 'algebra-core', 'bioct_multiply')
def check_bioctonion_embedding(ctx):
    bad = first((i, j) for i, j in itertools.product(range(8), repeat=2)
                if bioct_multiply(BiOctonion(E[i]), BiOctonion(E[j])) !=
                BiOctonion(multiply(E[i], E[j])))
    i_squared = bioct_multiply(BiOctonion(ZERO, ONE), BiOctonion(ZERO, ONE))
    return Outcome.of(bad is None and i_squared == BiOctonion(-ONE),
                      {'i*i': i_squared, 'violation': bad})


@register('s3.bioctonion.zero_divisor', '§3 not a division algebra', 'algebra-core', 'zero_divisor_witness')
def check_zero_divisor(ctx):
    u, v = octonion.zero_divisor_witness()
    product = bioct_multiply(u, v)
    ok = (u and v and not product and not quadratic_form(u) and
          not quadratic_form(v))
    # the real octonions have none: basis products are units
    real_bad = first((i, j) for i, j in itertools.product(range(8), repeat=2)
                     if norm(multiply(E[i], E[j])) != 1)
    return Outcome.of(ok and real_bad is None,
                      {'u': u, 'v': v, 'N(u)': quadratic_form(u), 'real_violation': real_bad})


@register('s3.split.real_form', '§3 complexified octonions', 'algebra-core', 'zero_divisor_witness')
def check_split_form(ctx):
    basis = octonion.split_octonion_basis()
    closed = all(octonion.in_split_form(x * y)
                 for x, y in itertools.product(basis, repeat=2))
    values = [quadratic_form(b) for b in basis]
    signature = (sum(1 for v in values if v.re > 0 and not v.im),
                 sum(1 for v in values if v.re < 0 and not v.im))
    null = octonion.split_octonion_null_vector()
    ok = closed and signature == (4, 4) and not quadratic_form(null)
    return Outcome.of(ok, {'signature': signature, 'null_vector': null})


# ---------------------------------------------------------------------------
# xproduct

@register('s2.xproduct.reduction', '§2 X-product', 'xproduct', 'x_product')
def check_x_reduction(ctx):
    bad = first((i, j) for i, j in itertools.product(range(8), repeat=2)
                if xproduct.x_product(E[i], E[j], ONE) != multiply(E[i], E[j]))
    example = xproduct.x_product(ONE, ONE, E[1])
    identity = first(p for p in ctx.points if xproduct.xproduct_identity_check(p) is not None)
    return Outcome.of(bad is None and example == ONE and identity is None,
                      {'1 o_e1 1': example, 'violation': bad or identity})


@register('s2.xproduct.composition', '§2 X-product', 'xproduct', 'x_product')
def check_x_composition(ctx):
    n = ctx.count('xproduct_samples')
    a = catalog.random_octonions(n, ctx.seed(11))
    b = catalog.random_octonions(n, ctx.seed(12))
    X = catalog.random_unit_octonions(n, ctx.seed(13))
    bad = first((x, y, p) for x, y, p in zip(a, b, X)
                if norm(xproduct.x_product(x, y, p)) != norm(x) * norm(y))
    return Outcome.of(bad is None, {'samples': n, 'violation': bad})


@register('s2.xproduct.sign', '§2 X-product', 'xproduct', 'x_product')
def check_x_sign(ctx):
    bad = first((p, i, j) for p in ctx.points
                for i, j in itertools.product(range(8), repeat=2)
                if xproduct.x_product(E[i], E[j], p) != xproduct.x_product(E[i], E[j], -p))
    return Outcome.of(bad is None, {'points': len(ctx.points), 'violation': bad})


@register('s2.xyproduct.reduction', '§2 XY-product', 'xproduct', 'xy_product')
def check_xy(ctx):
    n = ctx.count('xproduct_samples')
    points = ctx.points
    bad = first((p, i, j) for p in points for i, j in itertools.product(range(8), repeat=2)
                if xproduct.xy_product(E[i], E[j], p, p) != xproduct.x_product(E[i], E[j], p))
    a = catalog.random_octonions(n, ctx.seed(14))
    b = catalog.random_octonions(n, ctx.seed(15))
    X = catalog.random_unit_octonions(n, ctx.seed(16))
    Y = catalog.random_unit_octonions(n, ctx.seed(17))
    bad = bad or first((x, y) for x, y, p, q in zip(a, b, X, Y)
                       if norm(xproduct.xy_product(x, y, p, q)) != norm(x) * norm(y))
    ones = all(xproduct.xy_product(E[i], E[j], ONE, ONE) == multiply(E[i], E[j])
               for i, j in itertools.product(range(8), repeat=2))
    return Outcome.of(bad is None and ones,
                      {'definition': '(aX)(conj(Y) b)', 'violation': bad})


@register('eq10.torsion.identity', 'Eq. 10', 'xproduct', 'torsion_tensor')
def check_torsion_identity(ctx):
    t = xproduct.torsion_tensor(ONE)
    bad = first(ijk for ijk in itertools.product(range(1, 8), repeat=3)
                if ijk[0] != ijk[1] and t[ijk] != xproduct.structure_constant(*ijk))
    return Outcome.of(bad is None and t[1, 2, 4] == 1,
                      {'T_124': t[1, 2, 4], 'violation': bad})


@register('eq10.torsion.varies', 'Eq. 10', 'xproduct', 'torsion_tensor')
def check_torsion_varies(ctx):
    difference = xproduct.torsion_tensor(E[1]).first_difference(xproduct.torsion_tensor(ONE))
    witness = None
    if difference:
        ijk, at_e1, at_1 = difference
        witness = {'entry': ijk, 'T(e1)': at_e1, 'T(1)': at_1}
    return Outcome.of(difference is not None, witness)


@register('eq10.torsion.antisymmetry', 'Eq. 10', 'xproduct', 'torsion_tensor')
def check_torsion_antisymmetry(ctx):
    bad = {}
    for p in ctx.points:
        found = xproduct.torsion_tensor(p).antisymmetry_witness()
        if found:
            bad[str(p)] = found
    return Outcome.of(not bad and len(ctx.points) >= 10,
                      {'points': len(ctx.points), 'violations': bad})


@register('eq10.torsion.quaternion_restriction', 'Eq. 10', 'xproduct', 'torsion_tensor')
def check_torsion_restriction(ctx):
    reference = xproduct.torsion_tensor(ONE).restrict(catalog.QUATERNION_SUPPORT[1:])
    points = [p for p in ctx.points if catalog.in_quaternion_subalgebra(p)]
    bad = first(p for p in points
                if xproduct.torsion_tensor(p).restrict(catalog.QUATERNION_SUPPORT[1:]) != reference)
    return Outcome.of(bad is None, {'points': [str(p) for p in points], 'violation': bad})


def _basis_triples():
    return list(itertools.combinations(range(1, 8), 3))


def _quaternion_triples():
    return {tuple(sorted(t)) for t in TRIPLES}


@register('s2.jacobi.non_lie', '§2 does not form a Lie algebra', 'xproduct', 'jacobi_defect')
def check_jacobi_non_lie(ctx):
    nonzero = [t for t in _basis_triples() if xproduct.jacobi_defect(*t, ONE)]
    zero = sorted(set(_basis_triples()) - set(nonzero))
    ok = nonzero and set(zero) == _quaternion_triples()
    witness = {'nonzero': len(nonzero), 'zero': zero}
    if nonzero:
        witness['example'] = (nonzero[0], xproduct.jacobi_defect(*nonzero[0], ONE))
    return Outcome.of(ok, witness)


@register('s2.jacobi.quaternion', '§2 does not form a Lie algebra', 'xproduct', 'jacobi_defect')
def check_jacobi_quaternion(ctx):
    points = [p for p in ctx.points if catalog.in_quaternion_subalgebra(p)]
    bad = first((p, t) for p in points for t in itertools.permutations((1, 2, 4))
                if xproduct.jacobi_defect(*t, p))
    return Outcome.of(bad is None and points, {'points': len(points), 'violation': bad})


@register('s2.jacobi.antisymmetry', '§2 does not form a Lie algebra', 'xproduct', 'jacobi_defect')
def check_jacobi_antisymmetry(ctx):
    bad = first((X, t) for X in (ONE, E[1]) for t in _basis_triples()
                if xproduct.jacobi_defect(t[1], t[0], t[2], X) !=
                -xproduct.jacobi_defect(*t, X))
    return Outcome.of(bad is None, {'violation': bad})


@register('s4.path.discrepancy', '§4 end-point may not be well-defined', 'xproduct', 'path_discrepancy')
def check_paths(ctx):
    quaternionic = xproduct.PathPair(ONE + E[1], E[2] - E[4], 2 * E[1] + E[4])
    twisted = xproduct.PathPair(E[1], E[2], E[3])
    real_step = xproduct.PathPair(E[3], E[5], Octonion.real(3))
    gap = xproduct.path_discrepancy(twisted)
    ok = (not xproduct.path_discrepancy(quaternionic) and gap and
          not xproduct.path_discrepancy(real_step))
    return Outcome.of(ok, {'(e1,e2,e3)': gap})


# ---------------------------------------------------------------------------
# liegen

@register('s2.left_mult.matrix', '§2 multiplication on a continuous unit sphere', 'liegen', 'left_mult_matrix')
def check_left_mult(ctx):
    L = liegen.left_mult_matrix
    ok = ((L(ONE) == liegen.identity()).all() and L(E[1])[1, 0] == 1 and
          all(liegen.is_antisymmetric(L(E[i])) for i in range(1, 8)))
    a, b = parse_octonion('1/2+e3-2e6'), parse_octonion('3e1+1/3e7')
    ok = ok and (L(a + b) == L(a) + L(b)).all()
    return Outcome.of(ok, {'L(e1)[1,0]': L(E[1])[1, 0]})


@register('eq12.closure.left_mult', 'Eq. 12', 'liegen', 'lie_closure')
def check_closure(ctx):
    basis = liegen.so8_closure()
    antisymmetric = all(liegen.is_antisymmetric(m) for m in basis.members)
    again = liegen.lie_closure(basis.members)
    ok = basis.closed and basis.dim == 28 and antisymmetric and again.dim == basis.dim
    return Outcome.of(ok, {'dim': basis.dim, 'fingerprint': liegen.fingerprint(basis)})


@register('eq12.closure.small', 'Eq. 12', 'liegen', 'lie_closure')
def check_small_closures(ctx):
    rotations = []
    for p, q in ((1, 2), (2, 0), (0, 1)):
        m = liegen.zeros(3)
        m[p, q], m[q, p] = Fraction(1), Fraction(-1)
        rotations.append(m)
    so3 = liegen.lie_closure(rotations)
    single = liegen.lie_closure([liegen.left_mult_matrix(E[3])])
    return Outcome.of(so3.dim == 3 and single.dim == 1,
                      {'so3': so3.dim, 'single': single.dim})


@register('eq12.closure.jacobi', 'Eq. 12', 'liegen', 'lie_closure')
def check_closure_jacobi(ctx):
    members = liegen.so8_closure().members[:8]
    br = liegen.bracket
    bad = first((i, j, k) for i, j, k in itertools.combinations(range(len(members)), 3)
                if (br(br(members[i], members[j]), members[k]) +
                    br(br(members[j], members[k]), members[i]) +
                    br(br(members[k], members[i]), members[j])).any())
    return Outcome.of(bad is None, {'members': len(members), 'violation': bad})


@register('eq14.derivations.g2', 'Eq. 14', 'liegen', 'derivation_algebra')
def check_derivations(ctx):
    g2 = liegen.derivation_algebra()
    kills_one = all(not liegen.apply(d, ONE) for d in g2.members)
    return Outcome.of(g2.dim == 14 and g2.closed and kills_one, {'dim': g2.dim})


@register('eq13.stabilizer.spin7', 'Eq. 13', 'liegen', 'stabilizer_subalgebra')
def check_stabilizer(ctx):
    so8 = liegen.so8_closure()
    spin7 = liegen.stabilizer_subalgebra(so8, ONE)
    g2 = liegen.derivation_algebra()
    chain = (g2.dim, spin7.dim, so8.dim)
    ok = (chain == (14, 21, 28) and so8.contains_all(spin7) and
          spin7.contains_all(g2) and
          liegen.stabilizer_subalgebra(so8, ZERO).dim == so8.dim)
    return Outcome.of(ok, {'chain': chain, 'differences': (chain[1] - chain[0], chain[2] - chain[1])})


@register('s2.triality.unique', '§2 triality', 'liegen', 'triality_decompose')
def check_triality_unique(ctx):
    triples = liegen.triality_solve(liegen.so8_closure().members)
    bad = first(n for n, t in enumerate(triples) if t.residual_witness() is not None)
    zero = liegen.triality_decompose(liegen.zeros())
    mismatched = []
    for i in range(1, 8):
        L, R = liegen.left_mult_matrix(E[i]), liegen.right_mult_matrix(E[i])
        t = liegen.triality_decompose(L + R)
        if not ((t.a_prime == L).all() and (t.a_dblprime == R).all()):
            mismatched.append(i)
    ok = (bad is None and not zero.a_prime.any() and not zero.a_dblprime.any() and
          not mismatched)
    return Outcome.of(ok, {'solved': len(triples), 'unknowns': 56, 'equations': 512,
                           'violation': bad, 'left_right_mismatch': mismatched})


@register('s2.triality.brackets', '§2 triality', 'liegen', 'triality_decompose')
def check_triality_brackets(ctx):
    theta, _ = liegen.triality_maps()
    bad = liegen.bracket_preservation_witness(theta)
    rank = linalg.rank(theta.tolist())
    return Outcome.of(bad is None and rank == 28, {'rank': rank, 'violation': bad})


@register('s2.triality.derivations', '§2 triality', 'liegen', 'triality_decompose')
def check_triality_derivations(ctx):
    triples = liegen.triality_solve(liegen.derivation_algebra().members)
    bad = first(n for n, t in enumerate(triples)
                if not (t.a_prime == t.a).all() or not (t.a_dblprime == t.a).all())
    return Outcome.of(bad is None, {'derivations': len(triples), 'violation': bad})


@register('s2.triality.order', '§2 half-spinor representations', 'liegen', 'triality_order_probe')
def check_triality_order(ctx):
    return liegen.triality_order_probe()


# ---------------------------------------------------------------------------
# calibrations

@register('eq24.phi.support', 'Eq. 24', 'calibrations', 'phi')
def check_phi_support(ctx):
    form = calibrations.three_form()
    support = form.support()
    unit = all(abs(form[t]) == 1 for t in support)
    ok = (set(support) == _quaternion_triples() and unit and
          calibrations.phi(E[4], E[1], E[2]) == 1 and
          not calibrations.phi(E[1], E[2], E[3]) and
          not calibrations.phi(E[1], E[1], E[2]))
    return Outcome.of(ok, {'support': support, 'phi(e4,e1,e2)': calibrations.phi(E[4], E[1], E[2])})


@register('eq24.phi.antisymmetry', 'Eq. 24', 'calibrations', 'phi')
def check_phi_antisymmetry(ctx):
    form = calibrations.three_form()
    bad = first((i, j, k) for i, j, k in itertools.product(range(1, 8), repeat=3)
                if form[j, i, k] != -form[i, j, k] or form[i, k, j] != -form[i, j, k])
    try:
        calibrations.phi(ONE, E[1], E[2])
        rejects_real = False
    except DomainError:
        rejects_real = True
    return Outcome.of(bad is None and rejects_real, {'violation': bad})


@register('eq25.psi.support', 'Eq. 25', 'calibrations', 'psi')
def check_psi(ctx):
    form = calibrations.four_form()
    support = form.support()
    unit = all(abs(form[q]) == 1 for q in support)
    bad = first(q for q in itertools.product(range(1, 8), repeat=4)
                if form[(q[1], q[0]) + q[2:]] != -form[q] or
                form[q[:2] + (q[3], q[2])] != -form[q] or
                form[(q[0], q[2], q[1], q[3])] != -form[q])
    ok = (len(support) == 7 and unit and bad is None and
          abs(calibrations.psi(E[3], E[5], E[6], E[7])) == 1 and
          not calibrations.psi(E[1], E[2], E[4], E[3]))
    return Outcome.of(ok, {'support': support, 'psi(e3,e5,e6,e7)':
                           calibrations.psi(E[3], E[5], E[6], E[7])})


@register('s4.associative.planes', '§4 associative submanifold', 'calibrations', 'is_associative_plane')
def check_associative_planes(ctx):
    associative = [t for t in _basis_triples()
                   if calibrations.is_associative_plane(*(E[k] for k in t))]
    rotated = Fraction(3, 5) * E[4] + Fraction(4, 5) * E[3]
    ok = (set(associative) == _quaternion_triples() and
          not calibrations.is_associative_plane(E[1], E[2], rotated))
    try:
        calibrations.is_associative_plane(E[1], E[1], E[2])
        ok = False
    except calibrations.DegenerateInputError:
        pass
    return Outcome.of(ok, {'associative': associative})


@register('s4.calibration.bound', '§4 associative submanifold', 'calibrations', 'phi')
def check_calibration_bound(ctx):
    n = ctx.count('calibration_triples')
    equality = 0
    for x, y, z in catalog.orthonormal_triples(n, ctx.seed(20)):
        value = calibrations.phi(x, y, z)
        if abs(value) > 1 or calibrations.calibration_defect(x, y, z) != 1:
            return Outcome.of(False, {'triple': (x, y, z), 'phi': value})
        if (abs(value) == 1) != (not associator(x, y, z)):
            return Outcome.of(False, {'triple': (x, y, z), 'equality_case': value})
        equality += abs(value) == 1
    return Outcome.of(True, {'triples': n, 'calibrated': equality})


def _basis_hulls():
    for i, j in itertools.combinations(range(1, 8), 2):
        yield (i, j), calibrations.quaternion_hull(E[i], E[j])


@register('s4.hull.closure', '§4 maximal associative subspace', 'calibrations', 'quaternion_hull')
def check_hulls(ctx):
    bad = {}
    for pair, hull in _basis_hulls():
        paths = first((x, y, z) for x, y, z in itertools.product(hull.basis, repeat=3)
                      if xproduct.path_discrepancy(PathPair(x, y, z)))
        found = hull.closure_witness() or hull.associator_witness() or paths
        if found:
            bad[pair] = found
    example = calibrations.quaternion_hull(E[1], E[2]).basis
    try:
        calibrations.quaternion_hull(E[1], E[1])
        degenerate = False
    except calibrations.DegenerateInputError:
        degenerate = True
    ok = not bad and example == (ONE, E[1], E[2], E[4]) and degenerate
    return Outcome.of(ok, {'hulls': 21, 'violations': bad})


@register('s4.hull.maximal', '§4 maximal associative subspace', 'calibrations', 'quaternion_hull')
def check_maximal(ctx):
    survivors = []
    witnesses = 0
    for pair, hull in _basis_hulls():
        for k in range(1, 8):
            if hull.contains(E[k]):
                continue
            if calibrations.maximality_witness(hull, E[k]) is None:
                survivors.append((pair, k))
            witnesses += 1
    return Outcome.of(not survivors, {'extensions': witnesses, 'survivors': survivors})


@register('s5.complement.calibrated', '§5 coassociative internal space', 'calibrations', 'coassociative_complement')
def check_complements(ctx):
    bad = {}
    for pair, hull in _basis_hulls():
        complement = calibrations.coassociative_complement(hull)
        gram_ok = all(inner(x, y) == (1 if p == q else 0)
                      for (p, x), (q, y) in itertools.product(enumerate(complement), repeat=2))
        spans = linalg.rank([b.coeffs for b in hull.basis + tuple(complement)]) == 8
        calibrated = abs(calibrations.psi(*complement)) == 1
        coassociative = all(not calibrations.phi(*t)
                            for t in itertools.combinations(complement, 3))
        if not (gram_ok and spans and calibrated and coassociative):
            bad[pair] = (gram_ok, spans, calibrated, coassociative)
    first_complement = calibrations.coassociative_complement(
        calibrations.quaternion_hull(E[1], E[2]))
    support = sorted(k for x in first_complement for k in x.support())
    ok = not bad and support == [3, 5, 6, 7]
    return Outcome.of(ok, {'hull(e1,e2)': first_complement, 'violations': bad})


@register('s5.hodge.duality', '§5 associative and coassociative decomposition', 'calibrations', 'hodge_dual_check')
def check_hodge(ctx):
    outcome = calibrations.hodge_dual_check()
    reversed_ = calibrations.hodge_dual_check(orientation=-1)
    if outcome.status is Status.PASS and reversed_.status is not Status.DISCREPANCY:
        return Outcome.of(False, {'reversed_orientation': reversed_.status})
    return outcome


# ---------------------------------------------------------------------------
# roots-dims

@register('s5.roots.d4', '§5 the 24 root vectors', 'roots-dims', 'd4_roots')
def check_d4(ctx):
    rs = roots.d4_roots()
    norms = {roots.dot(v, v) for v in rs}
    products = {roots.dot(a, b) for a, b in itertools.product(rs.vectors, repeat=2)}
    ok = (len(rs) == 24 and len(rs.as_set()) == 24 and norms == {1} and
          products <= {0, Fraction(1, 2), Fraction(-1, 2), 1, -1})
    return Outcome.of(ok, {'count': len(rs), 'inner_products': sorted(products)})


@register('s5.roots.weyl_orbit', '§5 the 24 root vectors', 'roots-dims', 'd4_roots')
def check_weyl_orbit(ctx):
    rs = roots.d4_roots()
    bad = first(v for v in rs if roots.weyl_orbit(v, rs) != rs.as_set())
    return Outcome.of(bad is None, {'violation': bad})


@register('s5.roots.axioms', 'plumbing', 'roots-dims', 'root_axiom_check')
def check_root_axioms(ctx):
    d4 = roots.root_axiom_check(roots.d4_roots())
    a1 = roots.root_axiom_check(roots.A1_EXAMPLE)
    half = roots.root_axiom_check(roots.RootSet(((0, 1, 0, 0), (0, 0, 1, 0))))
    ok = bool(d4) and bool(a1) and not half and 'negation' in half.witness
    return Outcome.of(ok, {'{+i,+j}': half.witness})


@register('s5.roots.dynkin', '§5 root vector space of D4', 'roots-dims', 'dynkin_identify')
def check_dynkin(ctx):
    found = {name: str(roots.dynkin_identify(rs)) for name, rs in (
        ('d4', roots.d4_roots()), ('a2', roots.A2_EXAMPLE), ('a1', roots.A1_EXAMPLE))}
    rank = roots.dynkin_identify(roots.d4_roots()).rank
    ok = found == {'d4': 'D4', 'a2': 'A2', 'a1': 'A1'} and rank == 4
    return Outcome.of(ok, found)


@register('s5.coset.positive', '§5 12 positive root vectors', 'roots-dims', 'coset_split_report')
def check_positive(ctx):
    positive = dims.positive_split()
    all_roots = roots.d4_roots().as_set()
    covered = set(positive) | {roots.neg(v) for v in positive}
    sizes = [len(members) for _, _, members, _ in dims.COSET_BLOCKS]
    lexicographic = set(roots.positive_roots(roots.d4_roots()))
    ok = (len(positive) == 12 and covered == all_roots and sizes == [8, 3, 1] and
          set(positive) == lexicographic and
          dims.coset_dim('Spin(8)/U(4)') == len(positive))
    return Outcome.of(ok, {'blocks': sizes})


def _coset_block(group):
    def check(ctx):
        return dict(dims.coset_split_report())[group]
    return check


for _id, _group in (('s5.coset.su3', 'SU(3)'), ('s5.coset.su2', 'SU(2)'), ('s5.coset.u1', 'U(1)')):
    register(_id, f'§5 should form the Lie group {_group}', 'roots-dims',
             'coset_split_report')(_coset_block(_group))


@register('s51.dims.groups', '§5.1 U(4) = Spin(6) x U(1)', 'roots-dims', 'group_dim')
def check_group_dims(ctx):
    failed = [(name, lhs, rhs) for name, lhs, rhs in dims.dimension_identities() if lhs != rhs]
    examples = {name: dims.group_dim(name) for name in ('Spin(6)', 'Spin(5)', 'U(4)', 'G2', 'E6')}
    ok = not failed and examples == {'Spin(6)': 15, 'Spin(5)': 10, 'U(4)': 16, 'G2': 14, 'E6': 78}
    try:
        dims.group_dim('Foo(3)')
        ok = False
    except DomainError:
        pass
    return Outcome.of(ok, {'examples': examples, 'failed': failed})


def _symmetric_row(group):
    def check(ctx):
        return dict(dims.symmetric_space_check())[group]
    return check


for _id, _group in (('eq26.row.spin5', 'Spin(5)'), ('eq26.row.su3', 'SU(3)'),
                    ('eq26.row.su2', 'SU(2)'), ('eq26.row.u1', 'U(1)')):
    register(_id, 'Eq. 26', 'roots-dims', 'symmetric_space_check')(_symmetric_row(_group))


def _shilov_case(name):
    def check(ctx):
        return dict(dims.shilov_check())[name]
    return check


for _id, _name, _ref in (
        ('s2.shilov.e6', 'E6', '§2 two copies of S7 x RP1'),
        ('s2.shilov.d5', 'D5', '§2 Shilov boundary is S7 x RP1'),
        ('s5.shilov.spin8_u4', 'Spin(8)/U(4)', '§5 12-dimensional coset space')):
    register(_id, _ref, 'roots-dims', 'shilov_check')(_shilov_case(_name))


# ---------------------------------------------------------------------------
# heisenberg

@register('eq3.heisenberg.product', 'Eq. 3', 'heisenberg', 'h_multiply')
def check_heisenberg_product(ctx):
    product = h_multiply(HeisenbergElement(creator=E[1]), HeisenbergElement(annihilator=E[2]))
    central = HeisenbergElement(central=E[5])
    anything = HeisenbergElement(E[2], E[3], E[6])
    ok = (product.central == E[4] and product.is_central() and
          not h_multiply(central, anything) and not h_multiply(anything, central))
    return Outcome.of(ok, {'central': product.central})


@register('eq3.heisenberg.nilpotency', 'Eq. 3', 'heisenberg', 'nilpotency_check')
def check_nilpotency(ctx):
    return heisenberg.nilpotency_check()


@register('eq18.heisenberg.vector_spacetime', 'Eq. 18', 'heisenberg', 'h_multiply')
def check_vector_spacetime(ctx):
    bad = first(p for p in ctx.points
                if h_multiply(heisenberg.vector_spacetime_element(p),
                              heisenberg.vector_spacetime_element(p)))
    return Outcome.of(bad is None, {'violation': bad})


@register('eq7.heisenberg.bracket', 'Eq. 7', 'heisenberg', 'h_bracket')
def check_bracket(ctx):
    m1 = HeisenbergElement(E[1], E[1])
    m2 = HeisenbergElement(E[2], E[2])
    value = h_bracket(m1, m2)
    basis = list(heisenberg.basis_elements())
    central_only = all(h_bracket(a, b).is_central()
                       for a, b in itertools.product(basis, repeat=2))
    ok = (value.central == 2 * E[4] and value.is_central() and
          not h_bracket(m1, m1) and central_only and
          not h_bracket(HeisenbergElement(central=E[1]), HeisenbergElement(central=E[2])))
    center = heisenberg.center_check()
    span = heisenberg.commutator_span_check()
    return Outcome.of(ok and bool(center) and bool(span),
                      {'[m1,m2]': value.central, 'commutator_rank': span.witness['rank']})


@register('eq5.heisenberg.dagger', 'Eq. 5', 'heisenberg', 'h_dagger')
def check_dagger(ctx):
    a = catalog.random_octonions(30, ctx.seed(30))
    elements = [HeisenbergElement(x, y, z) for x, y, z in zip(a[:10], a[10:20], a[20:])]
    involution = all(h_dagger(h_dagger(m)) == m for m in elements)
    reverses = all(h_dagger(h_multiply(m, n)) == h_multiply(h_dagger(n), h_dagger(m))
                   for m, n in itertools.product(elements, repeat=2))
    creator = HeisenbergElement(creator=parse_octonion('3/5+4/5e4'))
    image = h_dagger(creator)
    swaps = (image.lower and not image.creator and
             norm(image.annihilator) == norm(creator.creator) == 1)
    return Outcome.of(involution and reverses and swaps, {'dagger': image})


# ---------------------------------------------------------------------------
# cli

@register('cli.literal.roundtrip', PLUMBING, 'cli', 'parse_octonion')
def check_literals(ctx):
    ok = (parse_octonion('1') == ONE and
          parse_octonion('3/5+4/5e4').coeffs == (Fraction(3, 5), 0, 0, 0, Fraction(4, 5), 0, 0, 0))
    bad = first(p for p in ctx.points if parse_octonion(format_octonion(p)) != p)
    position = None
    try:
        parse_octonion('e8')
        ok = False
    except ParseError as e:
        position = e.position
    return Outcome.of(ok and bad is None, {'e8_error_position': position, 'violation': bad})


@register('cli.registry.complete', PLUMBING, 'cli', 'run_verification')
def check_registry(ctx):
    return registry_completeness()


def registry_completeness():
    covered = {(c.module, c.operation) for c in REGISTRY.values()}
    declared = {(module, op) for module, pymodules in MODULES.items()
                for pymodule in pymodules for op in pymodule.OPERATIONS}
    unknown = sorted((m, op) for m, op in covered
                     if not any(hasattr(p, op) for p in MODULES[m]))
    missing = sorted(declared - covered)
    refs = [c.id for c in REGISTRY.values() if not c.paper_ref]
    return Outcome.of(not missing and not unknown and not refs,
                      {'missing': missing, 'unknown': unknown, 'no_reference': refs,
                       'checks': len(REGISTRY)})


# ---------------------------------------------------------------------------
# running

def select(patterns):
    patterns = ['*' if p == 'all' else p for p in patterns] or ['*']
    chosen = [c for c in REGISTRY.values()
              if any(fnmatch.fnmatchcase(c.id, p) for p in patterns)]
    if not chosen:
        raise UsageError(f'no check matches {" ".join(patterns)}')
    return sorted(chosen, key=lambda c: (MODULE_ORDER.index(c.module), c.id))


def run_check(check, ctx):
    log.debug('running %s', check.id)
    try:
        outcome = check.func(ctx)
    except Exception as e:
        log.debug('%s raised %r', check.id, e)
        outcome = Outcome(Status.FAIL, {'exception': type(e).__name__, 'message': str(e)})
    return CheckDescriptor(check.id, check.paper_ref, check.module,
                           outcome.status, outcome.witness)


def run_verification(patterns, config):
    checks = select(patterns)
    log.info('running %d checks', len(checks))
    ctx = Context(config)
    report = VerificationReport([run_check(c, ctx) for c in checks], config.echo())
    log.info('summary: %s', ', '.join(f'{k} {v}' for k, v in report.summary.items()))
    return report
