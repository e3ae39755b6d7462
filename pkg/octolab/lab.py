"""The octolab command line.

    octolab [--config FILE] [--verbose] COMMAND [ARGS]

Commands run one shot and return an exit status: 0 when nothing failed, 1
when a check failed, 2 on a usage error.
"""
import argparse
import logging
import pathlib
import sys

from . import calibrations, checks, dims, liegen, roots, xproduct
from .commands import CommandArgumentParser, Dispatcher, ModArgumentParser, UsageError
from .config import ConfigError, LabConfig
from .octonion import DomainError, ParseError, format_octonion, parse_octonion
from .report import Status
from .util import format_fraction, jsonable, list_of_str

log = logging.getLogger('octolab')

FORMATS = ('text', 'json')
CLOSURES = ('left-mult', 'derivations', 'stabilizer')


def octonion_list(text):
    """'e1,e2' -> two octonions"""
    return [parse_octonion(part) for part in text.split(',') if part]


class Laboratory(Dispatcher):
    def __init__(self, config=None, stdout=None):
        super().__init__(stdout=stdout)
        self.config = config if config is not None else LabConfig()

    def write(self, text, out=None):
        if out is None:
            self.stdout.write(text)
        else:
            pathlib.Path(out).write_text(text)
            log.info('report written to %s', out)

    verify_options = CommandArgumentParser('verify')\
        .add_argument('patterns', nargs='*',
                      help="check id globs, 'all' selects everything (default from configuration)")\
        .add_argument('-f', '--format', choices=FORMATS,
                      help='report format (default from configuration)')\
        .add_argument('-o', '--out', type=pathlib.Path,
                      help='write the report to a file instead of stdout')\
        .add_argument('-l', '--list', action='store_true',
                      help='print the matching check ids and exit')

    def do_verify(self, arg):
        "Run the verification suite"
        opts = self.parse(self.verify_options, arg)
        patterns = opts.patterns or list_of_str(self.config['verify.patterns'])
        if opts.list:
            for check in checks.select(patterns):
                self.stdout.write(f'{check.id} {check.paper_ref}\n')
            return 0
        report = checks.run_verification(patterns, self.config)
        self.write(report.render(opts.format or self.config['verify.format']), opts.out)
        return report.exit_code()

    torsion_options = CommandArgumentParser('torsion')\
        .add_argument('-x', '--x', dest='x', default='1',
                      help='unit octonion literal (default 1)')

    def do_torsion(self, arg):
        "Print the nonzero torsion entries at a point"
        opts = self.parse(self.torsion_options, arg)
        tensor = xproduct.torsion_tensor(parse_octonion(opts.x))
        for ijk, value in tensor.nonzero():
            self.stdout.write(f'({",".join(map(str, ijk))}): {format_fraction(value)}\n')
        return 0

    liegen_options = CommandArgumentParser('liegen')\
        .add_argument('-c', '--closure', choices=CLOSURES, default='left-mult',
                      help='which algebra to generate')

    def do_liegen(self, arg):
        "Print the dimension and fingerprint of a generated Lie algebra"
        opts = self.parse(self.liegen_options, arg)
        if opts.closure == 'left-mult':
            basis = liegen.so8_closure()
        elif opts.closure == 'derivations':
            basis = liegen.derivation_algebra()
        else:
            basis = liegen.stabilizer_subalgebra(liegen.so8_closure(), parse_octonion('1'))
        self.stdout.write(f'closure: {opts.closure}\n'
                          f'dimension: {basis.dim}\n'
                          f'fingerprint: {liegen.fingerprint(basis)}\n')
        return 0

    calib_options = CommandArgumentParser('calib')\
        .add_argument('--hull', default='e1,e2',
                      help='two orthonormal imaginary octonions, comma separated')

    def do_calib(self, arg):
        "Print a quaternion hull and its coassociative complement"
        opts = self.parse(self.calib_options, arg)
        pair = octonion_list(opts.hull)
        if len(pair) != 2:
            raise UsageError(f'--hull needs two octonions, got {len(pair)}')
        hull = calibrations.quaternion_hull(*pair)
        complement = calibrations.coassociative_complement(hull)
        self.stdout.write('hull: ' + ', '.join(format_octonion(b) for b in hull.basis) + '\n')
        self.stdout.write('complement: ' + ', '.join(format_octonion(c) for c in complement) + '\n')
        return 0

    roots_options = CommandArgumentParser('roots')\
        .add_argument('-i', '--identify', action='store_true',
                      help='identify the Dynkin type and report the coset split')\
        .add_argument('-f', '--format', choices=FORMATS, default='text')

    def do_roots(self, arg):
        "Print the D4 roots, or their classification with --identify"
        opts = self.parse(self.roots_options, arg)
        rs = roots.d4_roots()
        if not opts.identify:
            for v in rs:
                self.stdout.write(roots.format_root(v) + '\n')
            return 0
        report = checks.run_verification(['s5.roots.*', 's5.coset.*'], self.config)
        if opts.format == 'text':
            self.stdout.write(f'type: {roots.dynkin_identify(rs)}\n')
        self.write(report.render(opts.format))
        return report.exit_code()

    dims_options = CommandArgumentParser('dims')\
        .add_argument('-t', '--table', action='store_true',
                      help='print the symmetric-space table with statuses')\
        .add_argument('-f', '--format', choices=FORMATS, default='text')

    def do_dims(self, arg):
        "Print dimension bookkeeping: the symmetric-space table and Shilov boundaries"
        opts = self.parse(self.dims_options, arg)
        if opts.format == 'json':
            report = checks.run_verification(['eq26.*', '*.shilov.*', 's51.*'], self.config)
            self.write(report.render('json'))
            return report.exit_code()
        rows = dims.symmetric_space_check() if opts.table else []
        for group, outcome in rows:
            w = outcome.witness
            self.stdout.write(f'{outcome.status} {group} {w["coset"]} '
                              f'{w["coset_dim"]} {w["space"]} {w["space_dim"]}\n')
        shilov = dims.shilov_check()
        for name, outcome in shilov:
            self.stdout.write(f'{outcome.status} {name} {jsonable(outcome.witness)}\n')
        failed = any(o.status is Status.FAIL for _, o in rows + shilov)
        return 1 if failed else 0


main_options = ModArgumentParser('octolab', description=__doc__.split('\n\n')[0])\
    .add_argument('--config', type=pathlib.Path,
                  help='INI file with run configuration (default octolab.ini if present)')\
    .add_argument('-v', '--verbose', action='store_true',
                  help='log debugging output')\
    .add_argument('command', nargs=argparse.REMAINDER,
                  help='verify, torsion, liegen, calib, roots or dims')


def run(argv, stdout=None):
    """Run one command line, returning the exit status"""
    opts = main_options.parse_args(argv)
    try:
        config = LabConfig.load(opts.config)
        lab = Laboratory(config, stdout=stdout)
        return lab.run(opts.command)
    except (UsageError, ParseError, DomainError, ConfigError, OSError) as e:
        print(f'octolab: {e}', file=sys.stderr)
        return 2


def main(argv=None):
    opts = main_options.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if opts.verbose else logging.INFO)
    sys.exit(run(argv))
