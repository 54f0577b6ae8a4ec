"""Command line front end: ``harmony seq|verify|gf-check|transform``"""

import argparse
import logging
import os
import sys

from harmony import (app as harmony_app, exact_math, exception,
                     power_series, properties, sequences, transforms)
from harmony.fileio import reports, tables

logger = logging.getLogger(__name__)


EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

# Family parameters accepted on the command line
FAMILY_PARAMETERS = ('m', 'r', 'k', 'p')

HANDLED_ERRORS = (
    exception.ConfigError,
    exception.ValidationError,
    exception.DomainError,
    exception.FeasibilityError,
    exception.RegistryError,
    exception.VerificationError,
)

_non_negative = properties.NonNegativeInteger()
_positive = properties.PositiveInteger()
_rational = properties.Rational()

DESCRIPTION = """\
Exact harmonic-like numbers and mechanical checks of their identities.
Rationals are printed exactly as p/q. Pass negative fractions with an
equals sign, e.g. --a=-1/2.
"""


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '-v', '--verbose', action='count', default=0,
        help='log to stderr, -vv for debug output')
    common.add_argument(
        '--config', metavar='FILE',
        help='configuration file (.yml, .yaml or .json)')
    common.add_argument(
        '--output', metavar='FILE',
        help='write to FILE instead of stdout; relative paths resolve '
             'against the output_dir setting or ${}'.format(
                 harmony_app.OUTPUT_DIR_ENV))

    parser = argparse.ArgumentParser(
        prog='harmony', description=DESCRIPTION,
        formatter_class=argparse.RawDescriptionHelpFormatter)
    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
    subparsers.required = True

    seq = subparsers.add_parser(
        'seq', parents=[common], help='table of a sequence family',
        description='Rows n,value for n = 0..N.')
    _add_family_arguments(seq, required=True)
    seq.add_argument('--n', required=True, metavar='N', help='last index')
    _add_table_arguments(seq)
    seq.set_defaults(handler=cmd_seq)

    verify = subparsers.add_parser(
        'verify', parents=[common], help='check registered identities',
        description='Check identities on their grids; exit 1 if any fails.')
    selection = verify.add_mutually_exclusive_group()
    selection.add_argument('--id', dest='identity', metavar='ID',
                           help='single identity id')
    selection.add_argument('--tag', metavar='TAG',
                           help='identities carrying TAG, e.g. section4')
    selection.add_argument('--list', action='store_true',
                           help='print the registry catalog and exit')
    for axis in ('n', 'm', 'p'):
        verify.add_argument(
            '--{}-max'.format(axis), metavar='MAX',
            help='upper bound for the {} axis'.format(axis))
    verify.add_argument('--format', choices=tables.FORMATS, default='json')
    verify.set_defaults(handler=cmd_verify)

    gf_check = subparsers.add_parser(
        'gf-check', parents=[common],
        help='compare a family with its generating function',
        description='Families: {}.'.format(
            ', '.join(power_series.GF_CHECK_FAMILIES)))
    _add_family_arguments(gf_check, required=True)
    gf_check.add_argument('--order', default='30', metavar='N',
                          help='highest coefficient compared (default 30)')
    gf_check.add_argument('--format', choices=tables.FORMATS, default='csv')
    gf_check.set_defaults(handler=cmd_gf_check)

    transform = subparsers.add_parser(
        'transform', parents=[common],
        help='binomial sums and binomial transforms',
        description='With --a and --b: S_n(a, b, m) for n = 0..N. '
                    'With --family: the binomial transform of the family.')
    _add_family_arguments(transform, required=False)
    transform.add_argument('--n', required=True, metavar='N',
                           help='last index')
    transform.add_argument('--a', metavar='A', help='rational weight a')
    transform.add_argument('--b', metavar='B', help='rational weight b')
    transform.add_argument('--signed', action='store_true',
                           help='use the signed transform sum C(n,k)(-1)^k')
    transform.add_argument('--route', choices=sorted(transforms.ROUTES),
                           default='direct',
                           help='evaluation route for S_n(a, b, m)')
    _add_table_arguments(transform)
    transform.set_defaults(handler=cmd_transform)
    return parser


def _add_family_arguments(parser, required):
    parser.add_argument('--family', required=required, metavar='NAME',
                        help='one of {}'.format(
                            ', '.join(sorted(sequences.FAMILIES))))
    parser.add_argument('--m', metavar='M', help='order m')
    parser.add_argument('--r', metavar='R', help='order r')
    parser.add_argument('--k', metavar='K', help='column k')
    parser.add_argument('--p', metavar='P', help='hyperharmonic order p')


def _add_table_arguments(parser):
    parser.add_argument('--format', choices=tables.FORMATS, default='csv')
    parser.add_argument('--decimal', metavar='DIGITS',
                        help='add an approximate decimal column')


def _family_params(args):
    return {name: getattr(args, name) for name in FAMILY_PARAMETERS
            if getattr(args, name, None) is not None}


def _render_table(args, rows, columns):
    if args.decimal is not None:
        digits = _positive.from_text(args.decimal)
        rows = [row + (exact_math.to_decimal(row[-1], digits),)
                for row in rows]
        columns = tables.with_decimal(columns)
    return tables.dumps(rows, columns, args.format)


def cmd_seq(app, args):
    """
    Table of one sequence family.

    :returns: tuple ``(text, exit_status)``
    """
    n = _non_negative.from_text(args.n)
    family = sequences.spec(args.family, **_family_params(args))
    return _render_table(args, family.table(n),
                         tables.SEQUENCE_COLUMNS), EXIT_OK


def cmd_verify(app, args):
    """
    Verify one identity, a tag, or the whole registry.

    :returns: tuple ``(text, exit_status)``, status 1 if any report failed
    """
    if args.list:
        return reports.dumps_catalog(app.registry_catalog(),
                                     args.format), EXIT_OK
    overrides = {}
    for axis in ('n', 'm', 'p'):
        value = getattr(args, '{}_max'.format(axis))
        if value is not None:
            overrides['{}_max'.format(axis)] = _non_negative.from_text(value)
    if args.identity is not None:
        results = [app.verify_identity(args.identity, overrides)]
    else:
        if args.tag is not None and not app.select(args.tag):
            raise exception.RegistryError(
                'No identities tagged {}'.format(args.tag))
        results = app.verify_all(args.tag, overrides)
    status = EXIT_OK
    if not all(report.passed for report in results):
        status = EXIT_FAILED
    return reports.dumps(results, args.format), status


def cmd_gf_check(app, args):
    """
    Recurrence values against generating-function coefficients.

    :returns: tuple ``(text, exit_status)``, status 1 on any mismatch
    """
    order = _non_negative.from_text(args.order)
    if args.family not in power_series.GF_CHECK_FAMILIES:
        raise exception.RegistryError(
            'No generating function check for family {}, expected one '
            'of {}'.format(args.family,
                           ', '.join(power_series.GF_CHECK_FAMILIES)))
    if args.family == power_series.ODD_CENTRAL:
        family = power_series.ODD_CENTRAL
    else:
        family = sequences.spec(args.family, **_family_params(args))
    rows = power_series.cross_check(family, order)
    status = EXIT_OK if all(row[-1] for row in rows) else EXIT_FAILED
    return tables.dumps(rows, tables.GF_CHECK_COLUMNS, args.format), status


def cmd_transform(app, args):
    """
    Binomial sums S_n(a, b, m) (when ``--a``/``--b`` are given) or the
    binomial transform of a family.

    :returns: tuple ``(text, exit_status)``
    """
    n_max = _non_negative.from_text(args.n)
    if args.a is not None or args.b is not None:
        if args.family is not None:
            raise exception.ValidationError(
                'Use either --a/--b/--m or --family, not both')
        missing = [name for name in ('a', 'b', 'm')
                   if getattr(args, name) is None]
        if missing:
            raise exception.ValidationError('Missing {}'.format(
                ', '.join('--' + name for name in missing)))
        a = _rational.from_text(args.a)
        b = _rational.from_text(args.b)
        m = _non_negative.from_text(args.m)
        rows = [(n, transforms.binomial_sum(
                    transforms.BinomialSumParams(a, b, m, n), args.route))
                for n in range(n_max + 1)]
    elif args.family is not None:
        family = sequences.spec(args.family, **_family_params(args))
        rows = [(n, transforms.binomial_transform(family, n, args.signed))
                for n in range(n_max + 1)]
    else:
        raise exception.ValidationError('Need --a and --b, or --family')
    return _render_table(args, rows, tables.SEQUENCE_COLUMNS), EXIT_OK


def _output_path(app, path):
    output_dir = app.output_dir
    if output_dir and not os.path.isabs(path):
        path = os.path.join(output_dir, path)
    return path


def _write(app, args, text):
    if args.output is None:
        sys.stdout.write(text)
        return
    path = _output_path(app, args.output)
    with open(path, 'w') as f:
        f.write(text)
    logger.info('Wrote {} to {}'.format(args.command, path))


def _configure_logging(verbosity):
    if verbosity:
        level = logging.DEBUG if verbosity > 1 else logging.INFO
        logging.basicConfig(
            stream=sys.stderr, level=level,
            format='%(asctime)s %(name)s %(levelname)s %(message)s')


def main(argv=None):
    """
    Console entry point.

    :param list argv: Arguments without the program name (default
        ``sys.argv[1:]``)

    :returns: exit status: 0 success, 1 failed check, 2 usage or domain error
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    try:
        app = harmony_app.Harmony.with_builtins()
        if args.config is not None:
            app.config_from_file(args.config)
        text, status = args.handler(app, args)
        _write(app, args, text)
    except HANDLED_ERRORS as e:
        sys.stderr.write('harmony {}: error: {}\n'.format(args.command, e))
        return EXIT_USAGE
    except OSError as e:
        sys.stderr.write('harmony {}: error: {}\n'.format(args.command, e))
        return EXIT_USAGE
    return status
