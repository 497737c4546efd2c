# -*- coding: utf-8 -*-
"""
noblemeans.cli
--------------

Command line interface of the noblemeans package.

Usage
-----
$ noblemeans entropy --m-max 4
$ noblemeans words --m 1 --gen 4 --exact --format json
$ noblemeans lift --m 1 --iters 31 --hist-bins 200 --format svg --out fig.svg
$ noblemeans diffract --pp --pq-max 30 --kmax 3

Every command resolves its run configuration as built-in defaults, then the
``--config`` file, then the explicit flags. Outputs start with a provenance
record (package version and configuration digest).

Exit codes: 0 on success, 1 on any other failure (file system errors are
reported with their path), 2 on configuration errors and 3 when an
enumeration would exceed its size limit.
"""

__all__ = [
    'build_parser',
    'build_config',
    'main'
]

import argparse
import logging
import sys

from typing import Callable, List, NamedTuple

import numpy as np

from noblemeans import diffraction, exact, geometry, measure, subst
from noblemeans.__about__ import __version__
from noblemeans.config import RunConfig
from noblemeans.consts import (
    CLI_DEFAULTS,
    CLI_PARAM_MINIMA,
    CLI_POSITIVE_PARAMS,
    CLI_WORD_PARAMS,
    EXIT_CONFIG_ERROR,
    EXIT_FAILURE,
    EXIT_OK,
    EXIT_RESOURCE_LIMIT,
    OUTPUT_FORMATS
)
from noblemeans.errors import ConfigError, NobleMeansError, SizeLimitError
from noblemeans.filters import (
    svg_histogram,
    svg_line_chart,
    svg_scatter_chart,
    svg_stem_chart,
    to_csv,
    to_json
)
from noblemeans.utils import Status
from noblemeans.validators import is_valid_word, raise_for_invalid_length, raise_for_invalid_positive


LOGGER = logging.getLogger(__name__)


class Output(NamedTuple):
    """What a command produced: CSV rows, a JSON document and an optional SVG renderer."""

    rows: List[dict]
    columns: List[str]
    document: dict
    chart: Callable[[dict], str] = None


def _probs(text: str):
    try:
        return tuple(float(value) for value in text.split(','))
    except ValueError:
        raise argparse.ArgumentTypeError(f'The probability vector "{text}" is invalid. Enter e.g. 0.5,0.5.')


def build_parser() -> argparse.ArgumentParser:
    """The argument parser with one subcommand per computation."""

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--m', type=int, default=None, help='family parameter m >= 1 (default 1)')
    common.add_argument('--probs', type=_probs, default=None, help='comma separated p_0,...,p_m (default uniform)')
    common.add_argument('--rng-seed', type=int, default=None, help='seed of the random generator (default 0)')
    common.add_argument('--out', default=None, help='output file (default stdout)')
    common.add_argument('--format', choices=OUTPUT_FORMATS, default=None, help='output format (default csv)')
    common.add_argument('--config', default=None, help='JSON run configuration')
    common.add_argument('-v', '--verbose', action='count', default=0, help='more log output (repeatable)')
    common.add_argument('-q', '--quiet', action='store_true', help='only errors on stderr')

    parser = argparse.ArgumentParser(prog='noblemeans', description='Random noble means substitutions.')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    commands = parser.add_subparsers(dest='command', required=True)

    words = commands.add_parser('words', parents=[common], help='realisations or exact words')
    words.add_argument('--iters', type=int, help='number of substitution steps')
    words.add_argument('--seed-word', help='starting word, "|" marks the origin')
    words.add_argument('--exact', action='store_const', const=True, help='list the exact words G_(m,n)')
    words.add_argument('--gen', type=int, help='generation n of the exact words')
    words.add_argument('--limit', type=int, help='largest accepted number of words')

    legal = commands.add_parser('legal', parents=[common], help='legal words of a given length')
    legal.add_argument('--ell', type=int, help='word length')
    legal.add_argument('--depth', type=int, help='largest number of closure rounds')

    entropy = commands.add_parser('entropy', parents=[common], help='topological entropy table')
    entropy.add_argument('--m-max', type=int, help='largest m of the table')
    entropy.add_argument('--truncation', type=int, help='last index of the partial sum')

    freqs = commands.add_parser('freqs', parents=[common], help='frequencies of legal words')
    freqs.add_argument('--ell', type=int, help='word length')

    birkhoff = commands.add_parser('birkhoff', parents=[common], help='Monte-Carlo ergodic average check')
    birkhoff.add_argument('--word', help='legal word whose cylinder is tested')
    birkhoff.add_argument('--N', type=int, help='number of shifts averaged')
    birkhoff.add_argument('--trials', type=int, help='number of independent realisations')
    birkhoff.add_argument('--offset', type=int, help='first shift')

    lift = commands.add_parser('lift', parents=[common], help='lift of a realisation to internal space')
    lift.add_argument('--iters', type=int, help='substitution steps applied to b')
    lift.add_argument('--hist-bins', type=int, help='number of histogram bins')
    lift.add_argument('--points', action='store_const', const=True, help='export the points instead of a histogram')

    strip = commands.add_parser('strip', parents=[common], help='lattice points and windows')
    strip.add_argument('--pq-max', type=int, help='bound of |p| and |q|')

    diffract = commands.add_parser('diffract', parents=[common], help='diffraction of the m = 1 family')
    diffract.add_argument('--pp', action='store_const', const=True, help='export the Bragg peaks')
    diffract.add_argument('--ac', action='store_const', const=True, help='export the continuous density')
    diffract.add_argument('--pq-max', type=int, help='bound of |p| and |q| of the Fourier module points')
    diffract.add_argument('--kmax', type=float, help='largest wavenumber')
    diffract.add_argument('--kstep', type=float, help='step of the k-grid')
    diffract.add_argument('--truncation', type=int, help='terms of the density series')
    diffract.add_argument('--n', type=int, help='generation of the Bragg amplitude')
    diffract.add_argument('--empirical-iters', type=int, help='add the spectrum of one realisation of zeta^n(b)')

    return parser


def build_config(args: argparse.Namespace) -> RunConfig:
    """Resolve defaults, the ``--config`` file and the explicit flags."""

    config = RunConfig(command=args.command)

    if args.config:
        config = RunConfig.from_file(args.config).merged(command=args.command)

    params = {name: getattr(args, name, None) for name in CLI_DEFAULTS[args.command]}
    params.update({'format': args.format, 'out': args.out})

    config = config.merged(m=args.m, probs=args.probs, seed=args.rng_seed, params=params)
    _check_params(config)

    return config


def _param(config: RunConfig, name: str):
    if name in config.params:
        return config.params[name]

    return CLI_DEFAULTS[config.command].get(name, {'format': 'csv', 'out': None}.get(name))


def _check_params(config: RunConfig) -> None:
    """Raise ``ConfigError`` if a parameter of the command is out of range."""

    command = config.command

    try:
        for name, minimum in CLI_PARAM_MINIMA.get(command, {}).items():
            value = _param(config, name)
            if value is not None:
                raise_for_invalid_length(value, name=name, minimum=minimum)

        for name in CLI_POSITIVE_PARAMS.get(command, ()):
            raise_for_invalid_positive(_param(config, name), name=name)

        for name in CLI_WORD_PARAMS.get(command, ()):
            value = _param(config, name)
            letters = value if isinstance(value, str) else None

            # only the starting word may mark its origin
            if letters and name == 'seed_word' and letters.count('|') == 1:
                letters = letters.replace('|', '')

            if not letters or not is_valid_word(letters):
                raise ValueError(f'The value of {name} "{value}" is invalid. Enter a nonempty word over a and b.')

    except ValueError as error:
        raise ConfigError(str(error)) from error


def _random_subst(config: RunConfig) -> subst.RandomSubst:
    return subst.RandomSubst(config.m, config.probs, seed=config.seed)


def cmd_words(config: RunConfig) -> Output:
    """Exact words G_(m,n) or one realisation of zeta_m^k(seed word)."""

    if _param(config, 'exact'):
        n = _param(config, 'gen')

        if n is None:
            raise ConfigError('The generation "--gen" is required with "--exact".')

        record = exact.exact_record(exact.exact_words(config.m, n, _param(config, 'limit')))
        rows = [{'word': word} for word in record.get('words', [])]

        return Output(rows, ['word'], record)

    seed_word = subst.Word.from_string(_param(config, 'seed_word'))
    word = subst.iterate_random(_random_subst(config), seed_word, _param(config, 'iters'))

    record = {'m': config.m, 'iters': _param(config, 'iters'), 'length': len(word), 'origin': word.origin,
              'word': str(word)}

    return Output([{'word': str(word)}], ['word'], record)


def cmd_legal(config: RunConfig) -> Output:
    words = subst.legal_words(_random_subst(config), _param(config, 'ell'), _param(config, 'depth'))
    record = {'m': config.m, 'ell': words.ell, 'count': len(words), 'words': list(words.sorted())}

    return Output([{'word': w} for w in words.sorted()], ['word'], record)


def cmd_entropy(config: RunConfig) -> Output:
    """The entropy table for m = 1 .. m_max."""

    rows = exact.entropy_table(range(1, _param(config, 'm_max') + 1), _param(config, 'truncation'))

    def chart(provenance: dict) -> str:
        xs = [row['m'] for row in rows]
        return svg_line_chart(xs, {'H': [row['value'] for row in rows]}, 'Topological entropy', provenance)

    return Output(rows, ['m', 'value', 'tail_bound', 'truncation'], {'entropy': rows}, chart)


def cmd_freqs(config: RunConfig) -> Output:
    system = measure.build_induced(_random_subst(config), _param(config, 'ell'))
    rows = [{'word': w, 'measure': mu} for w, mu in system.measure().items()]

    def chart(provenance: dict) -> str:
        xs = list(range(len(rows)))
        return svg_stem_chart(xs, [row['measure'] for row in rows], 'Cylinder measure', provenance, name='a')

    return Output(rows, ['word', 'measure'], system.to_record(), chart)


def cmd_birkhoff(config: RunConfig) -> Output:
    rs = _random_subst(config)
    word = _param(config, 'word')
    system = measure.build_induced(rs, len(word))

    if word not in system.alphabet:
        raise ConfigError(f'The word "{word}" is not legal for m = {config.m}. Enter a legal word.')

    report = measure.birkhoff_check(
        rs,
        word,
        _param(config, 'N'),
        _param(config, 'trials'),
        s=_param(config, 'offset'),
        system=system
    )

    return Output([report], list(report), report)


def cmd_lift(config: RunConfig) -> Output:
    """Lift one realisation of zeta_m^k(b), as points or as a histogram by letter."""

    word = subst.iterate_random(_random_subst(config), subst.Word.from_string('b'), _param(config, 'iters'))
    points = geometry.realize(word, config.m)
    lifted = geometry.lift(points)

    inside = geometry.super_window(config.m).contains_points(points)
    summary = {
        'm': config.m,
        'points': len(points),
        'a_fraction': float(np.mean(points.letters == 0)) if len(points) else 0.0,
        'outside_super_window': int(np.count_nonzero(~inside))
    }

    if summary['outside_super_window']:
        LOGGER.warning('%d lifted points lie outside the super window.', summary['outside_super_window'])

    if _param(config, 'points'):
        rows = geometry.lift_rows(points)

        def chart(provenance: dict) -> str:
            series = {
                letter: (points.physical[points.letters == code], lifted.internal[points.letters == code])
                for letter, code in (('a', 0), ('b', 1))
            }
            return svg_scatter_chart(series, 'Lifted control points', provenance)

        return Output(rows, ['physical', 'internal', 'letter'], {**summary, 'lift': rows}, chart)

    rows = geometry.histogram_export(lifted, _param(config, 'hist_bins'), m=config.m)

    def chart(provenance: dict) -> str:
        edges = [row['bin_lo'] for row in rows] + [rows[-1]['bin_hi']] if rows else []
        counts = {'a': [row['count_a'] for row in rows], 'b': [row['count_b'] for row in rows]}
        return svg_histogram(edges, counts, 'Internal coordinates by letter', provenance)

    return Output(rows, ['bin_lo', 'bin_hi', 'count_a', 'count_b'], {**summary, 'histogram': rows}, chart)


def cmd_strip(config: RunConfig) -> Output:
    data = geometry.strip_export(config.m, _param(config, 'pq_max'))
    rows = data['points']

    def chart(provenance: dict) -> str:
        series = {
            name: ([r['physical'] for r in rows if r['in_union'] == flag], [r['internal'] for r in rows if r['in_union'] == flag])
            for name, flag in (('inside', True), ('outside', False))
        }
        return svg_scatter_chart(series, 'Lattice points and windows', provenance)

    return Output(rows, ['p', 'q', 'physical', 'internal', 'in_union', 'in_super'], data, chart)


def cmd_diffract(config: RunConfig) -> Output:
    """Bragg peaks (``--pp``) and/or the continuous density (``--ac``) for m = 1."""

    if config.m != 1:
        raise ConfigError(f'The diffraction is available for m = 1 only, got m = {config.m}.')

    kgrid = np.arange(0.0, _param(config, 'kmax') + _param(config, 'kstep') / 2, _param(config, 'kstep'))

    patch = None
    if _param(config, 'empirical_iters') is not None:
        word = subst.iterate_random(_random_subst(config), subst.Word.from_string('b'), _param(config, 'empirical_iters'))
        patch = geometry.realize(word, 1)

    table = diffraction.spectrum_table(
        kgrid,
        config.probs,
        max_pq=_param(config, 'pq_max'),
        kmax=_param(config, 'kmax'),
        truncation=_param(config, 'truncation'),
        n=_param(config, 'n'),
        patch=patch
    )

    want_pp = _param(config, 'pp') or not _param(config, 'ac')

    if want_pp:
        rows = table['pp']

        def chart(provenance: dict) -> str:
            return svg_stem_chart([r['k'] for r in rows], [r['amplitude'] for r in rows], 'Bragg peaks', provenance)

        return Output(rows, ['k', 'amplitude', 'ifs', 'p', 'q', 'converged'], table, chart)

    rows = table['ac']

    def chart(provenance: dict) -> str:
        return svg_line_chart([r['k'] for r in rows], {'ac': [r['phi'] for r in rows]}, 'Continuous density', provenance)

    return Output(rows, ['k', 'phi'], table, chart)


COMMANDS = {
    'words': cmd_words,
    'legal': cmd_legal,
    'entropy': cmd_entropy,
    'freqs': cmd_freqs,
    'birkhoff': cmd_birkhoff,
    'lift': cmd_lift,
    'strip': cmd_strip,
    'diffract': cmd_diffract
}


def render(config: RunConfig, output: Output) -> str:
    """Render ``output`` in the format of ``config``."""

    fmt = _param(config, 'format')
    provenance = config.provenance()

    if fmt == 'json':
        return to_json(output.document, provenance) + '\n'

    if fmt == 'svg':
        if output.chart is None:
            raise ConfigError(f'The format "svg" is not available for the command "{config.command}".')

        return output.chart(provenance) + '\n'

    return to_csv(output.rows, provenance, output.columns)


def _configure_logging(args: argparse.Namespace) -> None:
    level = logging.ERROR if args.quiet else max(logging.DEBUG, logging.WARNING - 10 * args.verbose)
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s', stream=sys.stderr)


def main(argv: List[str] = None, stdout=None) -> int:
    """Run the command line and return its exit code."""

    stdout = stdout if stdout is not None else sys.stdout
    args = build_parser().parse_args(argv)
    _configure_logging(args)

    path = None
    try:
        config = build_config(args)
        text = render(config, COMMANDS[config.command](config))

        path = _param(config, 'out')
        if path:
            with open(path, mode='w', encoding='utf-8') as out_file:
                out_file.write(text)

            if not args.quiet:
                Status.run('success', f'{config.command}: wrote {path} (config {config.digest()}).')
        else:
            stdout.write(text)

    except ConfigError as error:
        Status.run('error', f'Configuration error: {error}')
        return EXIT_CONFIG_ERROR

    except SizeLimitError as error:
        Status.run('error', f'Size limit: {error}')
        return EXIT_RESOURCE_LIMIT

    except OSError as error:
        Status.run('error', f'Cannot access "{error.filename or path}": {error.strerror or error}')
        return EXIT_FAILURE

    except (NobleMeansError, ValueError) as error:
        Status.run('error', str(error))
        return EXIT_FAILURE

    return EXIT_OK
