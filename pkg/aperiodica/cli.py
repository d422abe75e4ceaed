# This file is part of aperiodica.
#
# aperiodica is free software: you can redistribute it and/or modify it under
# the terms of the GNU Lesser General Public License as published by the Free
# Software Foundation, either version 2.1 of the License, or (at your option)
# any later version.
#
# aperiodica is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Lesser General Public License for more details.
#
# You should have received a copy of the GNU Lesser General Public License
# along with aperiodica.  If not, see <http://www.gnu.org/licenses/>.
"""
:mod:`cli` -- Command Line Interface
====================================
``aperiodica generate|sample|analyze|render|verify``. Reports are written to
standard output as JSON. Exit codes: 0 on success, 2 on usage errors or
invalid input, 3 when an analysed property is falsified.
"""
import argparse
from fractions import Fraction
import logging
import sys

from . import __version__, conf
from .constants import EXIT, SEED, SYSTEM, VERDICT
from .cyclotomic import CycloNumber, zeta, zeta10
from .delone import (
    cluster_classes, delone_radii, flc_profile, li_indistinguishable,
    local_topology_distance, repetitivity_radius, rubber_distance)
from .document import PatchDocument, dump_report, read_document, \
    write_document
from .ensemble import bernoulli_sampler, metric_aperiodicity_estimate, \
    shift_match_probability
from .exceptions import AperiodicaError
from .geometry import Isometry, merge_halves
from .inflation import (
    fixed_point_patch, get_rule, nesting_certificate, seed_period,
    tile_count_prediction, vertex_set, verify_stone_inflation)
from .lattice import LatticeZ2Q, lattice_intersect, scd_layer_analysis
from .log import setup_logger
from .matching import validate_matching_rules
from .render import render_svg, write_svg
from . import samples
from .symmetry import (
    detect_periods, exact_point_group, li_symmetry_test, statistical_symmetry,
    strong_aperiodicity)
from .utils.encoding import fraction_from_str
from .utils.settings import import_settings


logger = logging.getLogger(__name__)


class UsageError(Exception):
    """Bad combination of command line options."""


def _fraction(text):
    try:
        return fraction_from_str(text)
    except ValueError:
        try:
            return Fraction(float(text)).limit_denominator(10 ** 9)
        except ValueError:
            raise argparse.ArgumentTypeError(
                'not a number: {!r}'.format(text))


def _pair(text):
    parts = text.split(',')
    if len(parts) != 2:
        raise argparse.ArgumentTypeError('expected "cos,sin"')
    return tuple(_fraction(p) for p in parts)


def _fraction_list(text):
    return [_fraction(p) for p in text.split(',') if p.strip()]


# generate

def cmd_generate(args):
    patch = fixed_point_patch(args.system, args.seed, args.steps)
    if args.system == SYSTEM.penrose and not args.halves:
        patch = merge_halves(patch)
    points = vertex_set(patch) if args.with_points else None
    meta = {'seed': args.seed, 'steps': args.steps,
            'period': seed_period(args.system, args.seed),
            'generator': 'aperiodica {}'.format(__version__)}
    _output(PatchDocument(args.system, patch, points, meta), args.out)
    return EXIT.ok


# sample

SAMPLES = {
    'integers': lambda a: samples.integer_sample(a.window, a.shift),
    'half-integers': lambda a: samples.half_integer_sample(a.window),
    'defect': lambda a: samples.defect_sample(a.window, a.defects),
    'shifted-defect': lambda a: samples.shifted_defect_sample(
        a.shift, a.defect_shift, a.window),
    'square-lattice': lambda a: samples.square_lattice_sample(a.window),
    'row-lattice': lambda a: samples.row_lattice_sample(a.window),
    'fibonacci': lambda a: samples.fibonacci_sample(a.window),
    'non-flc': lambda a: samples.non_flc_sample(int(a.window)),
}


def cmd_sample(args):
    s = SAMPLES[args.kind](args)
    meta = {'kind': args.kind, 'window': str(args.window)}
    _output(PatchDocument(points=s, meta=meta), args.out)
    return EXIT.ok


def _output(document, path):
    if path in (None, '-'):
        sys.stdout.write(document.serialize())
    else:
        write_document(document, path)


# analyze

def _point_set(document, window=None):
    if document.points is not None:
        s = document.points
        return s.restrict(window) if window is not None else s
    if document.patch is None:
        raise UsageError('Document holds neither points nor tiles')
    return vertex_set(document.patch, window)


def _rotation(n, order, power, reflect):
    """The linear isometry ``x -> zeta_order^power (conj x)``."""
    if n == 4 and order == 8:
        n = 8
    if n % order == 0:
        rot = zeta(n, (power * n // order) % n)
    elif n == 5 and order == 10:
        rot = zeta10(power)
    else:
        raise UsageError(
            'A rotation of order {} is not exact in Q(zeta_{})'.format(
                order, n))
    return Isometry(rot, reflect)


def _load(args):
    if args.input is None:
        raise UsageError('analyze {} needs an input document'.format(
            args.analysis))
    return _point_set(read_document(args.input), args.window)


def analyze_radii(args):
    report = delone_radii(_load(args), args.margin)
    return report.to_dict(), report.warning is None


def analyze_flc(args):
    s = _load(args)
    growth = args.growth or [s.window / 2, s.window]
    report = flc_profile(s, args.radius, growth)
    return report.to_dict(), report.verdict != VERDICT.growing


def analyze_clusters(args):
    s = _load(args)
    classes = cluster_classes(s, args.rho)
    return {'rho': float(args.rho), 'window': float(s.window),
            'count': len(classes),
            'classes': [c.to_dict() for c in classes]}, True


def analyze_repetitivity(args):
    report = repetitivity_radius(_load(args), args.rho)
    return report.to_dict(), report.witnessed


def analyze_li(args):
    a = _load(args)
    b = _point_set(read_document(_require(args.other, '--other')),
                   args.window)
    report = li_indistinguishable(a, b, args.rho)
    return report.to_dict(), report.verdict


def analyze_distance(args):
    a = _load(args)
    b = _point_set(read_document(_require(args.other, '--other')),
                   args.window)
    metric = rubber_distance if args.metric == 'rubber' \
        else local_topology_distance
    return metric(a, b).to_dict(), True


def analyze_pointgroup(args):
    s = _load(args)
    center = CycloNumber.from_string(args.center) if args.center else None
    report = exact_point_group(s, center)
    ok = args.expect is None or report.group_name == args.expect
    return report.to_dict(), ok


def analyze_periods(args):
    s = _load(args)
    report = detect_periods(s)
    result = report.to_dict()
    result['strong_aperiodicity'] = strong_aperiodicity(report)
    return result, True


def analyze_lisym(args):
    s = _load(args)
    R = _rotation(s.n, args.order, args.power, args.reflect)
    reference = None
    if args.reference:
        reference = _point_set(read_document(args.reference))
    report = li_symmetry_test(s, R, args.rho, reference)
    return report.to_dict(), report.verdict


def analyze_statsym(args):
    s = _load(args)
    R = _rotation(s.n, args.order, args.power, args.reflect)
    report = statistical_symmetry(s, R, args.rho, args.tolerance)
    return report.to_dict(), report.verdict


def analyze_coincidence(args):
    g = LatticeZ2Q.integer()
    c, s = args.rotation
    h = g.rotated(c, s)
    result = {'intersection': lattice_intersect(g, h).to_dict(),
              'layers': scd_layer_analysis(g, (c, s), args.layers,
                                           args.one_sided).to_dict()}
    return result, True


def analyze_bernoulli(args):
    sampler = bernoulli_sampler(args.dim, args.p, args.box)
    estimate = metric_aperiodicity_estimate(sampler, args.trials, args.seed)
    result = estimate.to_dict()
    result['box'] = args.box
    result['p'] = args.p
    if args.dim == 1:
        result['union_bound'] = shift_match_probability(
            args.p, args.box)['union_bound']
    ok = args.tolerance is None or estimate.upper < args.tolerance
    return result, ok


ANALYSES = {
    'radii': analyze_radii,
    'flc': analyze_flc,
    'clusters': analyze_clusters,
    'repetitivity': analyze_repetitivity,
    'li': analyze_li,
    'distance': analyze_distance,
    'pointgroup': analyze_pointgroup,
    'periods': analyze_periods,
    'lisym': analyze_lisym,
    'statsym': analyze_statsym,
    'coincidence': analyze_coincidence,
    'bernoulli': analyze_bernoulli,
}


def _require(value, flag):
    if value is None:
        raise UsageError('{} is required'.format(flag))
    return value


def cmd_analyze(args):
    if args.analysis == 'statsym' and args.tolerance is None:
        args.tolerance = conf.STATISTICAL_TOLERANCE
    report, ok = ANALYSES[args.analysis](args)
    report['analysis'] = args.analysis
    report['holds'] = bool(ok)
    sys.stdout.write(dump_report(report) + '\n')
    return EXIT.ok if ok else EXIT.falsified


# render

def cmd_render(args):
    document = read_document(args.input)
    svg = render_svg(document, show_points=args.show_points,
                     show_arrows=not args.no_arrows, scale=args.scale)
    write_svg(svg, args.out)
    return EXIT.ok


# verify

def cmd_verify(args):
    stone = verify_stone_inflation(get_rule(args.system))
    result = {'system': args.system, 'stone': stone.to_dict()}
    ok = stone.ok
    if args.seed:
        patch = fixed_point_patch(args.system, args.seed, args.steps)
        predicted = tile_count_prediction(
            fixed_point_patch(args.system, args.seed, 0),
            args.steps * seed_period(args.system, args.seed))
        counts = dict(patch.type_counts())
        nesting = nesting_certificate(args.system, args.seed, args.steps)
        result.update({'seed': args.seed, 'steps': args.steps,
                       'type_counts': counts, 'predicted': predicted,
                       'nested': nesting})
        ok = ok and nesting and counts == dict(
            (k, v) for k, v in predicted.items() if v)
        if args.system != SYSTEM.pinwheel:
            merged = merge_halves(patch) \
                if args.system == SYSTEM.penrose else patch
            matching = validate_matching_rules(merged)
            result['matching'] = matching.to_dict()
            ok = ok and matching.ok
    result['holds'] = bool(ok)
    sys.stdout.write(dump_report(result) + '\n')
    return EXIT.ok if ok else EXIT.falsified


def build_parser():
    parser = argparse.ArgumentParser(
        prog='aperiodica',
        description='Inflation tilings and aperiodic order analysis.')
    parser.add_argument('--version', action='version',
                        version='%(prog)s {}'.format(__version__))
    parser.add_argument('--debug', action='store_true',
                        help='log at DEBUG level')
    sub = parser.add_subparsers(dest='command')
    sub.required = True

    systems = list(SYSTEM.all)
    seeds = [SEED.ab_square, SEED.ab_octagon, SEED.ab_star, SEED.penrose_sun,
             SEED.pinwheel_origin]

    p = sub.add_parser('generate', help='write a fixed-point patch')
    p.add_argument('--system', required=True, choices=systems)
    p.add_argument('--seed', required=True, choices=seeds)
    p.add_argument('--steps', type=int, default=0,
                   help='fixed-point iterations, each one seed period')
    p.add_argument('--halves', action='store_true',
                   help='keep Penrose half rhombi')
    p.add_argument('--with-points', action='store_true',
                   help='add the vertex set as a point-set block')
    p.add_argument('--out', default='-')
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser('sample', help='write a point-set sample')
    p.add_argument('kind', choices=sorted(SAMPLES))
    p.add_argument('--window', type=_fraction, default=Fraction(20))
    p.add_argument('--shift', type=_fraction, default=Fraction(0))
    p.add_argument('--defects', type=lambda t: [int(x) for x in t.split(',')],
                   default=[0])
    p.add_argument('--defect-shift', type=int, default=0)
    p.add_argument('--out', default='-')
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser('analyze', help='analyse a document')
    p.add_argument('analysis', choices=sorted(ANALYSES))
    p.add_argument('input', nargs='?')
    p.add_argument('--other', help='second document for li and distance')
    p.add_argument('--reference',
                   help='larger document of the same system for lisym')
    p.add_argument('--window', type=_fraction)
    p.add_argument('--rho', type=_fraction, default=Fraction(3, 2))
    p.add_argument('--tolerance', type=float)
    p.add_argument('--margin', type=_fraction, default=Fraction(2))
    p.add_argument('--radius', type=_fraction, default=Fraction(6, 5))
    p.add_argument('--growth', type=_fraction_list)
    p.add_argument('--metric', choices=['local', 'rubber'], default='local')
    p.add_argument('--center', help='cyclotomic string, e.g. "8:[0,0,0,0]"')
    p.add_argument('--expect', help='expected point group, e.g. D8')
    p.add_argument('--order', type=int, default=1)
    p.add_argument('--power', type=int, default=1)
    p.add_argument('--reflect', action='store_true')
    p.add_argument('--rotation', type=_pair,
                   default=(Fraction(4, 5), Fraction(3, 5)))
    p.add_argument('--layers', type=int, default=3)
    p.add_argument('--one-sided', action='store_true')
    p.add_argument('--dim', type=int, choices=[1, 2], default=1)
    p.add_argument('--p', type=float, default=0.5)
    p.add_argument('--box', type=int, default=64)
    p.add_argument('--trials', type=int, default=2000)
    p.add_argument('--seed', type=int, default=0)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser('render', help='draw a document as SVG')
    p.add_argument('input')
    p.add_argument('--out', required=True)
    p.add_argument('--show-points', action='store_true')
    p.add_argument('--no-arrows', action='store_true')
    p.add_argument('--scale', type=float)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser('verify', help='check an inflation rule')
    p.add_argument('--system', required=True, choices=systems)
    p.add_argument('--seed', choices=seeds)
    p.add_argument('--steps', type=int, default=1)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    """
    Entry point of the ``aperiodica`` script.

    Returns:
        int: process exit code
    """
    import_settings()
    import_settings(section='cli')

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code

    setup_logger('aperiodica',
                 level=logging.DEBUG if args.debug else logging.WARNING)
    try:
        return args.func(args)
    except (AperiodicaError, UsageError) as e:
        sys.stderr.write('aperiodica: error: {}\n'.format(e))
        return EXIT.usage
    except (IOError, OSError) as e:
        sys.stderr.write('aperiodica: error: {}\n'.format(e))
        return EXIT.usage


__all__ = ['build_parser', 'main']
