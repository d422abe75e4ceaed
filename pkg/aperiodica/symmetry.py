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
:mod:`symmetry` -- Symmetry and Aperiodicity
============================================
Exact point groups, reflection and rotation centres, period detection, LI
symmetry, statistical symmetry and the derived strong aperiodicity verdict.
"""
from collections import Counter
import cmath
import logging
import math

import numpy as np
from six.moves import range

from . import conf
from .constants import VERDICT
from .cyclotomic import CycloNumber
from .delone import (
    LIReport, anchored_clusters, check_li_window, cluster_keys,
    li_core_radius, li_full_radius, smallest_key)
from .exceptions import (
    CoincidentCentersError, InvalidOrderError, NonExactIsometryError,
    RadiusTooLargeError, TooFewPointsError, WindowExceededError)
from .geometry import Isometry, difference_set


logger = logging.getLogger(__name__)


def _about(rot, reflect, center):
    """The isometry ``x -> rot * (conj or id)(x - c) + c``."""
    c = center
    shift = (c.conj() if reflect else c)
    return Isometry(rot, reflect, c - rot * shift)


def _invariant(s, g, points):
    return all(g.apply(p) in s for p in points)


def _promoted(s, n):
    if s.n == n:
        return s
    if s.n == 4 and n == 8:
        return s.promote(8)
    raise NonExactIsometryError(
        'Isometry in Q(zeta_{}) cannot act on a set in Q(zeta_{})'.format(
            n, s.n))


class PointGroupReport(object):
    def __init__(self, center, rotations, reflections, radius,
                 rotation_order=None):
        self.center = center
        self.rotations = list(rotations)
        self.reflections = list(reflections)
        self.radius = radius
        self.rotation_order = rotation_order or len(self.rotations)

    @property
    def reflection_axes(self):
        """
        Axis directions as exact, not normalised, numbers ``d`` fixed by the
        linear part ``x -> rot * conj(x)``, i.e. ``d = x + rot * conj(x)``
        for ``x = 1``, or for ``x = zeta_n`` when ``rot = -1``.
        """
        axes = []
        for r in self.reflections:
            x = CycloNumber.rational(r.n, 1)
            d = x + r.rot * x.conj()
            if d.is_zero():
                x = CycloNumber.zeta(r.n)
                d = x + r.rot * x.conj()
            axes.append(d)
        return axes

    @property
    def axis_angles(self):
        """Axis angles in degrees in ``[0, 180)``."""
        return sorted(round(math.degrees(cmath.phase(r.rot.embed()) / 2)
                            % 180, 9) for r in self.reflections)

    @property
    def group_name(self):
        if self.reflections:
            return 'D{}'.format(self.rotation_order)
        return 'C{}'.format(self.rotation_order)

    @property
    def operations(self):
        return self.rotations + self.reflections

    @property
    def order(self):
        return len(self.operations)

    def to_dict(self):
        return {
            'center': str(self.center),
            'group_name': self.group_name,
            'rotation_order': self.rotation_order,
            'reflection_axes_deg': self.axis_angles,
            'radius': float(self.radius),
        }


def exact_point_group(s, center=None, n_max=None):
    """
    Rotations and reflections about `center` mapping the set, within the
    ball of radius ``window - |center|`` around the centre, into itself.
    Every symmetry maps the point nearest to the centre onto a point at the
    same exact distance, which yields the candidates; each is then verified
    exactly.

    Returns:
        :class:`PointGroupReport`
    """
    n_max = n_max or conf.MAX_POINT_GROUP_ORDER
    if not 1 <= n_max <= 24:
        raise InvalidOrderError('n_max must lie in 1..24')
    c = center if center is not None else CycloNumber.rational(s.n, 0)
    if float(abs(c)) > float(s.window) / 2:
        raise WindowExceededError(
            'Centre {} is outside half the window {}'.format(c, s.window))
    radius = float(s.window) - abs(c)
    zc = c.embed()
    inner = [p for p in s.within(radius, (zc.real, zc.imag))]
    others = sorted((p for p in inner if p != c),
                    key=lambda p: abs(p.embed() - zc))
    if not others:
        raise TooFewPointsError('No point next to the centre')
    p0 = others[0]
    d0 = (p0 - c).abs2()
    r0 = abs(p0.embed() - zc)
    orbit = [q for q in others
             if abs(abs(q.embed() - zc) - r0) < 1e-7 and (q - c).abs2() == d0]

    rotations, reflections = [], []
    for q in orbit:
        rot = (q - c) / (p0 - c)
        order = rot.root_of_unity_order(n_max)
        if order is not None:
            g = _about(rot, False, c)
            if _invariant(s, g, inner):
                rotations.append((order, g))
        rot = (q - c) / (p0 - c).conj()
        g = _about(rot, True, c)
        if _invariant(s, g, inner):
            reflections.append(g)

    # the full rotation group is cyclic; keep its largest subgroup of order
    # at most n_max and the reflections of one matching dihedral subgroup
    n = max(order for order, _ in rotations)
    rotations = [g for order, g in rotations if n % order == 0]
    reflections.sort(key=lambda r: cmath.phase(r.rot.embed()) % (2 * math.pi))
    if reflections:
        first = reflections[0].rot
        orders = [(r.rot / first).root_of_unity_order(
            conf.ROOT_OF_UNITY_BOUND) for r in reflections]
        reflections = [r for r, k in zip(reflections, orders)
                       if k is not None and n % k == 0]

    report = PointGroupReport(c, rotations, reflections, radius, n)
    logger.info('Point group about {}: {} on radius {:.3f}'.format(
        c, report.group_name, radius))
    return report


def reflection_period_1d(x, y):
    """
    Period ``2|x - y|`` implied by reflection symmetry in two distinct
    centres.

    Raises:
        CoincidentCentersError: ``x == y``
    """
    if x == y:
        raise CoincidentCentersError('Reflection centres coincide')
    d = x - y
    if d.embed().real < 0:
        d = -d
    return 2 * d


class ReflectionPeriodReport(object):
    def __init__(self, period, premise_x, premise_y, period_ok, radius):
        self.period = period
        self.premise_x = premise_x
        self.premise_y = premise_y
        self.period_ok = period_ok
        self.radius = radius

    @property
    def ok(self):
        """The implication holds on the sample."""
        return not (self.premise_x and self.premise_y) or self.period_ok

    def to_dict(self):
        return {
            'period': str(self.period),
            'premise_x': self.premise_x,
            'premise_y': self.premise_y,
            'period_ok': self.period_ok,
            'radius': self.radius,
        }


def _reflection_invariant(s, x):
    radius = float(s.window) - abs(x)
    zx = x.embed()
    return all(2 * x - p in s for p in s.within(radius, (zx.real, zx.imag)))


def _translation_invariant(s, t):
    radius = float(s.window) - abs(t)
    if radius <= 0:
        return False
    return all(p + t in s and p - t in s for p in s.within(radius))


def check_reflection_period(s, x, y):
    """
    On a one-dimensional sample: whether reflection symmetry in `x` and in
    `y` hold (each within the window shrunk by the centre) and whether the
    translation by ``2|x - y|`` holds on the window shrunk by the period.
    """
    period = reflection_period_1d(x, y)
    return ReflectionPeriodReport(
        period, _reflection_invariant(s, x), _reflection_invariant(s, y),
        _translation_invariant(s, period), float(s.window) - abs(period))


def reflection_centres(s, radius=None):
    """
    Exact reflection centres of a one-dimensional sample within `radius`
    (a quarter of the window by default). A centre maps the point nearest
    to the origin onto another point, so centres are midpoints.
    """
    radius = float(s.window) / 4 if radius is None else float(radius)
    if not s.points:
        return []
    k, _ = s.nearest((0.0, 0.0))
    p0 = s.points[k]
    centres = []
    for q in s.within(2 * radius + abs(p0)):
        c = (p0 + q) / 2
        if abs(c) <= radius + conf.FLOAT_TOLERANCE and \
                _reflection_invariant(s, c):
            centres.append(c)
    return sorted(set(centres), key=lambda v: v.sort_key())


def period_lattice_from_centres(centres):
    """
    Smallest period generated by pairs of reflection centres, ``2 d`` with
    ``d`` the smallest distance between two centres, or None.
    """
    if len(centres) < 2:
        return None
    ordered = sorted(centres, key=lambda v: v.embed().real)
    gaps = [b - a for a, b in zip(ordered, ordered[1:])]
    return 2 * min(gaps, key=lambda v: v.embed().real)


def rotation_center_obstruction(n):
    """
    Distance factors ``|zeta^l + zeta^-l - 1| = |2 cos(2 pi l / n) - 1|``
    between rotation centres for ``1 <= l < n``. A value in ``(0, 1)`` means
    a second centre forces centres accumulating, so n-fold symmetry is non
    crystallographic exactly when such a value exists.

    Raises:
        InvalidOrderError: ``n < 1``
    """
    if n < 1:
        raise InvalidOrderError('Rotation order must be at least 1')
    values = []
    for l in range(1, n):
        v = abs(2 * math.cos(2 * math.pi * l / n) - 1)
        values.append(0.0 if v < 1e-9 else v)
    nonzero = [v for v in values if v > 0]
    small = [v for v in nonzero if v < 1 - 1e-12]
    return {
        'n': n,
        'values': sorted(set(round(v, 12) for v in values)),
        'min_factor': min(nonzero) if nonzero else None,
        'classification': (VERDICT.non_crystallographic if small
                           else VERDICT.crystallographic),
    }


class PeriodReport(object):
    def __init__(self, candidate_periods, rank, dim, window, tested):
        self.candidate_periods = list(candidate_periods)
        self.rank = rank
        self.dim = dim
        self.window = window
        self.tested = tested

    @property
    def classification(self):
        if self.rank == 0:
            return VERDICT.non_periodic
        if self.rank == self.dim:
            return VERDICT.crystallographic
        return VERDICT.rank_1

    def to_dict(self):
        return {
            'candidate_periods': [str(t) for t in self.candidate_periods],
            'rank': self.rank,
            'classification': self.classification,
            'window': float(self.window),
            'tested': self.tested,
        }


def _survives(s, t, min_fraction):
    radius = float(s.window) - abs(t)
    points = sorted(s.within(radius), key=abs)
    if not points:
        return False
    allowed = int(math.floor((1 - min_fraction) * len(points) + 1e-9))
    misses = 0
    for p in points:
        if p + t not in s or p - t not in s:
            misses += 1
            if misses > allowed:
                return False
    return True


def span_rank(vectors):
    """Rank of the real span of the embedded vectors."""
    if not vectors:
        return 0
    m = np.array([[v.embed().real, v.embed().imag] for v in vectors])
    return int(np.linalg.matrix_rank(m, tol=1e-9))


def detect_periods(s, min_survivor_fraction=1.0):
    """
    Translations ``t`` with ``|t| <= window/4`` taken from the difference set
    that keep the set invariant on ``B_(window - |t|)(0)``. The rank of the
    real span of the survivors classifies the set at this scale.
    """
    candidates = [t for t in difference_set(s, float(s.window) / 4)
                  if not t.is_zero()]
    candidates.sort(key=lambda v: (abs(v), v.sort_key()))
    survivors = [t for t in candidates
                 if _survives(s, t, min_survivor_fraction)]
    report = PeriodReport(survivors, span_rank(survivors), s.dim, s.window,
                          len(candidates))
    logger.info('{} of {} translations survive: {}'.format(
        len(survivors), len(candidates), report.classification))
    return report


def crystallographic_hull(s, periods):
    """
    Representatives of the set modulo the lattice spanned by the shortest
    independent periods. For a lattice sample the hull is the torus
    ``R^d / per`` and each representative is one point of the fundamental
    domain.

    Returns:
        dict with the lattice ``basis`` and the ``representatives``
    """
    basis = []
    for t in sorted(periods, key=abs):
        if span_rank(basis + [t]) > len(basis):
            basis.append(t)
        if len(basis) == s.dim:
            break
    if not basis:
        return {'basis': [], 'representatives': list(s.points)}
    m = np.array([[b.embed().real, b.embed().imag] for b in basis]).T
    reps = set()
    for p in s.within(float(s.window) / 2):
        z = p.embed()
        coeffs = np.linalg.lstsq(m, np.array([z.real, z.imag]), rcond=None)[0]
        q = p
        for b, x in zip(basis, coeffs):
            q = q - int(math.floor(x + 1e-9)) * b
        reps.add(q)
    return {'basis': basis,
            'representatives': sorted(reps, key=lambda v: v.sort_key()),
            'torus_dimension': len(basis)}


def _check_linear(R):
    if not R.is_linear():
        raise NonExactIsometryError('Only linear isometries are accepted')
    if R.rot.root_of_unity_order(conf.ROOT_OF_UNITY_BOUND) is None:
        raise NonExactIsometryError(
            'Rotation {} is not a root of unity of order <= {}'.format(
                R.rot, conf.ROOT_OF_UNITY_BOUND))


def li_symmetry_test(s, R, rho, reference=None):
    """
    Whether the linear isometry `R` is an LI symmetry at scale rho, i.e.
    whether ``R s`` and ``s`` are locally indistinguishable. The clusters
    of the LI core of ``s`` and their images under ``R`` and ``R^-1`` are
    looked up among all anchored clusters of ``s``, which is the same
    certificate as ``li_indistinguishable(s, R s, rho)``.

    A patch of a fixed-point tiling is often too small to show the rotated
    copies of the clusters near its seed. A `reference`, a larger set of
    the same LI class (for instance the vertex set of a further inflated
    patch of the same system), is then searched instead of ``s``; the core
    clusters of ``s`` themselves must occur in it as well.

    Raises:
        NonExactIsometryError: `R` has a translation part or its rotation is
            not a root of unity
        RadiusTooLargeError: a window is smaller than ``4 rho``
    """
    _check_linear(R)
    s = _promoted(s, R.n)
    ref = s if reference is None else _promoted(reference, R.n)
    check_li_window(s, rho)
    check_li_window(ref, rho)

    core = cluster_keys(s, rho, li_core_radius(s, rho))
    known = cluster_keys(ref, rho, li_full_radius(ref, rho))
    cores = {'s': li_core_radius(s, rho),
             'reference': li_full_radius(ref, rho)}
    checks = [('R', R), ('R^-1', R.inverse())]
    if reference is not None:
        checks.insert(0, ('reference', None))
    for name, g in checks:
        image = core if g is None else set(
            frozenset(g.apply(v) for v in k) for k in core)
        missing = image.difference(known)
        if missing:
            return LIReport(False, rho, smallest_key(missing), name, cores)
    return LIReport(True, rho, cores=cores)


class StatisticalSymmetryReport(object):
    """
    Attributes:
        max_freq_discrepancy (float): largest relative discrepancy
            ``|f(K) - f(R K)| / max(f(K), f(R K))`` over the judged classes
        per_class (list): the judged relative discrepancies, largest first
        total_variation (float): total variation distance of the frequency
            distributions of ``s`` and ``R s``, over all classes
        min_count (int): classes with fewer anchors than this, in ``s`` and
            in ``R s`` alike, are not judged
        excluded (int): number of classes left out by `min_count`
    """
    def __init__(self, discrepancy, per_class, total_variation, tolerance,
                 rho, anchors, min_count, excluded):
        self.max_freq_discrepancy = discrepancy
        self.per_class = per_class
        self.total_variation = total_variation
        self.tolerance = tolerance
        self.rho = rho
        self.anchors = anchors
        self.min_count = min_count
        self.excluded = excluded

    @property
    def judged(self):
        return len(self.per_class)

    @property
    def verdict(self):
        return bool(self.per_class) and \
            self.max_freq_discrepancy <= self.tolerance

    def to_dict(self):
        return {
            'max_freq_discrepancy': self.max_freq_discrepancy,
            'total_variation': self.total_variation,
            'verdict': self.verdict,
            'tolerance': self.tolerance,
            'rho': float(self.rho),
            'anchors': self.anchors,
            'min_count': self.min_count,
            'judged_classes': self.judged,
            'excluded_classes': self.excluded,
        }


def statistical_symmetry(s, R, rho, tolerance=None, min_count=None):
    """
    Compare the per-area frequency of every rho-cluster class ``K`` of ``s``
    with that of its image ``R K``. Frequencies are taken over the anchor
    ball of radius ``window - rho``, each anchor weighted by the taper
    ``(1 - |x|^2 / r^2)^2`` so that clusters near the edge of the ball
    count less. The verdict compares the largest relative discrepancy with
    `tolerance`; classes with fewer than `min_count` anchors in ``s`` and in
    ``R s`` are not judged and are reported as excluded.
    """
    tolerance = conf.STATISTICAL_TOLERANCE if tolerance is None else tolerance
    min_count = conf.STATISTICAL_MIN_COUNT if min_count is None else min_count
    _check_linear(R)
    s = _promoted(s, R.n)
    if float(rho) > float(s.window) / 4 + conf.FLOAT_TOLERANCE:
        raise RadiusTooLargeError(
            'Cluster radius {} exceeds a quarter of the window {}'.format(
                rho, s.window))
    anchor_radius = float(s.window) - float(rho)
    anchored = anchored_clusters(s, rho, anchor_radius)
    if not anchored:
        raise TooFewPointsError('No anchors within {}'.format(anchor_radius))

    counts, weights = Counter(), Counter()
    for x, k in anchored:
        counts[k] += 1
        weights[k] += (1 - abs(x.embed()) ** 2 / anchor_radius ** 2) ** 2
    total = float(sum(weights.values()))
    freq = dict((k, w / total) for k, w in weights.items())

    image = dict((k, frozenset(R.apply(v) for v in k)) for k in counts)
    per_class, excluded = [], 0
    for k in counts:
        f, g = freq[k], freq.get(image[k], 0.0)
        if max(counts[k], counts.get(image[k], 0)) < min_count:
            excluded += 1
            continue
        per_class.append(abs(f - g) / max(f, g))
    per_class.sort(reverse=True)
    discrepancy = per_class[0] if per_class else 0.0

    moved = Counter()
    for k, f in freq.items():
        moved[image[k]] += f
    keys = set(freq) | set(moved)
    total_variation = sum(abs(freq.get(k, 0.0) - moved[k])
                          for k in keys) / 2

    logger.info('Statistical symmetry discrepancy {:.4f} over {} classes, '
                '{} below {} anchors'.format(discrepancy, len(per_class),
                                             excluded, min_count))
    return StatisticalSymmetryReport(discrepancy, per_class, total_variation,
                                     tolerance, rho, len(anchored),
                                     min_count, excluded)


def strong_aperiodicity(period_report, point_group_report=None):
    """
    Derived verdict: no period at the tested scale and a finite point group.
    Point groups of finite reports are always finite; screw symmetries of
    layered three-dimensional tilings cannot be seen by a planar check.
    """
    aperiodic = period_report.rank == 0
    finite = point_group_report is None or point_group_report.order > 0
    return {
        'aperiodic_at_scale': aperiodic,
        'finite_point_group': finite,
        'strongly_aperiodic_at_scale': aperiodic and finite,
        'window': float(period_report.window),
    }


__all__ = [
    'PointGroupReport', 'PeriodReport', 'ReflectionPeriodReport',
    'StatisticalSymmetryReport', 'exact_point_group', 'reflection_period_1d',
    'check_reflection_period', 'reflection_centres',
    'period_lattice_from_centres', 'rotation_center_obstruction',
    'detect_periods', 'crystallographic_hull', 'li_symmetry_test',
    'statistical_symmetry', 'strong_aperiodicity', 'span_rank',
]
