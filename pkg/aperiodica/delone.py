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
:mod:`delone` -- Delone Set Analysis
====================================
Finite-scale certificates for the Delone property, finite local complexity,
clusters, repetitivity, local indistinguishability and the local and rubber
topology distances. Every report states the window and radius it was
computed at; none of them is a statement about the infinite set.
"""
import logging
import math

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching
from scipy.spatial import cKDTree

from . import conf
from .constants import VERDICT
from .exceptions import RadiusTooLargeError, TooFewPointsError
from .geometry import PointSet, difference_set
from .utils.timeutils import elapsed, monotonic


logger = logging.getLogger(__name__)


def _grid(dim, radius, spacing):
    """Grid points ``spacing * Z^dim`` inside the closed ball of `radius`."""
    m = int(math.floor(radius / spacing))
    ticks = np.arange(-m, m + 1) * spacing
    if dim == 1:
        return np.column_stack([ticks, np.zeros_like(ticks)])
    xs, ys = np.meshgrid(ticks, ticks)
    pts = np.column_stack([xs.ravel(), ys.ravel()])
    return pts[np.hypot(pts[:, 0], pts[:, 1]) <= radius + 1e-12]


def _min_distance(s, points):
    """Exact squared minimal distance among `points` and its float root."""
    coords = np.array([[z.real, z.imag] for z in (p.embed() for p in points)])
    d, idx = cKDTree(coords).query(coords, k=2)
    best = d[:, 1].min()
    exact = None
    for a in np.nonzero(d[:, 1] <= best + 1e-9)[0]:
        v = (points[a] - points[idx[a, 1]]).abs2()
        if exact is None or v.embed().real < exact.embed().real:
            exact = v
    return exact, math.sqrt(exact.embed().real)


class DeloneReport(object):
    def __init__(self, r, R, grid_spacing, margin, window, min_distance2,
                 warning=None):
        self.r = r
        self.R = R
        self.grid_spacing = grid_spacing
        self.margin = margin
        self.window = window
        self.min_distance2 = min_distance2
        self.warning = warning

    def to_dict(self):
        return {
            'r': self.r,
            'R': self.R,
            'grid_spacing': self.grid_spacing,
            'margin': float(self.margin),
            'window': float(self.window),
            'min_distance_squared': str(self.min_distance2),
            'warning': self.warning,
        }


def delone_radii(s, margin):
    """
    Packing radius ``r`` (half the exact minimal distance) and covering
    radius ``R`` (largest distance from a grid point of spacing at most
    ``r/4`` to the set) on the ball of radius ``window - margin``.

    Raises:
        TooFewPointsError: fewer than two points in the interior
    """
    if float(margin) >= float(s.window):
        raise RadiusTooLargeError(
            'Margin {} is not smaller than the window {}'.format(
                margin, s.window))
    interior = float(s.window) - float(margin)
    points = s.within(interior)
    if len(points) < 2:
        raise TooFewPointsError(
            'Need two points within radius {}, found {}'.format(
                interior, len(points)))

    exact, dmin = _min_distance(s, points)
    r = dmin / 2
    spacing = r / conf.COVER_GRID_DIVISOR
    grid = _grid(s.dim, interior, spacing)
    dist, _ = s.tree.query(grid)
    R = float(dist.max())

    warning = None
    if R > float(margin):
        warning = ('too-sparse: covering radius {:.6f} exceeds the margin '
                   '{}, gaps may reach outside the window'.format(R, margin))
        logger.warning(warning)
    return DeloneReport(r, R, spacing, margin, s.window, exact, warning)


class FLCProfile(object):
    def __init__(self, radius, windows, counts):
        self.radius = radius
        self.windows = list(windows)
        self.counts = list(counts)

    @property
    def verdict(self):
        if len(self.counts) >= 2 and self.counts[-1] == self.counts[-2]:
            return VERDICT.consistent
        return VERDICT.growing

    def to_dict(self):
        return {
            'radius': float(self.radius),
            'windows': [float(w) for w in self.windows],
            'counts': self.counts,
            'verdict': self.verdict,
        }


def flc_profile(s, radius, growth):
    """
    Number of distinct difference vectors of length at most `radius` among
    the points within each window of `growth`.

    Raises:
        WindowExceededError: a window of `growth` exceeds ``s.window``
    """
    counts = []
    for w in growth:
        sub = s.restrict(w)
        counts.append(len(difference_set(sub, radius)))
    return FLCProfile(radius, growth, counts)


class ClusterClass(object):
    """
    A translation class of rho-clusters.

    Attributes:
        representative (tuple): exact offsets from the anchor, sorted
        multiplicity (int): number of anchors in the class
        radius: the cluster radius rho
        anchors (list): the anchors, in the order of the set
    """
    def __init__(self, representative, radius, anchors):
        self.representative = representative
        self.radius = radius
        self.anchors = list(anchors)

    @property
    def multiplicity(self):
        return len(self.anchors)

    @property
    def key(self):
        return frozenset(self.representative)

    def to_point_set(self):
        return PointSet(self.representative, self.radius)

    def to_dict(self):
        return {
            'representative': [str(v) for v in self.representative],
            'multiplicity': self.multiplicity,
            'radius': float(self.radius),
        }

    def __repr__(self):
        return 'ClusterClass({} points, multiplicity {})'.format(
            len(self.representative), self.multiplicity)


def _sorted_offsets(offsets):
    return tuple(sorted(offsets, key=lambda v: v.sort_key()))


def anchored_clusters(s, rho, anchor_radius):
    """
    Map each anchor ``x`` with ``|x| <= anchor_radius`` to the exact
    translation class key of ``(s - x) cap B_rho(0)``. The result is cached
    on the point set.
    """
    key = (rho, float(anchor_radius))
    cached = s._clusters.get(key)
    if cached is not None:
        return cached
    result = []
    for x in s.within(anchor_radius):
        z = x.embed()
        near = s.within(rho, (z.real, z.imag))
        result.append((x, frozenset(y - x for y in near)))
    s._clusters[key] = result
    return result


def cluster_keys(s, rho, anchor_radius):
    """The distinct class keys among :func:`anchored_clusters`."""
    return frozenset(k for _, k in anchored_clusters(s, rho, anchor_radius))


def li_core_radius(s, rho):
    """Radius of the anchors whose clusters an LI certificate looks up."""
    return conf.LI_CORE_FRACTION * (float(s.window) - float(rho))


def li_full_radius(s, rho):
    """Radius of the anchors an LI certificate looks clusters up among."""
    return float(s.window) - float(rho)


def check_li_window(s, rho):
    """
    Raises:
        RadiusTooLargeError: the window of `s` is smaller than ``4 rho``
    """
    if float(s.window) < 4 * float(rho) - conf.FLOAT_TOLERANCE:
        raise RadiusTooLargeError(
            'Window {} is smaller than 4 rho = {}'.format(s.window, 4 * rho))


def smallest_key(keys):
    """The class key with the lexicographically smallest offsets."""
    return min((_sorted_offsets(k) for k in keys),
               key=lambda r: [v.sort_key() for v in r])


def cluster_classes(s, rho):
    """
    Translation classes of the rho-clusters anchored at the points within
    ``window - rho``, ordered by their representative.

    Raises:
        RadiusTooLargeError: ``rho > window / 4``
    """
    if float(rho) > float(s.window) / 4 + conf.FLOAT_TOLERANCE:
        raise RadiusTooLargeError(
            'Cluster radius {} exceeds a quarter of the window {}'.format(
                rho, s.window))
    start = monotonic()
    groups = {}
    for x, key in anchored_clusters(s, rho, float(s.window) - float(rho)):
        groups.setdefault(key, []).append(x)
    classes = [ClusterClass(_sorted_offsets(k), rho, list(anchors))
               for k, anchors in groups.items()]
    classes.sort(key=lambda c: [v.sort_key() for v in c.representative])
    logger.debug('{} cluster classes at rho={} in {:.3f}s'.format(
        len(classes), rho, elapsed(start)))
    return classes


class RepetitivityReport(object):
    def __init__(self, rep, witnessed, rho, test_radius, grid_spacing,
                 classes, single_classes=0):
        self.rep = rep
        self.witnessed = witnessed
        self.rho = rho
        self.test_radius = test_radius
        self.grid_spacing = grid_spacing
        self.classes = classes
        self.single_classes = single_classes

    @property
    def verdict(self):
        return self.rep if self.witnessed else VERDICT.not_witnessed

    def to_dict(self):
        return {
            'rep': self.rep,
            'witnessed': self.witnessed,
            'rho': float(self.rho),
            'test_radius': self.test_radius,
            'grid_spacing': self.grid_spacing,
            'classes': len(self.classes),
            'single_classes': self.single_classes,
        }


def repetitivity_radius(s, rho):
    """
    Smallest radius ``Rep`` (up to the grid spacing) such that every ball of
    radius ``Rep`` centred in the test region contains an anchor of every
    cluster class. The test region is the ball of half the anchor window, so
    ``Rep`` is only witnessed when it does not exceed that half, and when
    every class has at least two anchors: a class seen once shows no
    recurrence at all.
    """
    classes = cluster_classes(s, rho)
    anchor_radius = float(s.window) - float(rho)
    test_radius = anchor_radius / 2
    _, dmin = _min_distance(s, s.within(anchor_radius))
    spacing = dmin / 2 / conf.COVER_GRID_DIVISOR
    grid = _grid(s.dim, test_radius, spacing)

    rep = 0.0
    for c in classes:
        anchors = np.array([[z.real, z.imag] for z in
                            (a.embed() for a in c.anchors)])
        dist, _ = cKDTree(anchors).query(grid)
        rep = max(rep, float(dist.max()))
    single = [c for c in classes if c.multiplicity < 2]
    witnessed = rep <= test_radius and not single
    logger.debug('Repetitivity at rho={}: {:.6f} ({})'.format(
        rho, rep, 'witnessed' if witnessed else 'not witnessed'))
    return RepetitivityReport(rep, witnessed, rho, test_radius, spacing,
                              classes, len(single))


class LIReport(object):
    def __init__(self, verdict, rho, counterexample=None, direction=None,
                 cores=None):
        self.verdict = verdict
        self.rho = rho
        self.counterexample = counterexample
        self.direction = direction
        self.cores = cores

    def __bool__(self):
        return self.verdict

    __nonzero__ = __bool__

    def to_dict(self):
        return {
            'verdict': self.verdict,
            'rho': float(self.rho),
            'direction': self.direction,
            'cores': self.cores,
            'counterexample': ([str(v) for v in self.counterexample]
                               if self.counterexample is not None else None),
        }


def li_indistinguishable(a, b, rho):
    """
    rho-scale certificate of local indistinguishability: each cluster class
    anchored in the core of one set (``LI_CORE_FRACTION`` of its anchor
    window) has to occur anywhere in the other set, in both directions.

    Returns:
        :class:`LIReport`, with a counterexample cluster on failure
    """
    for s in (a, b):
        check_li_window(s, rho)

    cores = {'a': li_core_radius(a, rho), 'b': li_core_radius(b, rho)}
    for name, src, dst in (('a->b', a, b), ('b->a', b, a)):
        missing = (cluster_keys(src, rho, li_core_radius(src, rho)) -
                   cluster_keys(dst, rho, li_full_radius(dst, rho)))
        if missing:
            return LIReport(False, rho, smallest_key(missing), name, cores)
    return LIReport(True, rho, cores=cores)


class DistanceReport(object):
    def __init__(self, epsilon, window_limited, resolution, translation=None):
        self.epsilon = epsilon
        self.window_limited = window_limited
        self.resolution = resolution
        self.translation = translation

    def __float__(self):
        return float(self.epsilon)

    def to_dict(self):
        return {
            'epsilon': self.epsilon,
            'window_limited': self.window_limited,
            'resolution': self.resolution,
            'translation': (str(self.translation)
                            if self.translation is not None else None),
        }


def _bisect(condition, resolution):
    """
    Smallest epsilon on the grid ``resolution * Z`` in ``[resolution, 1]``
    for which the monotone `condition` holds, capped at 1.
    """
    lo_steps, hi_steps = 1, int(round(1 / resolution))
    ok, info = condition(hi_steps * resolution)
    if not ok:
        return 1.0, info, True
    best = info
    ok, info = condition(lo_steps * resolution)
    if ok:
        return lo_steps * resolution, info, False
    while hi_steps - lo_steps > 1:
        mid = (lo_steps + hi_steps) // 2
        ok, info = condition(mid * resolution)
        if ok:
            hi_steps, best = mid, info
        else:
            lo_steps = mid
    return hi_steps * resolution, best, False


def _within_exact(points, radius):
    limit = radius + conf.FLOAT_TOLERANCE
    return set(p for p in points if abs(p) <= limit)


def local_topology_distance(a, b, resolution=None):
    """
    Smallest epsilon such that ``b cap B_(1/eps)(0) = (t + a) cap B_(1/eps)(0)``
    for a translation ``|t| <= eps``. The candidates for ``t`` move a point of
    `a` onto the point of `b` nearest to the origin. When the windows are too
    small to read the ball of radius ``1/eps`` the comparison radius is cut
    and the result is flagged as window limited. Distances are capped at 1.
    """
    resolution = resolution or conf.EPSILON_RESOLUTION
    if not a.points or not b.points:
        raise TooFewPointsError('Both sets need points')
    k, _ = b.nearest((0.0, 0.0))
    b0 = b.points[k]
    z0 = b0.embed()

    def condition(eps):
        for x in a.within(eps, (z0.real, z0.imag)):
            t = b0 - x
            r_t = abs(t)
            if r_t > eps + conf.FLOAT_TOLERANCE:
                continue
            radius = min(1.0 / eps, float(a.window) - r_t, float(b.window))
            lhs = _within_exact(b.within(radius + 1e-6), radius)
            rhs = _within_exact((p + t for p in a.within(radius + r_t + 1e-6)),
                                radius)
            if lhs == rhs:
                return True, (t, radius < 1.0 / eps)
        return False, None

    eps, info, _ = _bisect(condition, resolution)
    t, limited = info if info is not None else (None, False)
    report = DistanceReport(eps, limited, resolution, t)
    logger.debug('Local topology distance {:.6f} (window limited: {})'.format(
        eps, report.window_limited))
    return report


def _perfect_match(src, dst, eps):
    """Whether every row of `src` is matched to a distinct row of `dst`."""
    if len(src) == 0:
        return True
    if len(dst) < len(src):
        return False
    pairs = cKDTree(src).query_ball_tree(cKDTree(dst), eps + 1e-12)
    rows, cols = [], []
    for i, js in enumerate(pairs):
        if not js:
            return False
        rows.extend([i] * len(js))
        cols.extend(js)
    graph = csr_matrix((np.ones(len(rows)), (rows, cols)),
                       shape=(len(src), len(dst)))
    match = maximum_bipartite_matching(graph, perm_type='column')
    return bool(np.all(match >= 0))


def rubber_distance(a, b, resolution=None):
    """
    Smallest epsilon such that the points of each set in ``B_(1/eps)(0)`` can
    be moved, each by at most epsilon and to distinct targets, onto points of
    the other set. Decided by bipartite matching. Capped at 1.
    """
    resolution = resolution or conf.EPSILON_RESOLUTION
    ca, cb = a.coords, b.coords
    na, nb = a.norms(), b.norms()

    def condition(eps):
        radius = min(1.0 / eps, float(a.window) - eps, float(b.window) - eps)
        limited = radius < 1.0 / eps
        tol = conf.FLOAT_TOLERANCE
        a_in, b_in = ca[na <= radius + tol], cb[nb <= radius + tol]
        a_out, b_out = (ca[na <= radius + eps + tol],
                        cb[nb <= radius + eps + tol])
        ok = (_perfect_match(a_in, b_out, eps) and
              _perfect_match(b_in, a_out, eps))
        return ok, (None, limited)

    eps, info, _ = _bisect(condition, resolution)
    limited = info[1] if info is not None else False
    return DistanceReport(eps, limited, resolution)
