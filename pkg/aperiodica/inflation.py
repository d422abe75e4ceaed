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
:mod:`inflation` -- Stone Inflation Engine
==========================================
Inflation rules, substitution matrices and fixed-point patches for the
Ammann-Beenker, rhombic Penrose and pinwheel tilings.

A rule stores, for every prototile, its children as exact vertex tuples in
the frame of the reference prototile scaled by the inflation factor. A tile
with placement ``g`` is inflated to the children ``S g S^-1 o c_j`` where
``S`` is multiplication by the factor and ``c_j`` maps the child reference
onto its vertex tuple.

Penrose patches are kept as Robinson half tiles and Ammann-Beenker squares as
two right triangles; :func:`~aperiodica.geometry.merge_halves` gives the
rhombus and square view.
"""
from fractions import Fraction
import functools
import logging

import numpy as np
from six.moves import range

from . import conf
from .constants import PROTO, SEED, SYSTEM
from .cyclotomic import (
    CycloNumber, golden_ratio, silver_ratio, sqrt2, zeta, zeta10)
from .exceptions import (
    IllegalSeedError, SystemMismatchError, WindowExceededError)
from .geometry import (
    Isometry, Patch, PointSet, Tile, area_form, ccw, contains, get_prototile,
    interior_disjoint, PROTOTILES)
from .utils.parallel import parallel_map
from .utils.timeutils import elapsed, monotonic


logger = logging.getLogger(__name__)


class SubstitutionMatrix(object):
    """
    Counts of children by type. Entry ``[i][j]`` is the number of children of
    prototile ``protos[i]`` in the inflated prototile ``protos[j]``.
    """
    def __init__(self, protos, matrix):
        self.protos = tuple(protos)
        self.matrix = np.array(matrix, dtype=np.int64)

    def perron_eigenvalue(self):
        return float(max(abs(np.linalg.eigvals(self.matrix.astype(float)))))

    def vector(self, counts):
        return np.array([counts.get(p, 0) for p in self.protos],
                        dtype=np.int64)

    def predict(self, counts, steps):
        """
        Type counts after `steps` inflations of a patch with type `counts`.

        Returns:
            dict: prototile name to count
        """
        v = np.linalg.matrix_power(self.matrix, steps).dot(self.vector(counts))
        return dict((p, int(c)) for p, c in zip(self.protos, v))

    def to_list(self):
        return self.matrix.tolist()


class InflationRule(object):
    """
    Args:
        system (str): tiling system
        factor (CycloNumber): inflation factor, possibly a scale-rotation
        children (dict): prototile name to a list of
            ``(child prototile, vertex tuple)`` in the inflated frame
        twist (CycloNumber): rotation relating consecutive fixed-point patches
    """
    def __init__(self, system, factor, children, twist=None):
        self.system = system
        self.factor = factor
        self.children = dict((k, tuple((c, tuple(vs)) for c, vs in v))
                             for k, v in children.items())
        self.twist = twist if twist is not None else \
            CycloNumber.rational(factor.n, 1)
        self._placements = None

    @property
    def protos(self):
        return tuple(sorted(self.children))

    @property
    def n(self):
        return self.factor.n

    def child_placements(self, proto):
        """Isometries mapping each child reference onto its vertex tuple."""
        if self._placements is None:
            self._placements = dict(
                (p, tuple((c, Isometry.from_vertices(
                    get_prototile(c).vertices, vs)) for c, vs in kids))
                for p, kids in self.children.items())
        return self._placements[proto]

    def conjugate(self, g):
        """``S g S^-1`` for the scaling ``S`` by the inflation factor."""
        lam = self.factor
        rot = g.rot * lam / lam.conj() if g.reflect else g.rot
        return Isometry(rot, g.reflect, lam * g.trans)

    def substitute(self, tile):
        """The children of one tile, in rule order."""
        if tile.proto not in self.children:
            raise SystemMismatchError(
                'Prototile {} is not part of the {} rule'.format(
                    tile.proto, self.system))
        phi = self.conjugate(tile.placement)
        decorated = tile.decorations is not None
        kids = []
        for child, c in self.child_placements(tile.proto):
            g = phi.compose(c)
            kids.append(Tile.make(child, g) if decorated else
                        Tile(child, g, None))
        return kids

    def matrix(self):
        protos = self.protos
        m = [[sum(1 for c, _ in self.children[col] if c == row)
              for col in protos] for row in protos]
        return SubstitutionMatrix(protos, m)

    def perturbed(self, proto, index, offset):
        """
        A copy of the rule with one child translated by `offset`. Used to
        check that the verifier notices broken dissections.
        """
        children = dict(self.children)
        kids = list(children[proto])
        child, vs = kids[index]
        kids[index] = (child, tuple(v + offset for v in vs))
        children[proto] = kids
        return InflationRule(self.system, self.factor, children, self.twist)


@functools.lru_cache(maxsize=None)
def ammann_beenker_rule():
    z = zeta(8, 1)
    i = zeta(8, 2)
    s = sqrt2()
    lam = silver_ratio()
    one = CycloNumber.rational(8, 1)
    zero = CycloNumber.rational(8, 0)
    p = one + z
    q = s * (one + z)
    v2 = lam * (one + z)
    v3 = lam * z
    tri, rho = PROTO.ab_triangle, PROTO.ab_rhombus
    # triangles are (right angle, arrow end, arrow start) of the short legs
    children = {
        tri: [
            (rho, (zero, one, one + z, z)),
            (tri, (one + z, one, lam)),
            (tri, (z, s * i, zero)),
            (tri, (z, z + i, one + z)),
            (rho, (lam * i, z + i, z, s * i)),
        ],
        rho: [
            (rho, (zero, one, one + z, z)),
            (rho, (v2, v2 - 1, q, v2 - z)),
            (rho, (lam, q, v3, p)),
            (tri, (p, one, lam)),
            (tri, (p, z, v3)),
            (tri, (q, lam + s * z, lam)),
            (tri, (q, v2 - 1, v3)),
        ],
    }
    return InflationRule(SYSTEM.ammann_beenker, lam, children)


@functools.lru_cache(maxsize=None)
def penrose_rule():
    tau = golden_ratio()
    w = zeta10(1)
    w3 = zeta10(3)
    inv = tau - 1
    one = CycloNumber.rational(5, 1)
    zero = CycloNumber.rational(5, 0)
    thin, thick = PROTO.penrose_thin_half, PROTO.penrose_thick_half
    # halves are (apex, single arrow end, double arrow end)
    children = {
        thin: [
            (thin, (tau * w, one, tau)),
            (thick, (one, tau * w, zero)),
        ],
        thick: [
            (thick, (inv + w3, tau * w3, zero)),
            (thick, (inv, inv + w3, tau)),
            (thin, (inv + w3, inv, zero)),
        ],
    }
    return InflationRule(SYSTEM.penrose, tau, children)


@functools.lru_cache(maxsize=None)
def pinwheel_rule():
    i = zeta(4, 1)
    zero = CycloNumber.rational(4, 0)

    def c(re, im, den=1):
        return CycloNumber(4, [Fraction(re, den), Fraction(im, den)])

    f = c(12, 16, 5)
    m_long = c(6, 8, 5)
    m_mid = 2 + i
    m_short = c(16, 13, 5)
    tri = PROTO.pinwheel_triangle
    # the 1x2 rectangle halves are split along the diagonal from f to m_mid
    children = {
        tri: [
            (tri, (zero, m_long, m_mid)),
            (tri, (m_mid, m_short, c(4, 2))),
            (tri, (f, m_long, m_mid)),
            (tri, (m_mid, m_short, f)),
            (tri, (c(4, 2), f, c(3, 4))),
        ],
    }
    factor = 2 + i
    return InflationRule(SYSTEM.pinwheel, factor, children,
                         twist=factor / factor.conj())


_RULES = {
    SYSTEM.ammann_beenker: ammann_beenker_rule,
    SYSTEM.penrose: penrose_rule,
    SYSTEM.pinwheel: pinwheel_rule,
}

#: Control point of the pinwheel reference triangle, fixed by the map of the
#: central child
PINWHEEL_CONTROL_POINT = CycloNumber(4, [Fraction(3, 2), Fraction(1, 2)])


def get_rule(system):
    try:
        return _RULES[system]()
    except KeyError:
        raise SystemMismatchError('Unknown tiling system {!r}'.format(system))


def inflate(p, steps, rule=None):
    """
    Inflate and dissect a patch `steps` times. Children are ordered by parent
    index, then by child index.

    Raises:
        SystemMismatchError: the patch belongs to another system
    """
    rule = rule or get_rule(p.system)
    if rule.system != p.system:
        raise SystemMismatchError(
            'Patch of system {} given to the {} rule'.format(
                p.system, rule.system))
    if steps < 0:
        raise ValueError('steps must be non-negative')

    tiles = list(p.tiles)
    for step in range(steps):
        start = monotonic()
        nested = parallel_map(rule.substitute, tiles)
        tiles = [t for kids in nested for t in kids]
        logger.debug('{} inflation step {}: {} tiles in {:.3f}s'.format(
            rule.system, step + 1, len(tiles), elapsed(start)))
    return Patch(tiles, p.system)


class StoneReport(object):
    def __init__(self, area_ok, disjoint_ok, cover_ok, matrix, perron_ok,
                 failures=()):
        self.area_ok = area_ok
        self.disjoint_ok = disjoint_ok
        self.cover_ok = cover_ok
        self.matrix = matrix
        self.perron_ok = perron_ok
        self.failures = tuple(failures)

    @property
    def ok(self):
        return (self.area_ok and self.disjoint_ok and self.cover_ok and
                self.perron_ok)

    def to_dict(self):
        return {
            'area_ok': self.area_ok,
            'disjoint_ok': self.disjoint_ok,
            'cover_ok': self.cover_ok,
            'perron_ok': self.perron_ok,
            'matrix': {'protos': list(self.matrix.protos),
                       'counts': self.matrix.to_list()},
            'failures': list(self.failures),
        }


def verify_stone_inflation(rule):
    """
    Check that the children of every prototile partition the inflated
    prototile: equal total area (exact), pairwise disjoint interiors and
    every child inside the parent. Failures are reported, never raised.

    Returns:
        :class:`StoneReport`
    """
    lam2 = rule.factor.abs2()
    area_ok = disjoint_ok = cover_ok = True
    failures = []
    for proto in rule.protos:
        parent = ccw(tuple(rule.factor * v
                           for v in get_prototile(proto).vertices))
        kids = [ccw(vs) for _, vs in rule.children[proto]]

        total = sum((area_form(k) for k in kids),
                    CycloNumber.rational(rule.n, 0))
        if total != lam2 * area_form(ccw(get_prototile(proto).vertices)):
            area_ok = False
            failures.append('{}: children area differs from parent'.format(
                proto))

        for a in range(len(kids)):
            for b in range(a + 1, len(kids)):
                if not interior_disjoint(kids[a], kids[b]):
                    disjoint_ok = False
                    failures.append('{}: children {} and {} overlap'.format(
                        proto, a, b))

        inside = all(contains(parent, v) for k in kids for v in k)
        if not inside:
            failures.append('{}: a child leaves the parent'.format(proto))
        # disjoint children of the right total area inside the parent cover it
        if not (inside and area_ok and disjoint_ok):
            cover_ok = False

    matrix = rule.matrix()
    perron_ok = abs(matrix.perron_eigenvalue() - lam2.embed().real) < 1e-9
    report = StoneReport(area_ok, disjoint_ok, cover_ok, matrix, perron_ok,
                         failures)
    logger.info('Stone inflation check for {}: {}'.format(
        rule.system, 'ok' if report.ok else '; '.join(failures)))
    return report


# {{{ seeds and fixed points
def _ab_square_seed():
    i = zeta(8, 2)
    half = (1 + i) / 2
    lower = Isometry(CycloNumber.rational(8, 1), False, -half)
    upper = Isometry(-i, True, half)
    return Patch([Tile.make(PROTO.ab_triangle, lower),
                  Tile.make(PROTO.ab_triangle, upper)],
                 SYSTEM.ammann_beenker)


def _ab_star_seed():
    return Patch([Tile.make(PROTO.ab_rhombus, Isometry(zeta(8, k)))
                  for k in range(8)], SYSTEM.ammann_beenker)


def _ab_octagon_circumradius2():
    """Squared circumradius 4 + 2 sqrt(2) of the octagon of side 2."""
    return CycloNumber.rational(8, 4) + 2 * sqrt2()


def _inside_octagon(v, bound):
    gap = bound - v.abs2()
    return gap.is_zero() or gap.embed().real > 0


def _ab_octagon_seed():
    star = inflate(_ab_star_seed(), 1)
    bound = _ab_octagon_circumradius2()
    return Patch([t for t in star.tiles
                  if all(_inside_octagon(v, bound) for v in t.vertices)],
                 SYSTEM.ammann_beenker)


def _penrose_sun_seed():
    tau = golden_ratio()
    zero = CycloNumber.rational(5, 0)
    ref = get_prototile(PROTO.penrose_thick_half).vertices
    tiles = []
    for k in range(5):
        c = tau * zeta(5, k)
        for a in (zeta10(2 * k + 1), zeta10(2 * k - 1)):
            tiles.append(Tile.make(PROTO.penrose_thick_half,
                                   Isometry.from_vertices(ref, (a, zero, c))))
    return Patch(tiles, SYSTEM.penrose)


def _pinwheel_origin_seed():
    g = Isometry(CycloNumber.rational(4, 1), False, -PINWHEEL_CONTROL_POINT)
    return Patch([Tile.make(PROTO.pinwheel_triangle, g)], SYSTEM.pinwheel)


#: (system, seed) -> (builder, inflation steps per fixed-point step)
SEEDS = {
    (SYSTEM.ammann_beenker, SEED.ab_square): (_ab_square_seed, 2),
    (SYSTEM.ammann_beenker, SEED.ab_octagon): (_ab_octagon_seed, 1),
    (SYSTEM.ammann_beenker, SEED.ab_star): (_ab_star_seed, 1),
    (SYSTEM.penrose, SEED.penrose_sun): (_penrose_sun_seed, 2),
    (SYSTEM.pinwheel, SEED.pinwheel_origin): (_pinwheel_origin_seed, 1),
}


def seed_patch(system, seed):
    """
    Raises:
        IllegalSeedError: the seed does not exist for the system
    """
    try:
        builder, _ = SEEDS[(system, seed)]
    except KeyError:
        raise IllegalSeedError(
            'Seed {!r} is not defined for system {!r}'.format(seed, system))
    return builder()


def seed_period(system, seed):
    seed_patch(system, seed)
    return SEEDS[(system, seed)][1]


@functools.lru_cache(maxsize=32)
def fixed_point_patch(system, seed, k):
    """
    The patch obtained from the seed by `k` applications of the fixed-point
    rule, i.e. of the inflation rule raised to the seed period (the square
    for the Ammann-Beenker square seed and the Penrose sun).

    Raises:
        IllegalSeedError: unknown seed for the system
    """
    patch = seed_patch(system, seed)
    if k < 0:
        raise ValueError('k must be non-negative')
    start = monotonic()
    result = inflate(patch, k * seed_period(system, seed))
    logger.info('Fixed point {}/{} k={}: {} tiles in {:.3f}s'.format(
        system, seed, k, len(result), elapsed(start)))
    return result


def nesting_certificate(system, seed, k):
    """
    Whether the patch at `k`, rotated by the rule twist to the power of the
    seed period, consists of tiles of the patch at ``k + 1``. The twist is
    trivial except for the pinwheel rule.
    """
    rule = get_rule(system)
    twist = Isometry(rule.twist ** seed_period(system, seed))
    small = fixed_point_patch(system, seed, k)
    large = fixed_point_patch(system, seed, k + 1).tile_set()
    return all(t.moved(twist) in large for t in small.tiles)
# }}}


def vertex_set(p, window=None):
    """
    The exact vertices of a patch inside B_window(0) as a point set. Without
    a window the covered radius of the patch is used.

    Raises:
        WindowExceededError: the patch does not cover B_window(0)
    """
    covered = p.covered_radius()
    if window is None:
        window = covered
    elif float(window) > covered + conf.FLOAT_TOLERANCE:
        raise WindowExceededError(
            'Window {} exceeds the covered radius {:.6f} of the patch'.format(
                window, covered))
    limit = float(window) + conf.FLOAT_TOLERANCE
    points = [v for v in p.vertices() if abs(v) <= limit]
    return PointSet(points, window, p.n)


def control_points(p, window=None):
    """
    Pinwheel control points, one per tile. They inflate covariantly: the
    control point of a tile is mapped to the control point of its central
    child.
    """
    if p.system != SYSTEM.pinwheel:
        raise SystemMismatchError('Control points exist for pinwheel patches')
    pts = [t.placement.apply(PINWHEEL_CONTROL_POINT) for t in p.tiles]
    if window is None:
        window = p.covered_radius()
    return PointSet(pts, window, p.n)


def orientation_count(p):
    """
    Number of distinct placement rotations. The reflection flag is ignored,
    so a tile and its mirror image with the same rotation part count once.
    """
    return len(set(t.placement.rot for t in p.tiles))


def tile_count_prediction(p, steps, rule=None):
    rule = rule or get_rule(p.system)
    return rule.matrix().predict(p.type_counts(), steps)


__all__ = [
    'InflationRule', 'SubstitutionMatrix', 'StoneReport', 'PROTOTILES',
    'ammann_beenker_rule', 'penrose_rule', 'pinwheel_rule', 'get_rule',
    'inflate', 'verify_stone_inflation', 'seed_patch', 'fixed_point_patch',
    'nesting_certificate', 'vertex_set', 'control_points',
    'orientation_count', 'tile_count_prediction',
]
