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
:mod:`geometry` -- Exact Planar Geometry
========================================
Points are single :class:`~aperiodica.cyclotomic.CycloNumber` values read as
complex coordinates. This module holds the exact isometries, the prototile
registry, placed tiles, patches and windowed point sets shared by the
inflation engine and the analysis modules.
"""
from collections import Counter
from fractions import Fraction
import logging
import math
import numbers

import numpy as np
from scipy.spatial import cKDTree
from six.moves import range

from . import conf
from .constants import ARROW, PROTO, SYSTEM
from .cyclotomic import CycloNumber, zeta, zeta10
from .exceptions import (
    FieldMismatchError, NonExactIsometryError, WindowExceededError)


logger = logging.getLogger(__name__)


def _as_cyclo(n, x):
    if isinstance(x, CycloNumber):
        return x
    return CycloNumber.rational(n, x)


class Isometry(object):
    """
    The planar isometry ``x -> rot * (conj(x) if reflect else x) + trans``.

    ``rot`` has modulus one. It is a root of unity for the Ammann-Beenker and
    Penrose systems and a power of ``(3+4i)/5`` times a root of unity for the
    pinwheel system.
    """
    __slots__ = ('rot', 'reflect', 'trans')

    def __init__(self, rot, reflect=False, trans=None):
        if trans is None:
            trans = CycloNumber.rational(rot.n, 0)
        trans = _as_cyclo(rot.n, trans)
        if trans.n != rot.n:
            raise FieldMismatchError(
                'Rotation in Q(zeta_{}) with translation in Q(zeta_{})'.format(
                    rot.n, trans.n))
        self.rot = rot
        self.reflect = bool(reflect)
        self.trans = trans

    @classmethod
    def identity(cls, n):
        return cls(CycloNumber.rational(n, 1))

    @classmethod
    def rotation(cls, rot):
        return cls(rot)

    @classmethod
    def translation(cls, t):
        return cls(CycloNumber.rational(t.n, 1), False, t)

    @classmethod
    def from_vertices(cls, ref, target):
        """
        The isometry mapping the vertex sequence `ref` onto `target` in order.

        Raises:
            NonExactIsometryError: no isometry maps one onto the other
        """
        ref = tuple(ref)
        target = tuple(target)
        d = ref[1] - ref[0]
        e = target[1] - target[0]
        for reflect in (False, True):
            rot = e / (d.conj() if reflect else d)
            if rot.abs2() != 1:
                continue
            src0 = ref[0].conj() if reflect else ref[0]
            g = cls(rot, reflect, target[0] - rot * src0)
            if all(g.apply(v) == w for v, w in zip(ref, target)):
                return g
        raise NonExactIsometryError(
            'No isometry maps {} onto {}'.format(ref, target))

    @property
    def n(self):
        return self.rot.n

    def apply(self, x):
        if self.reflect:
            x = x.conj()
        return self.rot * x + self.trans

    __call__ = apply

    def linear_part(self):
        return Isometry(self.rot, self.reflect)

    def is_linear(self):
        return self.trans.is_zero()

    def is_identity(self):
        return self.rot == 1 and not self.reflect and self.trans.is_zero()

    def compose(self, other):
        """``self o other``, i.e. `other` is applied first."""
        rh = other.rot.conj() if self.reflect else other.rot
        th = other.trans.conj() if self.reflect else other.trans
        return Isometry(self.rot * rh, self.reflect != other.reflect,
                        self.rot * th + self.trans)

    __mul__ = compose

    def inverse(self):
        rinv = self.rot.conj()
        if not self.reflect:
            return Isometry(rinv, False, -(rinv * self.trans))
        return Isometry(rinv.conj(), True, -(rinv * self.trans).conj())

    def validate(self):
        """
        Raises:
            NonExactIsometryError: the rotation part is not of modulus one
        """
        if self.rot.abs2() != 1:
            raise NonExactIsometryError(
                'Rotation {} is not of modulus one'.format(self.rot))
        return self

    def _key(self):
        return (self.rot, self.reflect, self.trans)

    def __eq__(self, other):
        if not isinstance(other, Isometry):
            return NotImplemented
        return self._key() == other._key()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return 'Isometry(rot={}, reflect={}, trans={})'.format(
            self.rot, self.reflect, self.trans)


class Prototile(object):
    """
    Reference shape of a tile.

    Args:
        name (str): one of :class:`~aperiodica.constants.PROTO`
        system (str): tiling system the shape belongs to
        vertices (tuple): exact reference vertices, counter-clockwise
        decorations (tuple): ``(i, j, kind, head)`` edge labels where `head`
            is the vertex index the arrow points at, or None
        merges_to (str): for half tiles (apex first, merge edge ``1-2``),
            the prototile formed with the mirror image across the merge edge
    """
    def __init__(self, name, system, vertices, decorations=(), merges_to=None,
                 halves=1):
        self.name = name
        self.system = system
        self.vertices = tuple(vertices)
        self.decorations = tuple(decorations)
        self.merges_to = merges_to
        self.halves = halves

    @property
    def n(self):
        return self.vertices[0].n

    def __repr__(self):
        return 'Prototile({!r})'.format(self.name)


def _build_prototiles():
    i8 = zeta(8, 2)
    z8 = zeta(8, 1)
    w = zeta10(1)
    w3 = zeta10(3)
    i4 = zeta(4, 1)

    def q(n, v):
        return CycloNumber.rational(n, v)

    protos = [
        Prototile(PROTO.ab_triangle, SYSTEM.ammann_beenker,
                  (q(8, 0), q(8, 1), i8),
                  ((0, 1, ARROW.plain, 0), (0, 2, ARROW.plain, 2),
                   (1, 2, ARROW.diagonal, None)),
                  merges_to=PROTO.ab_square),
        Prototile(PROTO.ab_rhombus, SYSTEM.ammann_beenker,
                  (q(8, 0), q(8, 1), 1 + z8, z8),
                  ((0, 1, ARROW.plain, 0), (1, 2, ARROW.plain, 2),
                   (2, 3, ARROW.plain, 2), (3, 0, ARROW.plain, 0))),
        Prototile(PROTO.ab_square, SYSTEM.ammann_beenker,
                  (q(8, 0), q(8, 1), 1 + i8, i8), halves=2),
        Prototile(PROTO.penrose_thin_half, SYSTEM.penrose,
                  (q(5, 0), q(5, 1), w),
                  ((0, 1, ARROW.single, 1), (0, 2, ARROW.double, 0),
                   (1, 2, ARROW.base, None)),
                  merges_to=PROTO.penrose_thin),
        Prototile(PROTO.penrose_thick_half, SYSTEM.penrose,
                  (q(5, 0), q(5, 1), w3),
                  ((0, 1, ARROW.single, 0), (0, 2, ARROW.double, 0),
                   (1, 2, ARROW.base, None)),
                  merges_to=PROTO.penrose_thick),
        Prototile(PROTO.penrose_thin, SYSTEM.penrose,
                  (q(5, 0), q(5, 1), 1 + w, w), halves=2),
        Prototile(PROTO.penrose_thick, SYSTEM.penrose,
                  (q(5, 0), q(5, 1), 1 + w3, w3), halves=2),
        Prototile(PROTO.pinwheel_triangle, SYSTEM.pinwheel,
                  (q(4, 0), q(4, 2), 2 + i4)),
    ]
    return dict((p.name, p) for p in protos)


#: All prototiles by name
PROTOTILES = _build_prototiles()

#: Cyclotomic index of the coordinates of each tiling system
SYSTEM_FIELD = {
    SYSTEM.ammann_beenker: 8,
    SYSTEM.penrose: 5,
    SYSTEM.pinwheel: 4,
}


def get_prototile(name):
    try:
        return PROTOTILES[name]
    except KeyError:
        raise ValueError('Unknown prototile {!r}'.format(name))


# {{{ exact polygon predicates
def orientation(a, b, c):
    """
    Sign of the turn ``a -> b -> c``: 1 counter-clockwise, -1 clockwise and
    0 when collinear. Decided on the embedding, with an exact collinearity
    test when the floating value is too small to trust.
    """
    u = b - a
    v = c - a
    f = (u.embed().conjugate() * v.embed()).imag
    scale = abs(u.embed()) * abs(v.embed())
    if abs(f) > 1e-9 * max(scale, 1.0):
        return 1 if f > 0 else -1
    z = u.conj() * v
    if z == z.conj():
        return 0
    return 1 if f >= 0 else -1


def area_form(vertices):
    """
    Exact ``sum conj(v_k) v_(k+1)`` antisymmetrised, equal to ``2i`` times the
    signed area. Sums of area forms compare exactly.
    """
    vs = tuple(vertices)
    s = CycloNumber.rational(vs[0].n, 0)
    for k in range(len(vs)):
        s = s + vs[k].conj() * vs[(k + 1) % len(vs)]
    return (s - s.conj()) / 2


def signed_area(vertices):
    return area_form(vertices).embed().imag / 2


def ccw(vertices):
    vs = tuple(vertices)
    if signed_area(vs) < 0:
        return tuple(reversed(vs))
    return vs


def contains(polygon, x, strict=False):
    """Whether the convex counter-clockwise `polygon` contains the point."""
    m = len(polygon)
    for k in range(m):
        o = orientation(polygon[k], polygon[(k + 1) % m], x)
        if o < 0 or (strict and o == 0):
            return False
    return True


def interior_disjoint(p, q):
    """
    Whether two convex polygons have disjoint interiors. Both are oriented
    counter-clockwise first; a separating line is searched among the edge
    lines.
    """
    p = ccw(p)
    q = ccw(q)
    for a, b in ((p, q), (q, p)):
        m = len(a)
        for k in range(m):
            s, e = a[k], a[(k + 1) % m]
            if all(orientation(s, e, v) <= 0 for v in b):
                return True
    return False


def on_open_segment(a, b, x):
    """Whether `x` lies strictly between `a` and `b` on their segment."""
    if x == a or x == b or orientation(a, b, x) != 0:
        return False
    za, zb, zx = a.embed(), b.embed(), x.embed()
    t = ((zx - za) * (zb - za).conjugate()).real / abs(zb - za) ** 2
    return 0 < t < 1
# }}}


class Tile(object):
    """
    A placed copy of a prototile.

    Args:
        proto (str): prototile name
        placement (:class:`Isometry`): maps reference vertices to the tile
        decorations (tuple): edge labels in reference vertex indices, or None
            for an undecorated tile
    """
    __slots__ = ('proto', 'placement', 'decorations', '_vertices')

    def __init__(self, proto, placement, decorations=None):
        self.proto = proto
        self.placement = placement
        self.decorations = (tuple(tuple(d) for d in decorations)
                            if decorations is not None else None)
        self._vertices = None

    @classmethod
    def make(cls, proto, placement):
        """A tile carrying the default decorations of its prototile."""
        return cls(proto, placement, get_prototile(proto).decorations)

    @property
    def prototile(self):
        return get_prototile(self.proto)

    @property
    def chirality(self):
        return self.placement.reflect

    @property
    def vertices(self):
        if self._vertices is None:
            self._vertices = tuple(self.placement.apply(v)
                                   for v in self.prototile.vertices)
        return self._vertices

    def embedded(self):
        return [v.embed() for v in self.vertices]

    def centroid(self):
        zs = self.embedded()
        return sum(zs) / len(zs)

    def edges(self):
        vs = self.vertices
        m = len(vs)
        for k in range(m):
            yield vs[k], vs[(k + 1) % m]

    def undecorated(self):
        return Tile(self.proto, self.placement, None)

    def moved(self, g):
        return Tile(self.proto, g.compose(self.placement), self.decorations)

    def _key(self):
        return (self.proto, self.placement, self.decorations)

    def __eq__(self, other):
        if not isinstance(other, Tile):
            return NotImplemented
        return self._key() == other._key()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return 'Tile({!r}, {!r})'.format(self.proto, self.placement)


class Patch(object):
    """
    A finite set of placed tiles of one tiling system.
    """
    def __init__(self, tiles, system):
        self.tiles = tuple(tiles)
        self.system = system
        self._covered = None

    @property
    def n(self):
        return SYSTEM_FIELD[self.system]

    def __len__(self):
        return len(self.tiles)

    def __iter__(self):
        return iter(self.tiles)

    def __eq__(self, other):
        if not isinstance(other, Patch):
            return NotImplemented
        return self.system == other.system and self.tiles == other.tiles

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.system, self.tiles))

    def __repr__(self):
        return 'Patch({!r}, {} tiles)'.format(self.system, len(self.tiles))

    def tile_set(self):
        return frozenset(self.tiles)

    def type_counts(self):
        """
        Counts per prototile in half-tile units, i.e. a merged rhombus or
        square counts as two halves of the prototile it merges.
        """
        counts = Counter()
        for t in self.tiles:
            proto = t.prototile
            if proto.halves == 2:
                half = [p for p in PROTOTILES.values()
                        if p.merges_to == proto.name][0]
                counts[half.name] += 2
            else:
                counts[proto.name] += 1
        return counts

    def vertices(self):
        """Deduplicated exact vertices in a deterministic order."""
        seen = set()
        for t in self.tiles:
            seen.update(t.vertices)
        return sorted(seen, key=lambda v: v.sort_key())

    def total_area_form(self):
        s = CycloNumber.rational(self.n, 0)
        for t in self.tiles:
            s = s + area_form(ccw(t.vertices))
        return s

    def covered_radius(self):
        """
        Radius of the largest disk around the origin covered by the patch.
        Boundary edges are those where sample points just outside the edge
        are not covered by any other tile.
        """
        if self._covered is None:
            self._covered = covered_radius(self.tiles)
        return self._covered


def covered_radius(tiles):
    tiles = list(tiles)
    if not tiles:
        return 0.0

    polys = [np.array([z for z in _ccw_floats(t.embedded())])
             for t in tiles]
    centroids = np.array([[p[:, 0].mean(), p[:, 1].mean()] for p in polys])
    diam = max(np.max(np.hypot(p[:, 0] - c[0], p[:, 1] - c[1]))
               for p, c in zip(polys, centroids))
    tree = cKDTree(centroids)

    def key(z):
        return (round(z[0], 7), round(z[1], 7))

    edge_count = Counter()
    for p in polys:
        for k in range(len(p)):
            a, b = key(p[k]), key(p[(k + 1) % len(p)])
            edge_count[frozenset((a, b))] += 1

    def is_covered(x):
        for idx in tree.query_ball_point(x, diam + 1e-6):
            p = polys[idx]
            inside = True
            for k in range(len(p)):
                a, b = p[k], p[(k + 1) % len(p)]
                cross = ((b[0] - a[0]) * (x[1] - a[1]) -
                         (b[1] - a[1]) * (x[0] - a[0]))
                if cross < -1e-12:
                    inside = False
                    break
            if inside:
                return True
        return False

    best = float('inf')
    for p in polys:
        for k in range(len(p)):
            a, b = p[k], p[(k + 1) % len(p)]
            if edge_count[frozenset((key(a), key(b)))] > 1:
                continue
            d = b - a
            length = math.hypot(d[0], d[1])
            normal = np.array([d[1], -d[0]]) / length
            boundary = False
            for t in (0.25, 0.5, 0.75):
                x = a + t * d + 1e-4 * length * normal
                if not is_covered(x):
                    boundary = True
                    break
            if boundary:
                best = min(best, _segment_distance(a, b))
    if best == float('inf'):
        return best
    return max(best - 1e-9, 0.0)


def _ccw_floats(zs):
    pts = [(z.real, z.imag) for z in zs]
    area = sum(pts[k][0] * pts[(k + 1) % len(pts)][1] -
               pts[(k + 1) % len(pts)][0] * pts[k][1]
               for k in range(len(pts)))
    if area < 0:
        pts.reverse()
    return pts


def _segment_distance(a, b):
    d = b - a
    t = -(a[0] * d[0] + a[1] * d[1]) / (d[0] ** 2 + d[1] ** 2)
    t = min(1.0, max(0.0, t))
    x = a + t * d
    return math.hypot(x[0], x[1])


def merge_halves(patch):
    """
    Merged view of a patch of half tiles: every pair of halves that are
    mirror images across a shared merge edge becomes one rhombus or square.
    Halves without a partner are kept as they are. The merged tile uses the
    placement of the first half and carries the arrows of both halves.
    """
    by_base = {}
    for idx, t in enumerate(patch.tiles):
        proto = t.prototile
        if proto.merges_to is None:
            continue
        vs = t.vertices
        by_base.setdefault((t.proto, frozenset((vs[1], vs[2]))), []).append(
            idx)

    partner = {}
    for indices in by_base.values():
        if len(indices) == 2:
            a, b = indices
            ta, tb = patch.tiles[a], patch.tiles[b]
            apex = ta.vertices[1] + ta.vertices[2] - ta.vertices[0]
            if tb.vertices[0] == apex:
                partner[a] = b
                partner[b] = a

    tiles = []
    for idx, t in enumerate(patch.tiles):
        if idx not in partner:
            tiles.append(t)
        elif partner[idx] > idx:
            tiles.append(_merge_pair(t, patch.tiles[partner[idx]]))
    return Patch(tiles, patch.system)


def _merge_pair(first, second):
    merged = first.prototile.merges_to
    a, b, c = first.vertices
    quad = (a, b, b + c - a, c)
    if first.decorations is None or second.decorations is None:
        decorations = None
    else:
        index = dict((v, k) for k, v in enumerate(quad))
        decorations = []
        for half in (first, second):
            vs = half.vertices
            for i, j, kind, head in half.decorations:
                if kind in (ARROW.base, ARROW.diagonal):
                    continue
                decorations.append(
                    (index[vs[i]], index[vs[j]], kind,
                     index[vs[head]] if head is not None else None))
        decorations = sorted(decorations)
    return Tile(merged, first.placement, decorations)


def split_merged(patch):
    """Inverse of :func:`merge_halves`."""
    tiles = []
    for t in patch.tiles:
        proto = t.prototile
        if proto.halves != 2:
            tiles.append(t)
            continue
        half = [p for p in PROTOTILES.values()
                if p.merges_to == proto.name][0]
        a, b, c, d = t.vertices
        first = Tile.make(half.name, t.placement)
        order = (c, b, d) if _arrow_consistent_order(t, half, (c, b, d)) \
            else (c, d, b)
        m = Isometry.from_vertices(half.vertices, order)
        tiles.append(first if t.decorations is not None
                     else first.undecorated())
        second = Tile.make(half.name, m)
        tiles.append(second if t.decorations is not None
                     else second.undecorated())
    return Patch(tiles, patch.system)


def _arrow_consistent_order(merged, half, order):
    """
    Whether labelling the second half as `order` reproduces the arrows stored
    on the merged tile. Undecorated tiles default to the mirror labelling.
    """
    if merged.decorations is None:
        return True
    quad = merged.vertices
    index = dict((v, k) for k, v in enumerate(quad))
    wanted = set(merged.decorations)
    for i, j, kind, head in half.decorations:
        if kind in (ARROW.base, ARROW.diagonal):
            continue
        e = (index[order[i]], index[order[j]], kind,
             index[order[head]] if head is not None else None)
        if e not in wanted:
            return False
    return True


class PointSet(object):
    """
    A finite approximant of a Delone set.

    Args:
        points (iterable): exact points, duplicates are dropped
        window (number): radius W such that the intended infinite set is
            complete inside the closed ball of radius W around 0; points
            outside the ball may be present
        n (int): cyclotomic index of the coordinates
        dim (int): 1 for sets on the real axis, 2 otherwise
        unwindowed (bool): flag for sets without a meaningful window
    """
    def __init__(self, points, window, n=None, dim=2, unwindowed=False):
        pts = []
        seen = set()
        for p in points:
            if p not in seen:
                seen.add(p)
                pts.append(p)
        if n is None:
            n = pts[0].n if pts else 4
        self.points = tuple(sorted(pts, key=lambda v: v.sort_key()))
        self.window = _as_window(window)
        self.n = n
        self.dim = dim
        self.unwindowed = unwindowed
        self._coords = None
        self._tree = None
        self._index = None
        #: (rho, anchor radius) -> anchored cluster keys, see :mod:`delone`
        self._clusters = {}

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, x):
        if self._index is None:
            self._index = frozenset(self.points)
        return x in self._index

    def __eq__(self, other):
        if not isinstance(other, PointSet):
            return NotImplemented
        return (set(self.points) == set(other.points) and
                self.window == other.window)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'PointSet({} points, window={})'.format(
            len(self.points), self.window)

    @property
    def coords(self):
        """``(N, 2)`` float array of the embedded points."""
        if self._coords is None:
            zs = [p.embed() for p in self.points]
            self._coords = np.array([[z.real, z.imag] for z in zs],
                                    dtype=float).reshape(-1, 2)
        return self._coords

    @property
    def tree(self):
        if self._tree is None:
            self._tree = cKDTree(self.coords)
        return self._tree

    def norms(self):
        return np.hypot(self.coords[:, 0], self.coords[:, 1])

    def within(self, radius, center=None):
        """Points of the set in the closed ball B_radius(center)."""
        if not self.points:
            return []
        c = (0.0, 0.0) if center is None else center
        idx = self.tree.query_ball_point(c, float(radius) +
                                         conf.FLOAT_TOLERANCE)
        return [self.points[k] for k in sorted(idx)]

    def restrict(self, radius):
        """The set cut down to B_radius(0), with that radius as window."""
        if float(radius) > float(self.window) + conf.FLOAT_TOLERANCE:
            raise WindowExceededError(
                'Radius {} exceeds window {}'.format(radius, self.window))
        return PointSet(self.within(radius), radius, self.n, self.dim)

    def promote(self, n):
        """The same set with coordinates re-expressed in Q(zeta_n)."""
        if n == self.n:
            return self
        return PointSet([p.promote(n) for p in self.points], self.window, n,
                        self.dim, self.unwindowed)

    def nearest(self, x):
        """Index and distance of the point nearest to the float pair `x`."""
        d, k = self.tree.query(x)
        return k, d


def _as_window(window):
    """Floats become exact rationals, rounded down at 1e-9."""
    if isinstance(window, float):
        if math.isinf(window):
            return window
        return Fraction(math.floor(window * 10 ** 9), 10 ** 9)
    if isinstance(window, numbers.Rational):
        return Fraction(window)
    return window


def _check_field(g, n):
    if g.n != n:
        raise FieldMismatchError(
            'Isometry lives in Q(zeta_{}), set in Q(zeta_{})'.format(g.n, n))


def apply_isometry(g, s):
    """
    Exact image of a point set or patch. The window of a point set is kept
    for linear isometries and shrinks by ``|trans|`` otherwise.

    Raises:
        FieldMismatchError: `g` lives in another field than `s`
    """
    if isinstance(s, Patch):
        _check_field(g, s.n)
        return Patch([t.moved(g) for t in s.tiles], s.system)

    _check_field(g, s.n)
    points = [g.apply(p) for p in s.points]
    if g.is_linear():
        window = s.window
    elif g.trans.is_rational():
        window = s.window - abs(Fraction(g.trans.coeffs[0]))
    else:
        window = float(s.window) - abs(g.trans.embed())
    dim = s.dim if g.trans.is_real() and (g.rot == 1 or g.rot == -1) else 2
    return PointSet(points, window, s.n, dim, s.unwindowed)


def difference_set(s, radius):
    """
    All differences ``x - y`` of points of `s` with ``|x - y| <= radius``,
    exact and deduplicated.

    Raises:
        WindowExceededError: `radius` is larger than the window of `s`
    """
    if float(radius) > float(s.window) + conf.FLOAT_TOLERANCE:
        raise WindowExceededError(
            'Radius {} exceeds window {}'.format(radius, s.window))
    if not s.points:
        return frozenset()
    inner = [k for k, r in enumerate(s.norms())
             if r <= float(s.window) + conf.FLOAT_TOLERANCE]
    tree = cKDTree(s.coords[inner])
    diffs = set([CycloNumber.rational(s.n, 0)])
    for a, b in tree.query_pairs(float(radius) + conf.FLOAT_TOLERANCE):
        v = s.points[inner[a]] - s.points[inner[b]]
        diffs.add(v)
        diffs.add(-v)
    return frozenset(diffs)


def whole_tile(proto, placement, decorated=True):
    """
    A rhombus or square assembled from its half at `placement` and the mirror
    image of that half across the merge edge.
    """
    half = [p for p in PROTOTILES.values() if p.merges_to == proto][0]
    first = Tile.make(half.name, placement)
    a, b, c = first.vertices
    second = Tile.make(half.name, Isometry.from_vertices(
        half.vertices, (b + c - a, b, c)))
    merged = _merge_pair(first, second)
    return merged if decorated else merged.undecorated()


def global_arrows(tile):
    """
    The decorations of a tile in global coordinates, as a frozenset of
    ``(frozenset(endpoints), kind, head point)``.
    """
    if tile.decorations is None:
        return None
    vs = tile.vertices
    return frozenset(
        (frozenset((vs[i], vs[j])), kind,
         vs[head] if head is not None else None)
        for i, j, kind, head in tile.decorations)


def tile_signature(tile):
    """
    Placement independent description of a tile: prototile, vertex set and
    global arrows. Two tiles with equal signatures cover the same region
    with the same decorations.
    """
    return (tile.proto, frozenset(tile.vertices), global_arrows(tile))
