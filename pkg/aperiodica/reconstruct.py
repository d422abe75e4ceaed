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
:mod:`reconstruct` -- Tiling Reconstruction
===========================================
Recovers an Ammann-Beenker tiling, arrows included, from its vertex set.
Squares and rhombuses are found as empty unit quadrilaterals, the arrows of
the rhombuses follow from their shape and the arrows of the squares are
propagated from the neighbouring tiles.
"""
import logging

from scipy.spatial import cKDTree
from six.moves import range

from .constants import PROTO, SYSTEM
from .cyclotomic import zeta
from .exceptions import ReconstructionError, SystemMismatchError
from .geometry import (
    Isometry, Patch, Tile, ccw, contains, get_prototile, interior_disjoint,
    merge_halves, tile_signature, whole_tile)


logger = logging.getLogger(__name__)

#: Distance from the window boundary below which tiles are not trusted
INTERIOR_MARGIN = 3

#: Interior angles in units of 45 degrees
_FULL_TURN = 8

_MAX_CONFLICT = 16


class _Candidate(object):
    def __init__(self, proto, quad):
        # quad starts at a corner; for rhombuses that corner is acute
        self.proto = proto
        self.quad = quad
        self.key = frozenset(quad)
        zs = [v.embed() for v in quad]
        c = sum(zs) / 4
        self.center = (c.real, c.imag)
        self.area = 1.0 if proto == PROTO.ab_square else 0.5 ** 0.5

    def angle_units(self, v):
        if self.proto == PROTO.ab_square:
            return 2
        k = self.quad.index(v)
        return 1 if k % 2 == 0 else 3


def _unit_neighbours(s):
    points = list(s.points)
    neighbours = dict((p, []) for p in points)
    for a, b in s.tree.query_pairs(1.0 + 1e-6):
        pa, pb = points[a], points[b]
        if (pa - pb).abs2() == 1:
            neighbours[pa].append(pb)
            neighbours[pb].append(pa)
    return neighbours


def _candidates(s, neighbours):
    z = zeta(8, 1)
    i = zeta(8, 2)
    found = {}
    for v, nbs in neighbours.items():
        for a in nbs:
            da = a - v
            for b in nbs:
                db = b - v
                if db == da * i:
                    proto = PROTO.ab_square
                elif db == da * z:
                    proto = PROTO.ab_rhombus
                else:
                    continue
                c = a + b - v
                if c not in s:
                    continue
                quad = (v, a, c, b)
                cand = _Candidate(proto, quad)
                if cand.key not in found and _is_empty(s, cand):
                    found[cand.key] = cand
    return list(found.values())


def _is_empty(s, cand):
    poly = ccw(cand.quad)
    for p in s.within(1.0, cand.center):
        if p not in cand.key and contains(poly, p, strict=True):
            return False
    return True


def _resolve_conflicts(cands):
    """
    Drop candidates overlapping others, keeping in each group of mutually
    overlapping candidates the non-overlapping selection of largest area.
    """
    if not cands:
        return []
    tree = cKDTree([c.center for c in cands])
    conflicts = dict((k, set()) for k in range(len(cands)))
    for a, b in tree.query_pairs(2.0):
        if not interior_disjoint(cands[a].quad, cands[b].quad):
            conflicts[a].add(b)
            conflicts[b].add(a)

    chosen = []
    seen = set()
    for start in range(len(cands)):
        if start in seen:
            continue
        group, stack = [], [start]
        seen.add(start)
        while stack:
            k = stack.pop()
            group.append(k)
            for m in conflicts[k]:
                if m not in seen:
                    seen.add(m)
                    stack.append(m)
        if len(group) == 1:
            chosen.extend(group)
            continue
        if len(group) > _MAX_CONFLICT:
            raise ReconstructionError(
                'Too many overlapping candidates near {}'.format(
                    cands[group[0]].quad[0]), cands[group[0]].quad[0])
        chosen.extend(_best_selection(sorted(group), conflicts, cands))
    return [cands[k] for k in sorted(chosen)]


def _best_selection(group, conflicts, cands):
    best = {'picked': [], 'area': -1.0}

    def search(pos, picked, area):
        if pos == len(group):
            if area > best['area'] + 1e-9:
                best['picked'] = list(picked)
                best['area'] = area
            return
        k = group[pos]
        if not conflicts[k] & set(picked):
            picked.append(k)
            search(pos + 1, picked, area + cands[k].area)
            picked.pop()
        search(pos + 1, picked, area)

    search(0, [], 0.0)
    return best['picked']


def _check_angles(s, tiles, inner):
    turns = dict((p, 0) for p in s.points if abs(p) <= inner)
    for t in tiles:
        for v in t.quad:
            if v in turns:
                turns[v] += t.angle_units(v)
    bad = [(p, k) for p, k in turns.items() if k != _FULL_TURN]
    if bad:
        p, k = min(bad, key=lambda pk: abs(pk[0]))
        raise ReconstructionError(
            'Vertex {} is surrounded by {} of 8 eighth turns'.format(p, k),
            p)


def _square_arrows(tiles):
    """
    Direction of the arrows on square edges. A square has one corner with
    both arrows pointing in (the Q corner of both halves) and the opposite
    corner with both pointing out. Heads are propagated across shared edges
    until nothing changes.
    """
    heads = {}
    for t in tiles:
        if t.proto == PROTO.ab_rhombus:
            a, b, c, d = t.quad
            for u, w, head in ((a, b, a), (b, c, c), (c, d, c), (d, a, a)):
                heads[frozenset((u, w))] = head

    squares = [t for t in tiles if t.proto == PROTO.ab_square]
    sinks = {}
    changed = True
    while changed:
        changed = False
        for sq in squares:
            if sq.key in sinks:
                continue
            q = sq.quad
            for k in range(4):
                sink = q[k]
                # edges around: sink collects both arrows, the opposite
                # corner emits both, the side corners pass one through
                pattern = (
                    (q[k], q[(k + 1) % 4], q[k]),
                    (q[k], q[(k + 3) % 4], q[k]),
                    (q[(k + 2) % 4], q[(k + 1) % 4], q[(k + 1) % 4]),
                    (q[(k + 2) % 4], q[(k + 3) % 4], q[(k + 3) % 4]),
                )
                known = [(frozenset((u, w)), h) for u, w, h in pattern
                         if frozenset((u, w)) in heads]
                if all(heads[e] == h for e, h in known) and \
                        _determined(pattern, heads, q):
                    sinks[sq.key] = sink
                    for u, w, h in pattern:
                        heads[frozenset((u, w))] = h
                    changed = True
                    break
    return sinks


def _determined(pattern, heads, q):
    """
    A pattern is accepted once it is the only one of the four consistent
    with the known heads.
    """
    known = dict((e, heads[e]) for e in
                 (frozenset((q[k], q[(k + 1) % 4])) for k in range(4))
                 if e in heads)
    if not known:
        return False
    fits = 0
    for k in range(4):
        cand = (
            (frozenset((q[k], q[(k + 1) % 4])), q[k]),
            (frozenset((q[k], q[(k + 3) % 4])), q[k]),
            (frozenset((q[(k + 2) % 4], q[(k + 1) % 4])), q[(k + 1) % 4]),
            (frozenset((q[(k + 2) % 4], q[(k + 3) % 4])), q[(k + 3) % 4]),
        )
        if all(known.get(e, h) == h for e, h in cand):
            fits += 1
    return fits == 1


def _to_tile(cand, sink):
    if cand.proto == PROTO.ab_rhombus:
        quad = cand.quad
        g = Isometry.from_vertices(get_prototile(PROTO.ab_rhombus).vertices,
                                   quad)
        return Tile.make(PROTO.ab_rhombus, g)
    q = cand.quad
    ref = get_prototile(PROTO.ab_triangle).vertices
    if sink is None:
        g = Isometry.from_vertices(ref, (q[0], q[1], q[3]))
        return whole_tile(PROTO.ab_square, g, decorated=False)
    k = q.index(sink)
    # the half with its right angle next to the sink: (R, P, Q) = (side,
    # source, sink)
    g = Isometry.from_vertices(ref, (q[(k + 1) % 4], q[(k + 2) % 4], sink))
    return whole_tile(PROTO.ab_square, g)


def reconstruct_tiling(s):
    """
    Rebuild the Ammann-Beenker squares and rhombuses, arrows included, from
    a vertex set. Tiles are trusted at least 3 edge lengths inside the
    window.

    Raises:
        ReconstructionError: no interior region, or the points do not form a
            legal Ammann-Beenker vertex configuration; :attr:`location` names
            the offending vertex

    Returns:
        :class:`~aperiodica.geometry.Patch` of ``ab-square`` and
        ``ab-rhombus`` tiles
    """
    if s.n != 8:
        raise SystemMismatchError(
            'Reconstruction needs Ammann-Beenker coordinates in Q(zeta_8)')
    inner = float(s.window) - INTERIOR_MARGIN
    if inner <= 0 or not any(abs(p) <= inner for p in s.points):
        raise ReconstructionError(
            'Window {} leaves no interior region'.format(s.window))

    neighbours = _unit_neighbours(s)
    cands = _resolve_conflicts(_candidates(s, neighbours))
    _check_angles(s, cands, inner)
    sinks = _square_arrows(cands)
    tiles = [_to_tile(c, sinks.get(c.key)) for c in cands]
    logger.info('Reconstructed {} tiles from {} points'.format(
        len(tiles), len(s.points)))
    return Patch(tiles, SYSTEM.ammann_beenker)


def interior_tiles(p, radius):
    return [t for t in p.tiles if all(abs(v) <= radius for v in t.vertices)]


def roundtrip_mismatches(original, reconstructed, window):
    """
    Tiles that differ between the merged view of `original` and
    `reconstructed` on the region trusted by :func:`reconstruct_tiling`.

    Returns:
        tuple: ``(missing, extra)`` lists of tile signatures
    """
    radius = float(window) - INTERIOR_MARGIN
    a = set(tile_signature(t) for t in
            interior_tiles(merge_halves(original), radius))
    b = set(tile_signature(t) for t in interior_tiles(reconstructed, radius))
    return sorted(a - b, key=repr), sorted(b - a, key=repr)
