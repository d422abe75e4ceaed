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
:mod:`matching` -- Matching Rules
=================================
Checks that decorated tiles meet edge to edge with matching arrows.
"""
import logging

import numpy as np
from scipy.spatial import cKDTree

from .exceptions import MissingDecorationError
from .geometry import on_open_segment


logger = logging.getLogger(__name__)


class Violation(object):
    """
    A shared edge whose two labels disagree, or for face-to-face violations
    an edge with a vertex of another tile in its interior.
    """
    def __init__(self, tiles, edge, reason):
        self.tiles = tuple(tiles)
        self.edge = tuple(edge)
        self.reason = reason

    def to_dict(self):
        return {
            'tiles': list(self.tiles),
            'edge': [str(v) for v in self.edge],
            'reason': self.reason,
        }

    def __repr__(self):
        return 'Violation(tiles={}, reason={!r})'.format(self.tiles,
                                                         self.reason)


class MatchingReport(object):
    def __init__(self, violations, face_violations):
        self.violations = list(violations)
        self.face_violations = list(face_violations)

    @property
    def ok(self):
        return not self.violations and not self.face_violations

    def __len__(self):
        return len(self.violations)

    def __iter__(self):
        return iter(self.violations)

    def to_dict(self):
        return {
            'ok': self.ok,
            'violations': [v.to_dict() for v in self.violations],
            'face_violations': [v.to_dict() for v in self.face_violations],
        }


def _labels(tile):
    vs = tile.vertices
    labels = {}
    for i, j, kind, head in tile.decorations:
        labels[frozenset((vs[i], vs[j]))] = (
            kind, vs[head] if head is not None else None)
    return labels


def validate_matching_rules(p):
    """
    Compare the labels on every edge shared by two tiles. Arrow kind and
    direction have to agree; an edge unlabelled on one side has to be
    unlabelled on the other. Vertices lying inside an edge of another tile
    are reported separately as face-to-face violations.

    Raises:
        MissingDecorationError: a tile of the patch carries no decorations

    Returns:
        :class:`MatchingReport`
    """
    for idx, t in enumerate(p.tiles):
        if t.decorations is None:
            raise MissingDecorationError(
                'Tile {} of the patch is undecorated'.format(idx))

    edges = {}
    for idx, t in enumerate(p.tiles):
        labels = _labels(t)
        for a, b in t.edges():
            key = frozenset((a, b))
            edges.setdefault(key, []).append((idx, labels.get(key)))

    violations = []
    for key, owners in sorted(edges.items(),
                              key=lambda kv: sorted(kv[1])[0][0]):
        if len(owners) == 2:
            (i, la), (j, lb) = owners
            if la != lb:
                violations.append(Violation(
                    (i, j), sorted(key, key=lambda v: v.sort_key()),
                    'labels {} and {} differ'.format(la, lb)))
        elif len(owners) > 2:
            violations.append(Violation(
                [o[0] for o in owners],
                sorted(key, key=lambda v: v.sort_key()),
                'edge shared by more than two tiles'))

    face_violations = _face_to_face(p, edges)
    logger.debug('Matching rules: {} violations, {} face-to-face'.format(
        len(violations), len(face_violations)))
    return MatchingReport(violations, face_violations)


def _face_to_face(p, edges):
    vertices = p.vertices()
    if not vertices:
        return []
    coords = np.array([[z.real, z.imag] for z in
                       (v.embed() for v in vertices)])
    tree = cKDTree(coords)
    found = []
    for key, owners in edges.items():
        if len(owners) != 1:
            continue
        a, b = sorted(key, key=lambda v: v.sort_key())
        za, zb = a.embed(), b.embed()
        mid = (za + zb) / 2
        for k in tree.query_ball_point((mid.real, mid.imag),
                                       abs(zb - za) / 2 + 1e-9):
            if on_open_segment(a, b, vertices[k]):
                found.append(Violation([owners[0][0]], (a, b),
                                       'vertex {} inside edge'.format(
                                           vertices[k])))
    found.sort(key=lambda v: v.tiles)
    return found
