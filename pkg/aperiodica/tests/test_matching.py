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
from fractions import Fraction
import unittest

from ..constants import PROTO
from ..cyclotomic import rational, zeta
from ..exceptions import MissingDecorationError
from ..geometry import Isometry, Patch, Tile
from ..matching import validate_matching_rules
from .utils import ab_octagon, penrose_sun


def _shared_decoration(p, idx):
    """A headed decoration of tile `idx` on an edge it shares."""
    tile = p.tiles[idx]
    others = set()
    for k, t in enumerate(p.tiles):
        if k != idx:
            others.update(frozenset(e) for e in t.edges())
    vs = tile.vertices
    for pos, (i, j, kind, head) in enumerate(tile.decorations):
        if head is not None and frozenset((vs[i], vs[j])) in others:
            return pos
    raise AssertionError('tile {} shares no decorated edge'.format(idx))


class MatchingTestCase(unittest.TestCase):
    def test_penrose_fixed_point(self):
        report = validate_matching_rules(penrose_sun(1))
        self.assertTrue(report.ok)
        self.assertEqual(len(report), 0)

    def test_penrose_merged(self):
        report = validate_matching_rules(penrose_sun(1, merged=True))
        self.assertEqual(report.violations, [])
        self.assertEqual(report.face_violations, [])

    def test_ammann_beenker_fixed_point(self):
        report = validate_matching_rules(ab_octagon(1))
        self.assertTrue(report.ok)

    def test_flipped_arrow(self):
        p = penrose_sun(0, merged=True)
        pos = _shared_decoration(p, 0)
        tile = p.tiles[0]
        decorations = list(tile.decorations)
        i, j, kind, head = decorations[pos]
        decorations[pos] = (i, j, kind, j if head == i else i)
        broken = Patch((Tile(tile.proto, tile.placement, decorations),) +
                       p.tiles[1:], p.system)

        report = validate_matching_rules(broken)
        self.assertFalse(report.ok)
        self.assertGreaterEqual(len(report), 1)
        self.assertIn(0, report.violations[0].tiles)

    def test_undecorated(self):
        p = penrose_sun(0, merged=True)
        bare = Patch([t.undecorated() for t in p.tiles], p.system)
        with self.assertRaises(MissingDecorationError):
            validate_matching_rules(bare)

    def test_face_to_face(self):
        offset = rational(8, Fraction(1, 2)) + zeta(8, 2)
        a = Tile.make(PROTO.ab_square, Isometry.identity(8))
        b = Tile.make(PROTO.ab_square, Isometry.translation(offset))
        self.assertEqual(a.decorations, ())

        report = validate_matching_rules(Patch([a, b], a.prototile.system))
        self.assertEqual(report.violations, [])
        self.assertGreaterEqual(len(report.face_violations), 1)
        self.assertEqual(report.to_dict()['ok'], False)
