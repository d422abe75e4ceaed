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
import copy
import os
import unittest

import numpy as np
from testfixtures import TempDirectory

from .. import SCHEMA_VERSION
from ..constants import PROTO, SYSTEM
from ..cyclotomic import CycloNumber, zeta
from ..document import (
    PatchDocument, dump_report, read_document, write_document)
from ..exceptions import InvalidDocumentError
from ..geometry import Isometry, Patch, PointSet, Tile
from .utils import ab_octagon, penrose_sun, pinwheel_points


def _octagon_document():
    patch = ab_octagon(0)
    return PatchDocument(patch=patch, points=_patch_points(patch),
                         meta={'seed': 'octagon', 'steps': 0})


def _patch_points(patch):
    return PointSet(patch.vertices(), patch.covered_radius(), patch.n)


class PatchDocumentTestCase(unittest.TestCase):
    def test_roundtrip(self):
        doc = _octagon_document()
        self.assertEqual(doc.system, SYSTEM.ammann_beenker)
        parsed = PatchDocument.parse(doc.serialize())
        self.assertEqual(parsed, doc)
        self.assertEqual(parsed.patch.tiles[0].decorations,
                         doc.patch.tiles[0].decorations)

    def test_deterministic(self):
        text = _octagon_document().serialize()
        self.assertTrue(text.endswith('}\n'))
        self.assertEqual(PatchDocument.parse(text).serialize(), text)
        self.assertEqual(PatchDocument.parse(text.encode('utf-8')),
                         PatchDocument.parse(text))

    def test_merged_penrose(self):
        doc = PatchDocument(patch=penrose_sun(1, merged=True))
        self.assertEqual(PatchDocument.parse(doc.serialize()), doc)

    def test_unbounded_points(self):
        s = pinwheel_points(1)
        doc = PatchDocument(points=PointSet(s.points, float('inf'), s.n,
                                            unwindowed=True))
        d = doc.to_dict()
        self.assertIsNone(d['system'])
        self.assertEqual(d['points']['window'], 'inf')
        self.assertNotIn('tiles', d)
        parsed = PatchDocument.from_dict(d)
        self.assertTrue(parsed.points.unwindowed)
        self.assertEqual(parsed.points, doc.points)

    def test_dump_report(self):
        text = dump_report({'b': Fraction(1, 3), 'a': [1, 2]})
        self.assertEqual(text, '{\n  "a": [\n    1,\n    2\n  ],\n'
                               '  "b": "1/3"\n}')

def _random_document(rng):
    tiles = []
    for _ in range(int(rng.integers(1, 6))):
        proto = (PROTO.ab_rhombus, PROTO.ab_triangle)[int(rng.integers(2))]
        trans = CycloNumber(8, [Fraction(int(rng.integers(-50, 51)),
                                         int(rng.integers(1, 8)))
                                for _ in range(4)])
        g = Isometry(zeta(8, int(rng.integers(8))), bool(rng.integers(2)),
                     trans)
        tiles.append(Tile.make(proto, g))
    patch = Patch(tiles, SYSTEM.ammann_beenker)
    points = PointSet(patch.vertices(), Fraction(int(rng.integers(1, 40)),
                                                 int(rng.integers(1, 5))),
                      patch.n)
    return PatchDocument(patch=patch, points=points,
                         meta={'steps': int(rng.integers(5))})


class RandomDocumentTestCase(unittest.TestCase):
    def test_roundtrip(self):
        rng = np.random.default_rng(7)
        for _ in range(500):
            doc = _random_document(rng)
            text = doc.serialize()
            parsed = PatchDocument.parse(text)
            self.assertEqual(parsed, doc)
            self.assertEqual(parsed.serialize(), text)



class InvalidDocumentTestCase(unittest.TestCase):
    def setUp(self):
        self.doc = PatchDocument(patch=ab_octagon(0)).to_dict()

    def assertInvalid(self, doc):
        with self.assertRaises(InvalidDocumentError):
            PatchDocument.from_dict(doc)

    def test_not_json(self):
        with self.assertRaises(InvalidDocumentError):
            PatchDocument.parse('{"schema_version": ')
        with self.assertRaises(InvalidDocumentError):
            PatchDocument.parse('[1, 2]')

    def test_schema_version(self):
        self.assertEqual(self.doc['schema_version'], SCHEMA_VERSION)
        self.doc['schema_version'] = '0'
        self.assertInvalid(self.doc)
        del self.doc['schema_version']
        self.assertInvalid(self.doc)

    def test_system(self):
        doc = copy.deepcopy(self.doc)
        doc['system'] = 'hat'
        self.assertInvalid(doc)
        doc['system'] = None
        self.assertInvalid(doc)

    def test_tiles(self):
        for field, value in (('proto', 'kite'),
                             ('rot', 'not-a-number'),
                             ('rot', '8:[2,0,0,0]'),
                             ('rot', '5:[1,0,0,0]'),
                             ('reflect', 'yes')):
            doc = copy.deepcopy(self.doc)
            doc['tiles'][0][field] = value
            self.assertInvalid(doc)

        doc = copy.deepcopy(self.doc)
        del doc['tiles'][0]['trans']
        self.assertInvalid(doc)

    def test_points(self):
        doc = PatchDocument(points=pinwheel_points(1)).to_dict()
        doc['points']['points'][0] = '8:[0,0,0,0]'
        self.assertInvalid(doc)


class DocumentFileTestCase(unittest.TestCase):
    def setUp(self):
        self.dir = TempDirectory()

    def tearDown(self):
        self.dir.cleanup()

    def test_write_read(self):
        doc = _octagon_document()
        path = os.path.join(self.dir.path, 'octagon.json')
        write_document(doc, path)
        self.assertEqual(read_document(path), doc)
        with open(path, 'rb') as f:
            self.assertEqual(f.read().decode('utf-8'), doc.serialize())

    def test_invalid_file(self):
        self.dir.write('broken.json', b'{"tiles": []}')
        with self.assertRaises(InvalidDocumentError):
            read_document(os.path.join(self.dir.path, 'broken.json'))

    def test_missing_file(self):
        with self.assertRaises(IOError):
            read_document(os.path.join(self.dir.path, 'missing.json'))
