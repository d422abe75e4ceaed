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

import numpy as np

from ..constants import PROTO, SYSTEM
from ..cyclotomic import CycloNumber, golden_ratio, rational, zeta, zeta10
from ..exceptions import (
    FieldMismatchError, NonExactIsometryError, WindowExceededError)
from ..geometry import (
    Isometry, Patch, PointSet, Tile, apply_isometry, area_form, contains,
    difference_set, get_prototile, interior_disjoint, merge_halves,
    on_open_segment, orientation, signed_area, split_merged, tile_signature,
    whole_tile)
from ..inflation import seed_patch
from ..samples import integer_sample


def q8(x):
    return rational(8, x)


class IsometryTestCase(unittest.TestCase):
    def test_apply(self):
        g = Isometry(zeta(8, 2), False, q8(1))
        self.assertEqual(g.apply(q8(1)), 1 + zeta(8, 2))
        r = Isometry(q8(1), True)
        self.assertEqual(r(zeta(8)), zeta(8, 7))

    def test_compose_and_inverse(self):
        g = Isometry(zeta(8, 3), True, zeta(8) + 2)
        h = Isometry(zeta(8, 1), False, q8(Fraction(1, 2)))
        x = 3 * zeta(8, 2) - 1
        self.assertEqual((g * h)(x), g(h(x)))
        self.assertTrue((g * g.inverse()).is_identity())
        self.assertTrue((g.inverse() * g).is_identity())
        self.assertEqual(g.inverse()(g(x)), x)

    def test_linear_part(self):
        g = Isometry(zeta(8, 3), True, zeta(8))
        self.assertFalse(g.is_linear())
        self.assertTrue(g.linear_part().is_linear())
        self.assertEqual(g.linear_part().rot, g.rot)

    def test_from_vertices(self):
        ref = get_prototile(PROTO.ab_triangle).vertices
        g = Isometry(zeta(8, 5), True, 1 + zeta(8))
        target = tuple(g(v) for v in ref)
        self.assertEqual(Isometry.from_vertices(ref, target), g)

        with self.assertRaises(NonExactIsometryError):
            Isometry.from_vertices(ref, (q8(0), q8(2), q8(5)))

    def test_validate(self):
        with self.assertRaises(NonExactIsometryError):
            Isometry(q8(2)).validate()
        Isometry(zeta(8)).validate()

    def test_field_mismatch(self):
        with self.assertRaises(FieldMismatchError):
            Isometry(zeta(8), False, zeta(5))


class PredicateTestCase(unittest.TestCase):
    def setUp(self):
        self.i = zeta(8, 2)
        self.square = (q8(0), q8(1), 1 + self.i, self.i)

    def test_area_form(self):
        self.assertEqual(area_form(self.square), 2 * self.i)
        self.assertAlmostEqual(signed_area(self.square), 1)
        self.assertAlmostEqual(signed_area(tuple(reversed(self.square))), -1)

    def test_orientation(self):
        self.assertEqual(orientation(q8(0), q8(1), self.i), 1)
        self.assertEqual(orientation(q8(0), self.i, q8(1)), -1)
        self.assertEqual(orientation(q8(0), q8(1), q8(3)), 0)

    def test_contains(self):
        centre = (1 + self.i) / 2
        self.assertTrue(contains(self.square, centre))
        self.assertTrue(contains(self.square, q8(1)))
        self.assertFalse(contains(self.square, q8(1), strict=True))
        self.assertFalse(contains(self.square, q8(2)))

    def test_interior_disjoint(self):
        right = tuple(v + 1 for v in self.square)
        shifted = tuple(v + Fraction(1, 2) for v in self.square)
        self.assertTrue(interior_disjoint(self.square, right))
        self.assertFalse(interior_disjoint(self.square, shifted))

    def test_on_open_segment(self):
        self.assertTrue(on_open_segment(q8(0), q8(2), q8(1)))
        self.assertFalse(on_open_segment(q8(0), q8(2), q8(2)))
        self.assertFalse(on_open_segment(q8(0), q8(2), q8(3)))
        self.assertFalse(on_open_segment(q8(0), q8(2), self.i))


class TileTestCase(unittest.TestCase):
    def test_vertices_follow_placement(self):
        g = Isometry(zeta(8, 2), False, q8(3))
        t = Tile.make(PROTO.ab_rhombus, g)
        self.assertEqual(t.vertices[0], q8(3))
        self.assertEqual(t.vertices[1], 3 + zeta(8, 2))
        self.assertEqual(t.decorations,
                         get_prototile(PROTO.ab_rhombus).decorations)
        self.assertIsNone(t.undecorated().decorations)

    def test_moved(self):
        t = Tile.make(PROTO.ab_rhombus, Isometry.identity(8))
        g = Isometry(zeta(8, 1), False, q8(1))
        self.assertEqual(t.moved(g).vertices, tuple(g(v) for v in t.vertices))

    def test_equality(self):
        g = Isometry(zeta(8, 2))
        self.assertEqual(Tile.make(PROTO.ab_rhombus, g),
                         Tile.make(PROTO.ab_rhombus, g))
        self.assertNotEqual(Tile.make(PROTO.ab_rhombus, g),
                            Tile.make(PROTO.ab_rhombus, g).undecorated())


class MergeTestCase(unittest.TestCase):
    def test_ab_square_seed_merges_to_one_square(self):
        seed = seed_patch(SYSTEM.ammann_beenker, 'square')
        merged = merge_halves(seed)
        self.assertEqual(len(merged), 1)
        self.assertEqual(merged.tiles[0].proto, PROTO.ab_square)
        self.assertEqual(set(merged.tiles[0].vertices), set(seed.vertices()))
        self.assertEqual(merged.type_counts(), seed.type_counts())

    def test_penrose_sun_merges_to_five_thick_rhombi(self):
        seed = seed_patch(SYSTEM.penrose, 'sun')
        self.assertEqual(len(seed), 10)
        merged = merge_halves(seed)
        self.assertEqual(len(merged), 5)
        self.assertTrue(all(t.proto == PROTO.penrose_thick for t in merged))
        self.assertEqual(merged.type_counts(),
                         {PROTO.penrose_thick_half: 10})
        # acute corners meet at the origin
        zero = rational(5, 0)
        self.assertTrue(all(zero in t.vertices for t in merged))

    def test_merged_area_is_sum_of_halves(self):
        seed = seed_patch(SYSTEM.penrose, 'sun')
        self.assertEqual(merge_halves(seed).total_area_form(),
                         seed.total_area_form())

    def test_split_inverts_merge(self):
        seed = seed_patch(SYSTEM.penrose, 'sun')
        split = split_merged(merge_halves(seed))
        self.assertEqual(set(tile_signature(t) for t in split),
                         set(tile_signature(t) for t in seed))

    def test_whole_tile(self):
        t = whole_tile(PROTO.penrose_thin, Isometry.identity(5))
        w = zeta10(1)
        self.assertEqual(t.proto, PROTO.penrose_thin)
        self.assertEqual(set(t.vertices), {rational(5, 0), rational(5, 1),
                                           1 + w, w})
        self.assertEqual(len(t.decorations), 4)

    def test_unpaired_halves_are_kept(self):
        seed = seed_patch(SYSTEM.penrose, 'sun')
        part = Patch(seed.tiles[:3], SYSTEM.penrose)
        self.assertEqual(len(merge_halves(part)), 2)


class PointSetTestCase(unittest.TestCase):
    def setUp(self):
        self.s = integer_sample(5)

    def test_dedupes_and_sorts(self):
        s = PointSet([q8(2), q8(1), q8(2)], 3)
        self.assertEqual(s.points, (q8(1), q8(2)))
        self.assertEqual(s.window, 3)

    def test_float_window_becomes_exact(self):
        s = PointSet([q8(0)], 2.5)
        self.assertEqual(s.window, Fraction(5, 2))

    def test_within_and_restrict(self):
        self.assertEqual(len(self.s), 11)
        self.assertEqual(len(self.s.within(2)), 5)
        self.assertEqual(len(self.s.within(1, (3.0, 0.0))), 3)
        r = self.s.restrict(3)
        self.assertEqual(len(r), 7)
        self.assertEqual(r.window, 3)
        with self.assertRaises(WindowExceededError):
            self.s.restrict(6)

    def test_nearest_and_contains(self):
        k, d = self.s.nearest((2.2, 0.0))
        self.assertEqual(self.s.points[k], rational(4, 2))
        self.assertAlmostEqual(d, 0.2)
        self.assertIn(rational(4, -5), self.s)
        self.assertNotIn(rational(4, 6), self.s)

    def test_promote(self):
        p = self.s.promote(8)
        self.assertEqual(p.n, 8)
        self.assertIn(q8(3), p)
        self.assertEqual(p.window, self.s.window)

    def test_difference_set(self):
        diffs = difference_set(self.s, 2)
        self.assertEqual(diffs, frozenset(rational(4, k)
                                          for k in range(-2, 3)))
        with self.assertRaises(WindowExceededError):
            difference_set(self.s, 6)

    def test_apply_isometry_translation_shrinks_window(self):
        t = Isometry.translation(rational(4, Fraction(1, 2)))
        moved = apply_isometry(t, self.s)
        self.assertEqual(moved.window, Fraction(9, 2))
        self.assertIn(rational(4, Fraction(11, 2)), moved)
        self.assertEqual(moved.dim, 1)

    def test_apply_isometry_linear_keeps_window(self):
        rot = apply_isometry(Isometry(zeta(4)), self.s)
        self.assertEqual(rot.window, self.s.window)
        self.assertIn(3 * zeta(4), rot)
        self.assertEqual(rot.dim, 2)

    def test_apply_isometry_field_mismatch(self):
        with self.assertRaises(FieldMismatchError):
            apply_isometry(Isometry(zeta(8)), self.s)

    def test_apply_isometry_inverse_roundtrip(self):
        rng = np.random.default_rng(3)
        s = PointSet([CycloNumber(8, [Fraction(int(rng.integers(-40, 41)), 4)
                                      for _ in range(4)])
                      for _ in range(60)], 10)
        for _ in range(50):
            trans = CycloNumber(8, [Fraction(int(rng.integers(-4, 5)), 2),
                                    0, 0, 0])
            g = Isometry(zeta(8, int(rng.integers(8))), bool(rng.integers(2)),
                         trans)
            back = apply_isometry(g.inverse(), apply_isometry(g, s))
            self.assertEqual(set(back.points), set(s.points))
            if trans.is_zero():
                self.assertEqual(back, s)

    def test_apply_isometry_to_patch(self):
        seed = seed_patch(SYSTEM.penrose, 'sun')
        g = Isometry(zeta10(2))
        rotated = apply_isometry(g, seed)
        self.assertEqual(set(rotated.vertices()), set(seed.vertices()))
        tau = golden_ratio()
        self.assertIn(tau * zeta(5, 1), set(rotated.vertices()))


class CyclotomicPointTestCase(unittest.TestCase):
    def test_points_are_hashable_keys(self):
        s = PointSet([CycloNumber(8, [1, 1, 0, 0]), zeta(8) + 1], 4)
        self.assertEqual(len(s), 1)
