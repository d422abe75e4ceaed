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
import math
import unittest

from ..constants import PROTO, SEED, SYSTEM
from ..cyclotomic import rational, sqrt2, zeta
from ..exceptions import (
    IllegalSeedError, SystemMismatchError, WindowExceededError)
from ..geometry import Isometry, Patch, Tile
from ..inflation import (
    ammann_beenker_rule, control_points, fixed_point_patch, get_rule,
    inflate, nesting_certificate, orientation_count, penrose_rule,
    pinwheel_rule, seed_patch, seed_period, tile_count_prediction,
    verify_stone_inflation, vertex_set)
from .utils import ab_octagon, pinwheel


class StoneInflationTestCase(unittest.TestCase):
    def test_rules_are_stone_inflations(self):
        for rule in (ammann_beenker_rule(), penrose_rule(), pinwheel_rule()):
            report = verify_stone_inflation(rule)
            self.assertTrue(report.ok, report.failures)
            self.assertEqual(report.failures, ())

    def test_perturbed_rule_fails(self):
        offsets = {
            SYSTEM.ammann_beenker: rational(8, Fraction(1, 10)),
            SYSTEM.penrose: rational(5, Fraction(1, 10)),
            SYSTEM.pinwheel: rational(4, Fraction(1, 10)),
        }
        for system, offset in offsets.items():
            rule = get_rule(system)
            proto = rule.protos[0]
            report = verify_stone_inflation(rule.perturbed(proto, 0, offset))
            self.assertFalse(report.ok)
            self.assertFalse(report.cover_ok)
            self.assertTrue(report.failures)

    def test_perron_eigenvalues(self):
        silver2 = (1 + math.sqrt(2)) ** 2
        golden2 = ((1 + math.sqrt(5)) / 2) ** 2
        self.assertAlmostEqual(
            ammann_beenker_rule().matrix().perron_eigenvalue(), silver2)
        self.assertAlmostEqual(
            penrose_rule().matrix().perron_eigenvalue(), golden2)
        self.assertAlmostEqual(
            pinwheel_rule().matrix().perron_eigenvalue(), 5)

    def test_substitution_matrices(self):
        m = ammann_beenker_rule().matrix()
        self.assertEqual(m.protos, (PROTO.ab_rhombus, PROTO.ab_triangle))
        self.assertEqual(m.to_list(), [[3, 2], [4, 3]])
        m = penrose_rule().matrix()
        self.assertEqual(m.protos, (PROTO.penrose_thick_half,
                                    PROTO.penrose_thin_half))
        self.assertEqual(m.to_list(), [[2, 1], [1, 1]])

    def test_report_dict(self):
        d = verify_stone_inflation(pinwheel_rule()).to_dict()
        self.assertEqual(d['matrix']['counts'], [[5]])
        self.assertTrue(d['area_ok'])


class InflateTestCase(unittest.TestCase):
    def test_pinwheel_counts(self):
        for k in range(6):
            self.assertEqual(len(pinwheel(k)), 5 ** k)

    def test_pinwheel_orientations_grow(self):
        counts = [orientation_count(pinwheel(k)) for k in range(6)]
        for a, b in zip(counts, counts[1:]):
            self.assertLess(a, b)

    def test_orientation_ignores_reflection(self):
        rot = zeta(8, 1)
        p = Patch([Tile.make(PROTO.ab_rhombus, Isometry(rot)),
                   Tile.make(PROTO.ab_rhombus, Isometry(rot, True))],
                  SYSTEM.ammann_beenker)
        self.assertEqual(orientation_count(p), 1)

    def test_counts_follow_matrix(self):
        for system, seed in ((SYSTEM.ammann_beenker, SEED.ab_octagon),
                             (SYSTEM.penrose, SEED.penrose_sun),
                             (SYSTEM.ammann_beenker, SEED.ab_square)):
            p = seed_patch(system, seed)
            for steps in (1, 2):
                predicted = tile_count_prediction(p, steps)
                actual = inflate(p, steps).type_counts()
                self.assertEqual(
                    dict((k, v) for k, v in predicted.items() if v),
                    dict(actual))

    def test_area_scales_exactly(self):
        for system, seed in ((SYSTEM.ammann_beenker, SEED.ab_star),
                             (SYSTEM.penrose, SEED.penrose_sun),
                             (SYSTEM.pinwheel, SEED.pinwheel_origin)):
            p = seed_patch(system, seed)
            lam2 = get_rule(system).factor.abs2()
            self.assertEqual(inflate(p, 1).total_area_form(),
                             lam2 * p.total_area_form())

    def test_undecorated_tiles_stay_undecorated(self):
        p = seed_patch(SYSTEM.penrose, SEED.penrose_sun)
        bare = Patch([t.undecorated() for t in p], p.system)
        self.assertTrue(all(t.decorations is None
                            for t in inflate(bare, 1)))

    def test_rule_of_other_system(self):
        p = seed_patch(SYSTEM.penrose, SEED.penrose_sun)
        with self.assertRaises(SystemMismatchError):
            inflate(p, 1, pinwheel_rule())
        with self.assertRaises(SystemMismatchError):
            get_rule('hat')


class SeedTestCase(unittest.TestCase):
    def test_octagon_seed(self):
        p = ab_octagon(0)
        self.assertEqual(len(p), 32)
        self.assertEqual(p.type_counts(), {PROTO.ab_triangle: 16,
                                           PROTO.ab_rhombus: 16})
        far = max((v.abs2() for v in p.vertices()),
                  key=lambda r: r.embed().real)
        self.assertEqual(far, 4 + 2 * sqrt2())

    def test_seed_periods(self):
        self.assertEqual(seed_period(SYSTEM.ammann_beenker, SEED.ab_square),
                         2)
        self.assertEqual(seed_period(SYSTEM.ammann_beenker, SEED.ab_octagon),
                         1)
        self.assertEqual(seed_period(SYSTEM.penrose, SEED.penrose_sun), 2)
        self.assertEqual(seed_period(SYSTEM.pinwheel, SEED.pinwheel_origin),
                         1)

    def test_illegal_seed(self):
        with self.assertRaises(IllegalSeedError):
            seed_patch(SYSTEM.ammann_beenker, SEED.penrose_sun)
        with self.assertRaises(IllegalSeedError):
            fixed_point_patch(SYSTEM.pinwheel, SEED.ab_square, 1)

    def test_nesting(self):
        for system, seed in ((SYSTEM.ammann_beenker, SEED.ab_octagon),
                             (SYSTEM.ammann_beenker, SEED.ab_square),
                             (SYSTEM.penrose, SEED.penrose_sun),
                             (SYSTEM.pinwheel, SEED.pinwheel_origin)):
            self.assertTrue(nesting_certificate(system, seed, 0),
                            (system, seed))
        self.assertTrue(nesting_certificate(SYSTEM.pinwheel,
                                            SEED.pinwheel_origin, 2))
        self.assertTrue(nesting_certificate(SYSTEM.ammann_beenker,
                                            SEED.ab_octagon, 1))

    def test_fixed_point_steps_use_period(self):
        square = fixed_point_patch(SYSTEM.ammann_beenker, SEED.ab_square, 1)
        seed = seed_patch(SYSTEM.ammann_beenker, SEED.ab_square)
        self.assertEqual(len(square), len(inflate(seed, 2)))


class PointExtractionTestCase(unittest.TestCase):
    def test_vertex_set(self):
        p = ab_octagon(1)
        s = vertex_set(p)
        self.assertEqual(s.n, 8)
        self.assertGreater(float(s.window), 2)
        self.assertTrue(all(abs(v) <= float(s.window) + 1e-9 for v in s))
        self.assertIn(rational(8, 0), s)

    def test_vertex_set_window_too_large(self):
        p = ab_octagon(0)
        with self.assertRaises(WindowExceededError):
            vertex_set(p, 10)

    def test_control_points(self):
        p = pinwheel(2)
        pts = control_points(p)
        self.assertEqual(len(pts), 25)
        self.assertIn(rational(4, 0), pts)

    def test_control_points_only_for_pinwheel(self):
        with self.assertRaises(SystemMismatchError):
            control_points(ab_octagon(0))
