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

from six.moves import range

from ..exceptions import NotOnUnitCircleError, SingularBasisError
from ..lattice import LatticeZ2Q, hnf, lattice_intersect, scd_layer_analysis


PYTHAGOREAN = (Fraction(3, 5), Fraction(4, 5))


def _brute_index(g, h, box):
    """Index of ``Z^2 cap h`` in ``Z^2`` by counting a period box."""
    hits = sum(1 for a in range(box) for b in range(box) if (a, b) in h)
    return Fraction(box * box, hits)


class LatticeTestCase(unittest.TestCase):
    def test_singular(self):
        with self.assertRaises(SingularBasisError):
            LatticeZ2Q([[1, 2], [2, 4]])

    def test_equality(self):
        z2 = LatticeZ2Q.integer()
        sheared = LatticeZ2Q([[1, 1], [0, 1]])
        self.assertEqual(z2, sheared)
        self.assertEqual(hash(z2), hash(sheared))
        self.assertNotEqual(z2, LatticeZ2Q([[2, 0], [0, 1]]))
        self.assertEqual(z2.dual(), z2)

    def test_membership(self):
        half = LatticeZ2Q([[Fraction(1, 2), 0], [0, Fraction(1, 2)]])
        self.assertIn((Fraction(1, 2), 3), half)
        self.assertNotIn((Fraction(1, 3), 0), half)
        self.assertEqual(LatticeZ2Q.integer() + half, half)
        self.assertEqual(half.covolume, Fraction(1, 4))

    def test_hnf(self):
        h = hnf([[4, 6, 2], [1, 0, 5]])
        self.assertEqual(h[0, 1], 0)
        self.assertEqual(list(h[:, 2]), [0, 0])
        self.assertGreater(h[0, 0], 0)
        self.assertGreater(h[1, 1], 0)
        self.assertTrue(0 <= h[1, 0] < h[1, 1])
        # gcd of the 2x2 minors -6, 18 and 30
        self.assertEqual(h[0, 0] * h[1, 1], 6)


class IntersectionTestCase(unittest.TestCase):
    def test_pythagorean_rotation(self):
        g = LatticeZ2Q.integer()
        h = g.rotated(*PYTHAGOREAN)
        result = lattice_intersect(g, h)
        self.assertEqual(result.index_in_g, 5)
        self.assertEqual(result.index_in_h, 5)
        self.assertEqual(_brute_index(g, h, 5), 5)
        for v in result.sublattice.columns:
            self.assertIn(v, g)
            self.assertIn(v, h)

    def test_sublattice(self):
        g = LatticeZ2Q.integer()
        h = LatticeZ2Q([[2, 1], [0, 3]])
        result = lattice_intersect(g, h)
        self.assertEqual(result.sublattice, h)
        self.assertEqual(result.index_in_g, 6)
        self.assertEqual(result.index_in_h, 1)

    def test_symmetric_index(self):
        g = LatticeZ2Q([[1, Fraction(1, 2)], [0, 2]])
        h = LatticeZ2Q([[Fraction(2, 3), 0], [1, 1]])
        result = lattice_intersect(g, h)
        total = g + h
        self.assertEqual(result.index_in_g,
                         h.covolume / total.covolume)
        self.assertEqual(result.index_in_h,
                         g.covolume / total.covolume)


class LayerTestCase(unittest.TestCase):
    def test_incommensurate(self):
        result = scd_layer_analysis(LatticeZ2Q.integer(), PYTHAGOREAN, 2)
        self.assertEqual(result.indices, [1, 25, 625])
        self.assertTrue(result.strictly_growing)
        self.assertFalse(result.commensurate)
        self.assertIsNone(result.order)

    def test_one_sided(self):
        result = scd_layer_analysis(LatticeZ2Q.integer(), PYTHAGOREAN, 3,
                                    one_sided=True)
        self.assertEqual(result.indices, [1, 5, 25, 125])
        self.assertTrue(result.to_dict()['one_sided'])

    def test_commensurate(self):
        result = scd_layer_analysis(LatticeZ2Q.integer(), (0, 1), 3)
        self.assertEqual(result.indices, [1, 1, 1, 1])
        self.assertTrue(result.commensurate)
        self.assertEqual(result.order, 4)
        self.assertFalse(result.strictly_growing)

    def test_bad_arguments(self):
        with self.assertRaises(NotOnUnitCircleError):
            scd_layer_analysis(LatticeZ2Q.integer(), (1, 1), 2)
        with self.assertRaises(ValueError):
            scd_layer_analysis(LatticeZ2Q.integer(), PYTHAGOREAN, 9)
