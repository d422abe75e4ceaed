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

import numpy as np

from ..cyclotomic import (
    CycloNumber, cyclo_arith, degree, golden_ratio, rational, silver_ratio,
    sqrt2, zeta, zeta10)
from ..exceptions import IndexMismatchError
from ..utils.encoding import (
    cyclo_from_str, cyclo_to_str, encodify, fraction_from_str,
    fraction_to_str)


class CycloNumberTestCase(unittest.TestCase):
    def test_roots_of_unity(self):
        z = zeta(8)
        self.assertEqual(z ** 8, 1)
        self.assertEqual(z ** 4, -1)
        self.assertEqual(zeta(5) ** 5, 1)
        self.assertEqual(zeta(4) ** 2, -1)

    def test_zeta10_lives_in_q_zeta5(self):
        w = zeta10(1)
        self.assertEqual(w.n, 5)
        self.assertEqual(w ** 10, 1)
        self.assertEqual(zeta10(5), -1)
        self.assertEqual(zeta10(2), zeta(5, 1))

    def test_named_constants(self):
        self.assertEqual(sqrt2() ** 2, 2)
        lam = silver_ratio()
        self.assertEqual(lam * lam, 2 * lam + 1)
        tau = golden_ratio()
        self.assertEqual(tau * tau, tau + 1)
        self.assertAlmostEqual(tau.embed().real, (1 + math.sqrt(5)) / 2)
        self.assertAlmostEqual(tau.embed().imag, 0)

    def test_field_operations(self):
        x = CycloNumber(8, [1, Fraction(2, 3), 0, -5])
        self.assertEqual(x * x.inverse(), 1)
        self.assertEqual(x / x, 1)
        self.assertEqual((x - x), 0)
        self.assertEqual(x + 0, x)
        self.assertEqual(2 - x, -(x - 2))
        self.assertEqual(x ** -2 * x ** 2, 1)

    def test_conj_and_norm(self):
        z = zeta(8)
        self.assertEqual(z.conj(), zeta(8, 7))
        self.assertEqual(sqrt2().norm(), 4)
        self.assertTrue(z.abs2().is_rational())
        self.assertEqual(z.abs2(), 1)
        self.assertTrue(sqrt2().is_real())
        self.assertFalse(z.is_real())

    def test_galois_rejects_non_units(self):
        with self.assertRaises(ValueError):
            zeta(8).galois(2)

    def test_inverse_of_zero(self):
        with self.assertRaises(ZeroDivisionError):
            rational(5, 0).inverse()

    def test_mismatched_fields(self):
        with self.assertRaises(IndexMismatchError):
            zeta(4) + zeta(8)
        with self.assertRaises(IndexMismatchError):
            cyclo_arith(zeta(5), zeta(8), 'mul')
        with self.assertRaises(IndexMismatchError):
            CycloNumber(7, [1])

    def test_cyclo_arith(self):
        a, b = zeta(8), sqrt2()
        self.assertEqual(cyclo_arith(a, b, 'add'), a + b)
        self.assertEqual(cyclo_arith(a, b, 'sub'), a - b)
        self.assertEqual(cyclo_arith(a, b, 'mul'), a * b)
        with self.assertRaises(ValueError):
            cyclo_arith(a, b, 'pow')

    def test_root_of_unity_order(self):
        self.assertEqual(zeta(8).root_of_unity_order(48), 8)
        self.assertEqual(zeta(8, 2).root_of_unity_order(48), 4)
        self.assertEqual(zeta10(1).root_of_unity_order(48), 10)
        self.assertEqual(rational(4, -1).root_of_unity_order(48), 2)
        self.assertEqual(rational(4, 1).root_of_unity_order(48), 1)
        # 3-4-5 rotation: modulus one but of infinite order
        r = CycloNumber(4, [Fraction(3, 5), Fraction(4, 5)])
        self.assertEqual(r.abs2(), 1)
        self.assertIsNone(r.root_of_unity_order(48))
        self.assertIsNone(sqrt2().root_of_unity_order(48))

    def test_promote(self):
        x = CycloNumber(4, [1, 2])
        y = x.promote(8)
        self.assertEqual(y, 1 + 2 * zeta(8, 2))
        self.assertAlmostEqual(abs(y.embed() - x.embed()), 0)
        self.assertEqual(rational(4, 3).promote(5), rational(5, 3))
        with self.assertRaises(IndexMismatchError):
            zeta(5).promote(8)

    def test_embedding(self):
        z = zeta(8).embed()
        self.assertAlmostEqual(z.real, math.sqrt(2) / 2)
        self.assertAlmostEqual(z.imag, math.sqrt(2) / 2)
        self.assertAlmostEqual(abs(zeta(5, 2)), 1)
        self.assertEqual(rational(8, 2).sort_key(), (2.0, 0.0))

    def test_rational_equality_and_hash(self):
        x = rational(8, Fraction(3, 2))
        self.assertEqual(x, Fraction(3, 2))
        self.assertEqual(hash(x), hash(Fraction(3, 2)))
        self.assertNotEqual(rational(8, 1), rational(4, 1))
        self.assertEqual(len({zeta(8), zeta(8, 9), zeta(8, 1)}), 1)

    def test_immutable(self):
        with self.assertRaises(AttributeError):
            zeta(8).n = 4

    def test_string_form(self):
        x = CycloNumber(8, [1, 0, Fraction(-1, 2), 0])
        self.assertEqual(x.to_string(), '8:[1,0,-1/2,0]')
        self.assertEqual(CycloNumber.from_string(x.to_string()), x)
        with self.assertRaises(ValueError):
            CycloNumber.from_string('8:[1,0]')

def _random_number(rng, n, bound=100):
    return CycloNumber(n, [Fraction(int(rng.integers(-bound, bound + 1)),
                                    int(rng.integers(1, 10)))
                           for _ in range(degree(n))])


class FieldLawTestCase(unittest.TestCase):
    trials = 1000

    def test_distributive_and_associative(self):
        rng = np.random.default_rng(20)
        for n in (4, 5, 8):
            for _ in range(self.trials):
                x, y, z = (_random_number(rng, n) for _ in range(3))
                self.assertEqual(x * (y + z), x * y + x * z)
                self.assertEqual((x * y) * z, x * (y * z))
                self.assertEqual((x + y) + z, x + (y + z))

    def test_embedding_is_multiplicative(self):
        rng = np.random.default_rng(21)
        bound = 2 ** 20
        for n in (4, 5, 8):
            for _ in range(200):
                x = CycloNumber(n, [int(rng.integers(-bound, bound + 1))
                                    for _ in range(degree(n))])
                y = CycloNumber(n, [int(rng.integers(-bound, bound + 1))
                                    for _ in range(degree(n))])
                expected = x.embed() * y.embed()
                # float error grows with the coefficients, not the value
                scale = max(1.0, sum(abs(float(c)) for c in x.coeffs) *
                            sum(abs(float(c)) for c in y.coeffs))
                self.assertLess(abs((x * y).embed() - expected) / scale,
                                1e-9)
                self.assertLess(
                    abs((x + y).embed() - x.embed() - y.embed()) / scale,
                    1e-9)



class EncodingTestCase(unittest.TestCase):
    def test_fraction_to_str(self):
        self.assertEqual(fraction_to_str(Fraction(3, 4)), '3/4')
        self.assertEqual(fraction_to_str(Fraction(-6, 3)), '-2')
        self.assertEqual(fraction_to_str(5), '5')

    def test_fraction_from_str(self):
        self.assertEqual(fraction_from_str(' -7/3 '), Fraction(-7, 3))
        self.assertEqual(fraction_from_str('12'), 12)
        for bad in ('1.5', '1e3', 'a/b', '', 3):
            with self.assertRaises(ValueError):
                fraction_from_str(bad)

    def test_cyclo_strings(self):
        text = cyclo_to_str(5, [Fraction(1, 2), 0, 0, -1])
        self.assertEqual(text, '5:[1/2,0,0,-1]')
        self.assertEqual(cyclo_from_str(text),
                         (5, [Fraction(1, 2), 0, 0, -1]))
        with self.assertRaises(ValueError):
            cyclo_from_str('[1,2]')
        with self.assertRaises(ValueError):
            cyclo_from_str(None)

    def test_encodify(self):
        self.assertEqual(encodify(u'abc'), b'abc')
        self.assertEqual(encodify(b'abc'), b'abc')
