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
:mod:`cyclotomic` -- Exact Cyclotomic Numbers
=============================================
Exact arithmetic in the cyclotomic fields Q(zeta_n) for n in {4, 5, 8}. The
primitive root is fixed as ``zeta_n = exp(2 pi i / n)``. Every planar
coordinate used by the tiling systems is one :class:`CycloNumber`, read as a
complex number.

Q(zeta_5) also hosts the tenth roots of unity since ``zeta_10 = -zeta_5^3``.
"""
import cmath
from fractions import Fraction
import math
import numbers

from six.moves import range

from .exceptions import IndexMismatchError
from .utils.encoding import cyclo_from_str, cyclo_to_str

#: Coefficients (lowest degree first, leading 1 omitted) of the cyclotomic
#: polynomials, stored as x^d = -(c_0 + c_1 x + ... + c_{d-1} x^{d-1})
_REDUCTION = {
    4: (1, 0),
    5: (1, 1, 1, 1),
    8: (1, 0, 0, 0),
}

SUPPORTED = tuple(sorted(_REDUCTION))


def degree(n):
    """Euler phi of n, the dimension of Q(zeta_n) over Q."""
    try:
        return len(_REDUCTION[n])
    except KeyError:
        raise IndexMismatchError(
            'Unsupported cyclotomic index {}, expected one of {}'.format(
                n, SUPPORTED))


def _reduce(n, poly):
    """Reduce a coefficient list modulo the n-th cyclotomic polynomial."""
    d = degree(n)
    red = _REDUCTION[n]
    poly = list(poly)
    for top in range(len(poly) - 1, d - 1, -1):
        c = poly[top]
        if c:
            poly[top] = 0
            base = top - d
            for j in range(d):
                if red[j]:
                    poly[base + j] -= c * red[j]
    poly = poly[:d]
    while len(poly) < d:
        poly.append(0)
    return tuple(Fraction(c) for c in poly)


def _power_table(n):
    table = []
    for k in range(n):
        poly = [0] * (k + 1)
        poly[k] = 1
        table.append(_reduce(n, poly))
    return tuple(table)


_POWERS = dict((n, _power_table(n)) for n in SUPPORTED)

#: Galois group of Q(zeta_n), as exponents k with zeta -> zeta^k
_UNITS = dict((n, tuple(k for k in range(1, n) if math.gcd(k, n) == 1))
              for n in SUPPORTED)

_ROOTS = dict((n, tuple(cmath.exp(2j * cmath.pi * k / n) for k in range(n)))
              for n in SUPPORTED)


class CycloNumber(object):
    """
    An element of Q(zeta_n), stored as rational coordinates over the power
    basis ``1, zeta, ..., zeta^(phi(n)-1)``. Instances are immutable and
    hashable.

    Args:
        n (int): cyclotomic index, 4, 5 or 8
        coeffs (iterable): rational coefficients; longer inputs are reduced
    """
    __slots__ = ('n', 'coeffs', '_hash')

    def __init__(self, n, coeffs=()):
        coeffs = list(coeffs)
        d = degree(n)
        if len(coeffs) < d:
            coeffs = coeffs + [0] * (d - len(coeffs))
        object.__setattr__(self, 'n', n)
        object.__setattr__(self, 'coeffs', _reduce(n, coeffs))
        object.__setattr__(self, '_hash', None)

    def __setattr__(self, name, value):
        raise AttributeError('CycloNumber is immutable')

    # constructors
    @classmethod
    def zeta(cls, n, k=1):
        """The root of unity ``zeta_n^k``."""
        return cls(n, _POWERS[n][k % n])

    @classmethod
    def rational(cls, n, value):
        return cls(n, [Fraction(value)])

    @classmethod
    def from_string(cls, text):
        """Parse ``"n:[c0,c1,...]"``."""
        n, coeffs = cyclo_from_str(text)
        if len(coeffs) != degree(n):
            raise ValueError(
                'Expected {} coefficients for n={}, got {}'.format(
                    degree(n), n, len(coeffs)))
        return cls(n, coeffs)

    def to_string(self):
        return cyclo_to_str(self.n, self.coeffs)

    # coercion
    def _coerce(self, other):
        if isinstance(other, CycloNumber):
            if other.n != self.n:
                raise IndexMismatchError(
                    'Cannot combine Q(zeta_{}) with Q(zeta_{})'.format(
                        self.n, other.n))
            return other
        if isinstance(other, (numbers.Rational, Fraction)):
            return CycloNumber.rational(self.n, other)
        return None

    # arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CycloNumber(self.n, [a + b for a, b in
                                    zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber(self.n, [-a for a in self.coeffs])

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CycloNumber(self.n, [a - b for a, b in
                                    zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        d = len(self.coeffs)
        prod = [0] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    prod[i + j] += a * b
        return CycloNumber(self.n, prod)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    __div__ = __truediv__
    __rdiv__ = __rtruediv__

    def __pow__(self, k):
        if not isinstance(k, numbers.Integral):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = CycloNumber.rational(self.n, 1)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # field structure
    def galois(self, k):
        """
        The Galois conjugate under ``zeta -> zeta^k``.

        Args:
            k (int): exponent coprime to n
        """
        if math.gcd(k, self.n) != 1:
            raise ValueError('{} is not a unit modulo {}'.format(k, self.n))
        powers = _POWERS[self.n]
        acc = [Fraction(0)] * len(self.coeffs)
        for j, c in enumerate(self.coeffs):
            if c:
                for i, p in enumerate(powers[(j * k) % self.n]):
                    if p:
                        acc[i] += c * p
        return CycloNumber(self.n, acc)

    def conj(self):
        """Complex conjugation, the Galois map ``zeta -> zeta^-1``."""
        return self.galois(self.n - 1)

    def norm(self):
        """
        Field norm to Q, the product of all Galois conjugates.

        Returns:
            Fraction
        """
        result = CycloNumber.rational(self.n, 1)
        for k in _UNITS[self.n]:
            result = result * self.galois(k)
        return result.coeffs[0]

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError('Inverse of zero in Q(zeta_{})'.format(
                self.n))
        cofactor = CycloNumber.rational(self.n, 1)
        for k in _UNITS[self.n][1:]:
            cofactor = cofactor * self.galois(k)
        n = (self * cofactor).coeffs[0]
        return CycloNumber(self.n, [c / n for c in cofactor.coeffs])

    def abs2(self):
        """Exact squared modulus ``x * conj(x)``, a real field element."""
        return self * self.conj()

    def is_zero(self):
        return not any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def is_real(self):
        return self == self.conj()

    def promote(self, n):
        """
        Re-express this number in Q(zeta_n). Only the inclusion of Q(zeta_4)
        in Q(zeta_8) and the identity are supported.
        """
        if n == self.n:
            return self
        if self.is_rational():
            return CycloNumber.rational(n, self.coeffs[0])
        if self.n == 4 and n == 8:
            z = CycloNumber.zeta(8, 2)
            return self.coeffs[0] + self.coeffs[1] * z
        raise IndexMismatchError(
            'Cannot promote Q(zeta_{}) into Q(zeta_{})'.format(self.n, n))

    def root_of_unity_order(self, bound):
        """
        Returns:
            int or None: smallest k <= bound with ``self**k == 1``
        """
        if self.abs2() != 1:
            return None
        one = CycloNumber.rational(self.n, 1)
        p = self
        for k in range(1, bound + 1):
            if p == one:
                return k
            p = p * self
        return None

    # embedding
    def embed(self):
        """
        Returns:
            complex: value with ``zeta_n = exp(2 pi i / n)``
        """
        roots = _ROOTS[self.n]
        return sum((float(c) * roots[j] for j, c in enumerate(self.coeffs)
                    if c), 0j)

    def __abs__(self):
        return abs(self.embed())

    def sort_key(self, ndigits=9):
        z = self.embed()
        return (round(z.real, ndigits), round(z.imag, ndigits))

    # comparison and hashing
    def __eq__(self, other):
        if isinstance(other, CycloNumber):
            return self.n == other.n and self.coeffs == other.coeffs
        if isinstance(other, (numbers.Rational, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        h = self._hash
        if h is None:
            if self.is_rational():
                h = hash(self.coeffs[0])
            else:
                h = hash((self.n, self.coeffs))
            object.__setattr__(self, '_hash', h)
        return h

    def __bool__(self):
        return not self.is_zero()

    __nonzero__ = __bool__

    def __repr__(self):
        return 'CycloNumber({!r})'.format(self.to_string())

    def __str__(self):
        return self.to_string()

    def __reduce__(self):
        return (CycloNumber, (self.n, self.coeffs))


def cyclo_arith(a, b, op):
    """
    Exact ``add``, ``sub`` or ``mul`` of two numbers of the same field.

    Raises:
        IndexMismatchError: the numbers live in different fields
    """
    if not isinstance(a, CycloNumber) or not isinstance(b, CycloNumber):
        raise TypeError('cyclo_arith expects two CycloNumbers')
    if a.n != b.n:
        raise IndexMismatchError(
            'Cannot combine Q(zeta_{}) with Q(zeta_{})'.format(a.n, b.n))
    if op == 'add':
        return a + b
    elif op == 'sub':
        return a - b
    elif op == 'mul':
        return a * b
    raise ValueError('Unknown operation {!r}'.format(op))


def zeta(n, k=1):
    return CycloNumber.zeta(n, k)


def rational(n, value):
    return CycloNumber.rational(n, value)


def embed(a):
    return a.embed()


# the inflation factors and a few named constants
def sqrt2():
    """sqrt(2) = zeta_8 + zeta_8^7 in Q(zeta_8)."""
    return zeta(8, 1) + zeta(8, 7)


def silver_ratio():
    """1 + sqrt(2) = 1 + zeta_8 + zeta_8^7, the Ammann-Beenker factor."""
    return 1 + sqrt2()


def golden_ratio():
    """tau = -zeta_5^2 - zeta_5^3, the Penrose factor."""
    return -zeta(5, 2) - zeta(5, 3)


def zeta10(k=1):
    """zeta_10^k inside Q(zeta_5), using zeta_10 = -zeta_5^3."""
    return (-zeta(5, 3)) ** k
