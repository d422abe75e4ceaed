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
:mod:`lattice` -- Rational Lattices
===================================
Exact planar lattices with rational bases, their intersections and the
coincidence analysis of a lattice against its images under a rational
rotation.
"""
from fractions import Fraction
import logging

import numpy as np
from six.moves import range

from . import conf
from .cyclotomic import CycloNumber
from .exceptions import NotOnUnitCircleError, SingularBasisError


logger = logging.getLogger(__name__)


def _lcm(a, b):
    a, b = abs(a), abs(b)
    x, y = a, b
    while y:
        x, y = y, x % y
    return a * b // x


def hnf(m):
    """
    Column-style Hermite normal form of an integer matrix with two rows,
    computed with exact Python integers. The first two columns of the
    result generate the same lattice as the columns of `m`.
    """
    h = np.array(m, dtype=object)
    rows, cols = h.shape
    for i in range(rows):
        while any(h[i, j] != 0 for j in range(i + 1, cols)):
            live = [j for j in range(i, cols) if h[i, j] != 0]
            i0 = min(live, key=lambda j: abs(h[i, j]))
            h[:, [i, i0]] = h[:, [i0, i]]
            if h[i, i] < 0:
                h[:, i] = -h[:, i]
            for j in range(i + 1, cols):
                h[:, j] = h[:, j] - h[:, i] * (h[i, j] // h[i, i])
        if h[i, i] == 0:
            continue
        if h[i, i] < 0:
            h[:, i] = -h[:, i]
        for j in range(i):
            h[:, j] = h[:, j] - h[:, i] * (h[i, j] // h[i, i])
    return h


class LatticeZ2Q(object):
    """
    The lattice ``Z b1 + Z b2`` for a nonsingular rational basis.

    Args:
        basis: 2x2 rational matrix given row by row, columns are ``b1, b2``

    Raises:
        SingularBasisError: the determinant is zero
    """
    def __init__(self, basis):
        rows = [[Fraction(x) for x in row] for row in basis]
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise SingularBasisError('Basis must be a 2x2 matrix')
        self.basis = np.array(rows, dtype=object)
        if self.det == 0:
            raise SingularBasisError('Basis {} is singular'.format(rows))

    @classmethod
    def from_columns(cls, b1, b2):
        return cls([[b1[0], b2[0]], [b1[1], b2[1]]])

    @classmethod
    def integer(cls):
        return cls([[1, 0], [0, 1]])

    @property
    def columns(self):
        return [tuple(self.basis[:, k]) for k in range(2)]

    @property
    def det(self):
        b = self.basis
        return b[0, 0] * b[1, 1] - b[0, 1] * b[1, 0]

    @property
    def covolume(self):
        return abs(self.det)

    def dual(self):
        """The lattice with basis ``B^-T``."""
        b, d = self.basis, self.det
        return LatticeZ2Q([[b[1, 1] / d, -b[1, 0] / d],
                           [-b[0, 1] / d, b[0, 0] / d]])

    def transformed(self, matrix):
        """Image under an exact rational 2x2 matrix."""
        return LatticeZ2Q(np.dot(np.array(matrix, dtype=object), self.basis))

    def rotated(self, c, s):
        return self.transformed([[c, -s], [s, c]])

    def coordinates(self, v):
        """Coefficients of `v` in the basis."""
        b, d = self.basis, self.det
        x = (b[1, 1] * v[0] - b[0, 1] * v[1]) / d
        y = (-b[1, 0] * v[0] + b[0, 0] * v[1]) / d
        return x, y

    def __contains__(self, v):
        return all(Fraction(c).denominator == 1
                   for c in self.coordinates([Fraction(x) for x in v]))

    def __add__(self, other):
        """The sum lattice, generated by both bases."""
        gens = np.hstack([self.basis, other.basis])
        den = 1
        for x in gens.flat:
            den = _lcm(den, Fraction(x).denominator)
        ints = np.array([[int(x * den) for x in row] for row in gens],
                        dtype=object)
        h = hnf(ints)[:, :2]
        return LatticeZ2Q([[Fraction(x, den) for x in row] for row in h])

    def canonical(self):
        """Hermite normal form basis, equal for equal lattices."""
        return self + self

    def __eq__(self, other):
        if not isinstance(other, LatticeZ2Q):
            return NotImplemented
        return all(v in other for v in self.columns) and \
            all(v in self for v in other.columns)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(tuple(self.canonical().basis.flat))

    def __repr__(self):
        return 'LatticeZ2Q({})'.format(
            [[str(x) for x in row] for row in self.basis])

    def to_dict(self):
        return {'basis': [[str(x) for x in row] for row in self.basis]}


class Intersection(object):
    def __init__(self, sublattice, index_in_g, index_in_h):
        self.sublattice = sublattice
        self.index_in_g = index_in_g
        self.index_in_h = index_in_h

    def to_dict(self):
        return {
            'sublattice': self.sublattice.to_dict(),
            'index_in_g': self.index_in_g,
            'index_in_h': self.index_in_h,
        }


def _index(sub, lattice):
    ratio = sub.covolume / lattice.covolume
    if ratio.denominator != 1:
        raise ArithmeticError(
            '{} is not a sublattice of {}'.format(sub, lattice))
    return int(ratio)


def lattice_intersect(g, h):
    """
    Exact intersection of two rational lattices, the dual of the sum of
    their duals. Two full rank rational lattices always meet in a full rank
    sublattice.

    Returns:
        :class:`Intersection` with the indices in both lattices
    """
    sub = (g.dual() + h.dual()).dual()
    return Intersection(sub, _index(sub, g), _index(sub, h))


def _rotation_power(c, s, j):
    m = np.array([[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]],
                 dtype=object)
    step = np.array([[c, -s], [s, c]], dtype=object)
    if j < 0:
        step = np.array([[c, s], [-s, c]], dtype=object)
    for _ in range(abs(j)):
        m = np.dot(step, m)
    return m


class LayerAnalysis(object):
    def __init__(self, rotation, indices, commensurate, order, one_sided):
        self.rotation = rotation
        self.indices = indices
        self.commensurate = commensurate
        self.order = order
        self.one_sided = one_sided

    @property
    def strictly_growing(self):
        return all(a < b for a, b in zip(self.indices, self.indices[1:]))

    def to_dict(self):
        return {
            'rotation': [str(x) for x in self.rotation],
            'indices': self.indices,
            'commensurate': self.commensurate,
            'order': self.order,
            'one_sided': self.one_sided,
            'strictly_growing': self.strictly_growing,
        }


def scd_layer_analysis(g, rot, m_max, one_sided=False):
    """
    Indices in `g` of the layer intersections ``R^-m g cap ... cap R^m g``
    for ``m = 0 .. m_max``, or of ``g cap ... cap R^m g`` when `one_sided`.
    The rotation ``R`` is given by an exact rational point ``(cos, sin)`` on
    the unit circle; it is commensurate when it is a root of unity of order
    at most ``ROOT_OF_UNITY_BOUND``.

    Raises:
        NotOnUnitCircleError: ``cos^2 + sin^2 != 1``
    """
    c, s = Fraction(rot[0]), Fraction(rot[1])
    if c * c + s * s != 1:
        raise NotOnUnitCircleError(
            '({}, {}) does not lie on the unit circle'.format(c, s))
    if not 0 <= m_max <= conf.MAX_LAYERS:
        raise ValueError('m_max must lie in 0..{}'.format(conf.MAX_LAYERS))

    order = CycloNumber(4, [c, s]).root_of_unity_order(
        conf.ROOT_OF_UNITY_BOUND)
    current = g
    indices = [1]
    for m in range(1, m_max + 1):
        layers = [m] if one_sided else [m, -m]
        for j in layers:
            current = lattice_intersect(
                current, g.transformed(_rotation_power(c, s, j))).sublattice
        indices.append(_index(current, g))
        logger.debug('Layer {}: index {}'.format(m, indices[-1]))
    return LayerAnalysis((c, s), indices, order is not None, order, one_sided)


__all__ = ['LatticeZ2Q', 'Intersection', 'LayerAnalysis', 'hnf',
           'lattice_intersect', 'scd_layer_analysis']
