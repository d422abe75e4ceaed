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
:mod:`samples` -- Sample Point Sets
===================================
Windowed samples of the standard examples: lattices, translates, defect
sets, the Fibonacci chain and a set without finite local complexity.
One-dimensional sets live on the real axis of Q(zeta_4) unless stated
otherwise.
"""
from fractions import Fraction
import math

import numpy as np
from six.moves import range

from .cyclotomic import CycloNumber, golden_ratio, zeta
from .geometry import PointSet


def _q(value, n=4):
    return CycloNumber.rational(n, value)


def integer_sample(window, shift=0, removed=(), n=4):
    """
    ``shift + Z`` minus the integers in `removed`, cut to the closed ball of
    radius `window`.
    """
    window = Fraction(window)
    shift = Fraction(shift)
    removed = set(removed)
    lo = int(math.floor(-window - shift)) - 1
    hi = int(math.ceil(window - shift)) + 1
    pts = [_q(shift + k, n) for k in range(lo, hi + 1)
           if k not in removed and abs(shift + k) <= window]
    return PointSet(pts, window, n, dim=1)


def scaled_integer_sample(window, scale, shift=0, n=4):
    """``shift + scale Z`` cut to radius `window`, e.g. the half integers."""
    window = Fraction(window)
    scale = Fraction(scale)
    shift = Fraction(shift)
    bound = int(math.ceil((window + abs(shift)) / scale)) + 1
    pts = [_q(shift + k * scale, n) for k in range(-bound, bound + 1)
           if abs(shift + k * scale) <= window]
    return PointSet(pts, window, n, dim=1)


def half_integer_sample(window):
    return scaled_integer_sample(window, Fraction(1, 2))


def defect_sample(window, defects=(0,)):
    """Z without the given integers, e.g. ``Z \\ {0}`` or ``Z \\ {0, 1, 3}``."""
    return integer_sample(window, removed=defects)


def shifted_defect_sample(alpha, shift, window):
    """
    ``alpha + shift + (Z \\ {0})``: a copy of ``alpha + Z`` whose single
    defect sits at ``alpha + shift``. The sequence converges to
    ``alpha + Z`` in the local topology as `shift` grows.
    """
    alpha = Fraction(alpha)
    return integer_sample(window, shift=alpha + shift, removed=(0,))


def square_lattice_sample(window):
    """Z^2 in Q(zeta_4), cut to the ball of radius `window`."""
    window = Fraction(window)
    i = zeta(4, 1)
    b = int(math.floor(window))
    pts = [a + c * i for a in range(-b, b + 1) for c in range(-b, b + 1)
           if a * a + c * c <= window * window]
    return PointSet(pts, window, 4, dim=2)


def row_lattice_sample(window, spacing=1):
    """``Z x {0}`` seen as a set in the plane, periodic of rank one."""
    s = scaled_integer_sample(window, spacing)
    return PointSet(s.points, s.window, 4, dim=2)


def fibonacci_sample(window):
    """
    The Fibonacci chain as a model set in Q(zeta_5): all ``a + b tau`` with
    ``|a + b tau*| < tau / 2`` where ``tau* = 1 - tau`` is the Galois
    conjugate. The window of the model set is symmetric, so the chain is
    reflection symmetric about 0.
    """
    tau = golden_ratio()
    tau_f = tau.embed().real
    star = 1 - tau_f
    w = float(window)
    bound = int(math.ceil(w / tau_f)) + 2
    pts = []
    for b in range(-bound, bound + 1):
        centre = -b * star
        for a in range(int(math.floor(centre - tau_f / 2)),
                       int(math.ceil(centre + tau_f / 2)) + 1):
            if abs(a + b * star) < tau_f / 2 and abs(a + b * tau_f) <= w:
                pts.append(a + b * tau)
    return PointSet(pts, window, 5, dim=1)


def non_flc_sample(count):
    """
    ``{k + 1/(k+2) : 0 <= k <= count} U {0, ..., count}``. The differences
    ``1/(k+2)`` are pairwise distinct, so the set has infinitely many
    difference vectors of bounded length as `count` grows.
    """
    pts = []
    for k in range(count + 1):
        pts.append(_q(k))
        pts.append(_q(k + Fraction(1, k + 2)))
    return PointSet(pts, count, 4, dim=1)


def jittered(s, amplitude, seed=0, resolution=10 ** 6):
    """
    A copy of `s` with every point moved by at most `amplitude`, with rational
    offsets drawn from a seeded generator.
    """
    rng = np.random.default_rng(seed)
    i = zeta(4, 1) if s.n == 4 else None
    pts = []
    for p in s.points:
        r = amplitude * rng.random()
        phi = 2 * math.pi * rng.random() if s.dim == 2 else \
            (0.0 if rng.random() < 0.5 else math.pi)
        dx = Fraction(int(round(r * math.cos(phi) * resolution)), resolution)
        dy = Fraction(int(round(r * math.sin(phi) * resolution)), resolution)
        if s.dim == 1 or i is None:
            pts.append(p + dx)
        else:
            pts.append(p + dx + dy * i)
    return PointSet(pts, s.window, s.n, s.dim)
