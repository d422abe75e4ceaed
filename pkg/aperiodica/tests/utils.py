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
Shared fixtures. Patches and point sets are cached because several test
modules need the same fixed-point patches.
"""
import functools

from ..constants import SEED, SYSTEM
from ..geometry import merge_halves
from ..inflation import control_points, fixed_point_patch, vertex_set


@functools.lru_cache(maxsize=None)
def ab_octagon(k):
    return fixed_point_patch(SYSTEM.ammann_beenker, SEED.ab_octagon, k)


@functools.lru_cache(maxsize=None)
def ab_square(k):
    return fixed_point_patch(SYSTEM.ammann_beenker, SEED.ab_square, k)


@functools.lru_cache(maxsize=None)
def penrose_sun(k, merged=False):
    p = fixed_point_patch(SYSTEM.penrose, SEED.penrose_sun, k)
    return merge_halves(p) if merged else p


@functools.lru_cache(maxsize=None)
def pinwheel(k):
    return fixed_point_patch(SYSTEM.pinwheel, SEED.pinwheel_origin, k)


@functools.lru_cache(maxsize=None)
def vertices(name, k, window=None):
    """Vertex set of one of the fixtures above."""
    return vertex_set(globals()[name](k), window)


@functools.lru_cache(maxsize=None)
def pinwheel_points(k):
    return control_points(pinwheel(k))
