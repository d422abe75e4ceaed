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
:mod:`conf` -- Settings Definitions
===================================
"""

#: SUPER_DEBUG enables very chatty logs from the inner loops (per tile and
#: per candidate).
#: Default: False
SUPER_DEBUG = False

#: Number of worker threads for data-parallel work such as inflating tiles or
#: running Monte-Carlo trials. 0 means one thread per CPU.
#: Default: 0
THREADS = 0

#: Tolerance used when ordering or comparing floating embeddings of exact
#: numbers.
#: Default: 1e-9
FLOAT_TOLERANCE = 1e-9

#: Resolution of the bisection grid for the local and rubber topology
#: distances.
#: Default: 1e-6
EPSILON_RESOLUTION = 1e-6

#: The covering radius grid spacing is the packing radius divided by this.
#: Default: 4
COVER_GRID_DIVISOR = 4

#: Largest admissible relative frequency discrepancy between a cluster class
#: and its image for statistical symmetry.
#: Default: 0.15
STATISTICAL_TOLERANCE = 0.15

#: Classes with fewer anchors than this, in the set and in its image, are not
#: judged by statistical symmetry. They still count towards the reported total
#: variation.
#: Default: 50
STATISTICAL_MIN_COUNT = 50

#: Largest multiplicative order tried when deciding whether a rational
#: rotation is a root of unity.
#: Default: 48
ROOT_OF_UNITY_BOUND = 48

#: Largest rotation order searched by the point group detection.
#: Default: 24
MAX_POINT_GROUP_ORDER = 24

#: Fraction of the anchor window whose clusters must be found in the other
#: set when testing local indistinguishability.
#: Default: 0.5
LI_CORE_FRACTION = 0.5

#: Largest number of layers accepted by the layer coincidence analysis.
#: Default: 8
MAX_LAYERS = 8

#: Pixels per unit length in rendered SVG files.
#: Default: 40
SVG_SCALE = 40

#: Fill colours per prototile in rendered SVG files.
SVG_PALETTE = [
    ('ab-triangle', '#f2c14e'),
    ('ab-square', '#f2c14e'),
    ('ab-rhombus', '#5fa8d3'),
    ('penrose-thick', '#e4572e'),
    ('penrose-thin', '#29335c'),
    ('penrose-thick-half', '#e4572e'),
    ('penrose-thin-half', '#29335c'),
    ('pinwheel-triangle', '#a8c686'),
]

# Default configuration file
CONFIG_FILE = '/etc/aperiodica.conf'

# Default character encoding for written documents. See these URLs for
# supported encodings:
# https://docs.python.org/3/library/codecs.html#standard-encodings
DEFAULT_ENCODING = 'utf-8'
