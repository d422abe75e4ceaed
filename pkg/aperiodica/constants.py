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
:mod:`constants` -- Constants
=============================
Names that appear in documents, on the command line and in reports.
"""


class SYSTEM(object):
    ammann_beenker = 'ab'
    penrose = 'penrose'
    pinwheel = 'pinwheel'

    all = (ammann_beenker, penrose, pinwheel)


class PROTO(object):
    ab_triangle = 'ab-triangle'       # half of the square, right angle at 0
    ab_rhombus = 'ab-rhombus'
    ab_square = 'ab-square'           # merged view of two triangles
    penrose_thick_half = 'penrose-thick-half'
    penrose_thin_half = 'penrose-thin-half'
    penrose_thick = 'penrose-thick'   # merged views of two halves
    penrose_thin = 'penrose-thin'
    pinwheel_triangle = 'pinwheel-triangle'


class SEED(object):
    ab_square = 'square'
    ab_octagon = 'octagon'
    ab_star = 'star'
    penrose_sun = 'sun'
    pinwheel_origin = 'origin'


class ARROW(object):
    single = 'single'
    double = 'double'
    plain = 'plain'          # AB edge arrow
    diagonal = 'diagonal'    # AB square diagonal, shared by the two halves
    base = 'base'            # Penrose half-rhombus merge edge


class VERDICT(object):
    consistent = 'consistent'
    growing = 'growing'
    not_witnessed = 'not witnessed'
    non_periodic = 'non-periodic-at-scale'
    rank_1 = 'rank-1'
    crystallographic = 'crystallographic'
    non_crystallographic = 'non-crystallographic'


class EXIT(object):
    ok = 0
    usage = 2
    falsified = 3


# ENVIRONMENT VARIABLES
ENV_CONFIG_FILE = 'APERIODICA_CONFIG_FILE'
ENV_PREFIX = 'APERIODICA_'
