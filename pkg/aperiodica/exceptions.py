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
:mod:`exceptions` -- Exceptions
===============================
These are the exceptions that are raised by aperiodica. All exceptions should
be subclasses of :class:`AperiodicaError`. Verification routines never raise
for a falsified property; they report it in their result instead.
"""


class AperiodicaError(Exception):
    """
    All exceptions raised by aperiodica inherit from this base exception.
    """


class IndexMismatchError(AperiodicaError):
    """
    Raised when arithmetic mixes numbers from different cyclotomic fields.
    """


class FieldMismatchError(AperiodicaError):
    """
    Raised when an isometry does not live in the field of the set it is
    applied to.
    """


class WindowExceededError(AperiodicaError):
    """
    Raised when an operation would have to read outside the declared window
    of a point set or patch.
    """


class TooFewPointsError(AperiodicaError):
    """
    Raised when an analysis needs more points than the set provides.
    """


class RadiusTooLargeError(AperiodicaError):
    """
    Raised when a cluster radius is too large for the window of the set.
    """


class SystemMismatchError(AperiodicaError):
    """
    Raised when a patch is handed to the rule of another tiling system.
    """


class IllegalSeedError(AperiodicaError):
    """
    Raised for an unknown seed or a seed that does not belong to the system.
    """


class ReconstructionError(AperiodicaError):
    """
    Raised when a vertex configuration cannot be completed to a legal tiling.
    The offending position is available as :attr:`location`.
    """
    def __init__(self, msg, location=None):
        super(ReconstructionError, self).__init__(msg)
        self.location = location


class MissingDecorationError(AperiodicaError):
    """
    Raised when matching rules are checked on a patch without arrows.
    """


class NonExactIsometryError(AperiodicaError):
    """
    Raised when an isometry is not exactly representable, e.g. when its
    rotation is not a root of unity.
    """


class CoincidentCentersError(AperiodicaError):
    """
    Raised when two reflection centres coincide.
    """


class InvalidOrderError(AperiodicaError):
    """
    Raised for a rotation order smaller than one.
    """


class SingularBasisError(AperiodicaError):
    """
    Raised when a lattice basis has determinant zero.
    """


class NotOnUnitCircleError(AperiodicaError):
    """
    Raised when a rational rotation does not satisfy cos^2 + sin^2 = 1.
    """


class InvalidProbabilityError(AperiodicaError):
    """
    Raised when an occupation probability is outside the open unit interval.
    """


class InvalidDocumentError(AperiodicaError):
    """
    Raised when a patch or point set document cannot be parsed.
    """
