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
:mod:`document` -- Patch Documents
==================================
Versioned JSON documents holding a patch, a point set, or both. Exact
numbers are always written as strings so that parsing a serialized document
reproduces it exactly.
"""
from json import dumps as serializer, loads as deserializer
import logging

import six

from . import SCHEMA_VERSION
from .constants import SYSTEM
from .cyclotomic import CycloNumber
from .exceptions import (
    AperiodicaError, InvalidDocumentError, NonExactIsometryError)
from .geometry import Isometry, Patch, PointSet, Tile, get_prototile
from .utils.encoding import encodify, fraction_from_str, fraction_to_str


logger = logging.getLogger(__name__)

INFINITE_WINDOW = 'inf'


class PatchDocument(object):
    """
    Args:
        system (str): tiling system tag, or None for a bare point set
        patch (:class:`Patch`): the tiles, optional
        points (:class:`PointSet`): the point set, optional
        meta (dict): free-form generation parameters
    """
    def __init__(self, system=None, patch=None, points=None, meta=None):
        if patch is not None and system is None:
            system = patch.system
        self.system = system
        self.patch = patch
        self.points = points
        self.meta = dict(meta or {})

    def __eq__(self, other):
        if not isinstance(other, PatchDocument):
            return NotImplemented
        return (self.system == other.system and self.patch == other.patch and
                self.points == other.points and self.meta == other.meta)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'PatchDocument({!r}, tiles={}, points={})'.format(
            self.system, len(self.patch) if self.patch else 0,
            len(self.points) if self.points is not None else 0)

    def to_dict(self):
        doc = {'schema_version': SCHEMA_VERSION, 'system': self.system,
               'meta': self.meta}
        if self.patch is not None:
            doc['tiles'] = [_tile_to_dict(t) for t in self.patch]
        if self.points is not None:
            doc['points'] = _points_to_dict(self.points)
        return doc

    def serialize(self):
        """Deterministic JSON text."""
        return serializer(self.to_dict(), sort_keys=True, indent=2) + '\n'

    @classmethod
    def parse(cls, text):
        """
        Raises:
            InvalidDocumentError: the text is not a valid document
        """
        if isinstance(text, six.binary_type):
            text = text.decode('utf-8')
        try:
            doc = deserializer(text)
        except ValueError as e:
            raise InvalidDocumentError('Invalid JSON: {}'.format(e))
        return cls.from_dict(doc)

    @classmethod
    def from_dict(cls, doc):
        if not isinstance(doc, dict):
            raise InvalidDocumentError('Document must be a JSON object')
        version = doc.get('schema_version')
        if version != SCHEMA_VERSION:
            raise InvalidDocumentError(
                'Unsupported schema version {!r}'.format(version))
        system = doc.get('system')
        if system is not None and system not in SYSTEM.all:
            raise InvalidDocumentError('Unknown system {!r}'.format(system))
        try:
            patch = None
            if 'tiles' in doc:
                if system is None:
                    raise InvalidDocumentError('Tiles require a system')
                patch = Patch([_tile_from_dict(t) for t in doc['tiles']],
                              system)
            points = None
            if doc.get('points') is not None:
                points = _points_from_dict(doc['points'])
        except InvalidDocumentError:
            raise
        except (AperiodicaError, KeyError, TypeError, ValueError) as e:
            raise InvalidDocumentError('Malformed document: {}'.format(e))
        return cls(system, patch, points, doc.get('meta'))


def _tile_to_dict(tile):
    g = tile.placement
    return {
        'proto': tile.proto,
        'rot': g.rot.to_string(),
        'reflect': g.reflect,
        'trans': g.trans.to_string(),
        'decorations': ([list(d) for d in tile.decorations]
                        if tile.decorations is not None else None),
    }


def _tile_from_dict(d):
    proto = get_prototile(d['proto'])
    rot = CycloNumber.from_string(d['rot'])
    trans = CycloNumber.from_string(d['trans'])
    if rot.n != proto.n or trans.n != proto.n:
        raise InvalidDocumentError(
            'Placement of {} is not in Q(zeta_{})'.format(proto.name,
                                                          proto.n))
    if not isinstance(d['reflect'], bool):
        raise InvalidDocumentError('reflect must be a boolean')
    placement = Isometry(rot, d['reflect'], trans)
    try:
        placement.validate()
    except NonExactIsometryError as e:
        raise InvalidDocumentError(str(e))
    decorations = d.get('decorations')
    if decorations is not None:
        decorations = [tuple(x) for x in decorations]
    return Tile(proto.name, placement, decorations)


def _window_to_str(window):
    if window == float('inf'):
        return INFINITE_WINDOW
    return fraction_to_str(window)


def _window_from_str(text):
    if text == INFINITE_WINDOW:
        return float('inf')
    return fraction_from_str(text)


def _points_to_dict(s):
    return {
        'n': s.n,
        'dim': s.dim,
        'window': _window_to_str(s.window),
        'unwindowed': s.unwindowed,
        'points': [p.to_string() for p in s.points],
    }


def _points_from_dict(d):
    points = [CycloNumber.from_string(p) for p in d['points']]
    n = int(d['n'])
    if any(p.n != n for p in points):
        raise InvalidDocumentError('Points must lie in Q(zeta_{})'.format(n))
    return PointSet(points, _window_from_str(d['window']), n,
                    int(d.get('dim', 2)), bool(d.get('unwindowed', False)))


def write_document(document, path):
    with open(path, 'wb') as f:
        f.write(encodify(document.serialize()))
    logger.info('Wrote {!r} to {}'.format(document, path))


def read_document(path):
    """
    Raises:
        InvalidDocumentError: the file does not hold a valid document
        IOError: the file cannot be read
    """
    with open(path, 'rb') as f:
        return PatchDocument.parse(f.read())


def dump_report(report):
    """Deterministic JSON text of a report dictionary."""
    return serializer(report, sort_keys=True, indent=2, default=str)


__all__ = ['PatchDocument', 'write_document', 'read_document', 'dump_report']
