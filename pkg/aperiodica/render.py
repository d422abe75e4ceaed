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
:mod:`render` -- SVG Figures
============================
Static SVG drawings of patches and point sets. Tiles become filled polygons,
edge decorations become chevrons pointing at the arrow head and points
become small circles. Output is deterministic for a fixed document.
"""
import logging
import xml.etree.ElementTree as ET

from . import conf
from .constants import ARROW, SYSTEM
from .inflation import control_points


logger = logging.getLogger(__name__)

SVG_NS = 'http://www.w3.org/2000/svg'
MARGIN = 0.5
POINT_RADIUS = 0.06
CHEVRON = 0.12
DEFAULT_FILL = '#cccccc'


def _fmt(x):
    return '{:.4f}'.format(x + 0.0)


class Canvas(object):
    """Maps embedded coordinates to SVG user units, y pointing up."""
    def __init__(self, zs, scale):
        xs = [z.real for z in zs] or [0.0]
        ys = [z.imag for z in zs] or [0.0]
        self.scale = scale
        self.x0 = min(xs) - MARGIN
        self.y1 = max(ys) + MARGIN
        self.width = (max(xs) - min(xs) + 2 * MARGIN) * scale
        self.height = (max(ys) - min(ys) + 2 * MARGIN) * scale

    def xy(self, z):
        return ((z.real - self.x0) * self.scale,
                (self.y1 - z.imag) * self.scale)

    def root(self):
        w, h = _fmt(self.width), _fmt(self.height)
        return ET.Element('svg', xmlns=SVG_NS, width=w, height=h,
                          viewBox='0 0 {} {}'.format(w, h))

    def path(self, zs, closed=False):
        parts = []
        for k, z in enumerate(zs):
            x, y = self.xy(z)
            parts.append('{}{} {}'.format('L' if k else 'M', _fmt(x), _fmt(y)))
        if closed:
            parts.append('Z')
        return ' '.join(parts)


def _chevrons(a, b, head, kind):
    """Chevron tips at the edge midpoint, pointing at `head`."""
    if head is None or kind in (ARROW.base, ARROW.diagonal):
        return []
    a, b = (b, a) if head == a else (a, b)
    d = (b - a) / abs(b - a)
    mid = (a + b) / 2
    count = 2 if kind == ARROW.double else 1
    result = []
    for k in range(count):
        tip = mid + d * CHEVRON * (k - (count - 1) / 2.0)
        back = tip - d * CHEVRON
        n = d * 1j * CHEVRON * 0.7
        result.append([back + n, tip, back - n])
    return result


def render_svg(document, show_points=False, show_arrows=True, scale=None):
    """
    Build the SVG tree of a document.

    Args:
        document (:class:`aperiodica.document.PatchDocument`): what to draw
        show_points (bool): draw the point set of the document, or the
            control points of a pinwheel patch, or the patch vertices
        show_arrows (bool): draw edge decorations
        scale (float): pixels per unit length, ``SVG_SCALE`` by default

    Returns:
        xml.etree.ElementTree.Element
    """
    scale = conf.SVG_SCALE if scale is None else scale
    palette = dict(conf.SVG_PALETTE)
    tiles = list(document.patch) if document.patch is not None else []
    points = _points_to_show(document) if show_points else []

    zs = [z for t in tiles for z in t.embedded()] + \
        [p.embed() for p in points]
    canvas = Canvas(zs, scale)
    svg = canvas.root()

    group = ET.SubElement(svg, 'g', id='tiles', stroke='#222222')
    group.set('stroke-width', '1')
    for t in tiles:
        vs = [canvas.xy(z) for z in t.embedded()]
        ET.SubElement(group, 'polygon',
                      points=' '.join('{},{}'.format(_fmt(x), _fmt(y))
                                      for x, y in vs),
                      fill=palette.get(t.proto, DEFAULT_FILL))

    if show_arrows:
        arrows = ET.SubElement(svg, 'g', id='arrows', fill='none',
                               stroke='#000000')
        for t in tiles:
            if t.decorations is None:
                continue
            vs = t.embedded()
            for i, j, kind, head in t.decorations:
                h = vs[head] if head is not None else None
                for chevron in _chevrons(vs[i], vs[j], h, kind):
                    ET.SubElement(arrows, 'path', d=canvas.path(chevron))

    if points:
        dots = ET.SubElement(svg, 'g', id='points', fill='#000000')
        r = _fmt(POINT_RADIUS * scale)
        for p in points:
            x, y = canvas.xy(p.embed())
            ET.SubElement(dots, 'circle', cx=_fmt(x), cy=_fmt(y), r=r)

    logger.debug('Rendered {} tiles and {} points'.format(len(tiles),
                                                          len(points)))
    return svg


def _points_to_show(document):
    if document.points is not None:
        return list(document.points)
    if document.patch is None:
        return []
    if document.system == SYSTEM.pinwheel:
        return list(control_points(document.patch, float('inf')))
    return list(document.patch.vertices())


def to_bytes(svg):
    return ET.tostring(svg, encoding='utf-8')


def write_svg(svg, path):
    """
    Raises:
        IOError: the file cannot be written, the message names the path
    """
    try:
        ET.ElementTree(svg).write(path, encoding='utf-8',
                                  xml_declaration=True)
    except (IOError, OSError) as e:
        raise IOError('Cannot write {}: {}'.format(path, e))
    logger.info('Wrote {}'.format(path))


__all__ = ['Canvas', 'render_svg', 'to_bytes', 'write_svg']
