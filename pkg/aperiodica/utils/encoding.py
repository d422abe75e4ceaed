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
:mod:`encoding` -- Exact Number Encoding
========================================
Text forms of exact numbers used inside documents. Rationals are written as
``"p/q"`` (or ``"p"`` for integers) and cyclotomic numbers as
``"n:[c0,c1,...]"``.
"""
from fractions import Fraction
import re

import six

from .. import conf


_CYCLO_RE = re.compile(r'^\s*(\d+)\s*:\s*\[(.*)\]\s*$')


def fraction_to_str(value):
    """
    Args:
        value (Fraction or int): exact rational

    Returns:
        str: ``"p/q"`` in lowest terms, ``"p"`` when the denominator is 1
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '{}/{}'.format(value.numerator, value.denominator)


def fraction_from_str(text):
    """
    Parse the output of :func:`fraction_to_str`. Floats are rejected so a
    document can never smuggle in an inexact coordinate.

    Raises:
        ValueError: the text is not an exact rational
    """
    if not isinstance(text, six.string_types):
        raise ValueError('Expected a rational string, got {!r}'.format(text))
    text = text.strip()
    if not re.match(r'^[+-]?\d+(/\d+)?$', text):
        raise ValueError('Not an exact rational: {!r}'.format(text))
    return Fraction(text)


def cyclo_to_str(n, coeffs):
    return '{}:[{}]'.format(n, ','.join(fraction_to_str(c) for c in coeffs))


def cyclo_from_str(text):
    """
    Returns:
        tuple: ``(n, [Fraction, ...])``

    Raises:
        ValueError: the text is not of the form ``"n:[c0,...]"``
    """
    if not isinstance(text, six.string_types):
        raise ValueError('Expected a cyclotomic string, got {!r}'.format(text))
    match = _CYCLO_RE.match(text)
    if match is None:
        raise ValueError('Not a cyclotomic number: {!r}'.format(text))
    body = match.group(2).strip()
    coeffs = [fraction_from_str(c) for c in body.split(',')] if body else []
    return int(match.group(1)), coeffs


def encodify(text):
    """
    Encode document text to ``conf.DEFAULT_ENCODING`` bytes.
    """
    if isinstance(text, six.binary_type):
        return text
    return text.encode(conf.DEFAULT_ENCODING)
