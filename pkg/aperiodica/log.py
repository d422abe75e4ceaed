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
:mod:`log` -- Logging Setup
===========================
"""
import logging


FORMAT_STANDARD = logging.Formatter(
    '%(asctime)s - %(name)s  %(levelname)s - %(message)s',
    datefmt='%Y-%m-%dT%H:%M:%S%z')
FORMAT_NAMELESS = logging.Formatter(
    '%(asctime)s - %(levelname)s - %(message)s',
    datefmt='%Y-%m-%dT%H:%M:%S%z')


class handlers(object):
    """
    log handlers

    STREAM_HANDLER - logs to stderr
    FILE_HANDLER - logs to a file, needs a filename
    """
    STREAM_HANDLER = logging.StreamHandler
    FILE_HANDLER = logging.FileHandler


def setup_logger(base_name, formatter=FORMAT_STANDARD,
                 handler=handlers.STREAM_HANDLER, level=logging.INFO,
                 filename=None):
    """
    Attach a single handler to the logger `base_name`. Calling this twice for
    the same logger does not duplicate output.

    Args:
        base_name (str): name of the logger, usually ``'aperiodica'``
        formatter (:class:`logging.Formatter`): format of the records
        handler (type): one of the classes on :class:`handlers`
        level (int): logging level of the logger
        filename (str): log file, required for ``FILE_HANDLER``

    Returns:
        :class:`logging.Logger`
    """
    logger = logging.getLogger(base_name)
    logger.setLevel(level)

    for h in list(logger.handlers):
        if getattr(h, '_aperiodica', False):
            logger.removeHandler(h)

    if handler == handlers.FILE_HANDLER:
        handler = handler(filename)
    else:
        handler = handler()

    handler._aperiodica = True
    handler.setFormatter(formatter)

    logger.addHandler(handler)

    return logger
