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
:mod:`parallel` -- Data-parallel Helpers
========================================
Order preserving maps over a thread pool. The pool size follows
:attr:`aperiodica.conf.THREADS`, ``0`` meaning one thread per CPU.
"""
from concurrent.futures import ThreadPoolExecutor
import logging

import psutil

from .. import conf


logger = logging.getLogger(__name__)


def thread_count():
    """
    Returns:
        int: number of worker threads to use, at least 1
    """
    if conf.THREADS and conf.THREADS > 0:
        return conf.THREADS
    return psutil.cpu_count(logical=True) or 1


def parallel_map(func, items, chunk_threshold=64):
    """
    Apply `func` to every element of `items` and return the results in input
    order. Small inputs are mapped in the calling thread.

    Args:
        func (callable): pure function of one argument
        items (iterable): the arguments
        chunk_threshold (int): inputs shorter than this are not dispatched

    Returns:
        list: ``[func(x) for x in items]``
    """
    items = list(items)
    threads = thread_count()

    if threads == 1 or len(items) < chunk_threshold:
        return [func(x) for x in items]

    if conf.SUPER_DEBUG:
        logger.debug('Mapping {} items over {} threads'.format(
            len(items), threads))

    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(func, items))
