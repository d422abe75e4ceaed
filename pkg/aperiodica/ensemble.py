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
:mod:`ensemble` -- Bernoulli Lattice Gas
========================================
Random occupations of a box of ``Z^d``, exact shift-match periodicity tests
and Monte Carlo estimates of the fraction of periodic configurations.
"""
from functools import partial
import logging
import math

import numpy as np
from scipy.stats import norm
from six.moves import range

from .exceptions import InvalidProbabilityError
from .utils.parallel import parallel_map


logger = logging.getLogger(__name__)

#: Smallest number of trials accepted by the estimator
MIN_TRIALS = 100


class Configuration(object):
    """
    Occupation of the box ``{0 .. box-1}^d``.

    Args:
        occupied (numpy.ndarray): boolean array with `d` axes of length `box`
    """
    def __init__(self, occupied):
        self.occupied = np.asarray(occupied, dtype=bool)

    @property
    def d(self):
        return self.occupied.ndim

    @property
    def box(self):
        return self.occupied.shape[0]

    @property
    def density(self):
        return float(self.occupied.mean()) if self.occupied.size else 0.0

    def sites(self):
        """Occupied sites as integer tuples in lexicographic order."""
        return [tuple(int(x) for x in row)
                for row in np.argwhere(self.occupied)]

    def __eq__(self, other):
        if not isinstance(other, Configuration):
            return NotImplemented
        return np.array_equal(self.occupied, other.occupied)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'Configuration(d={}, box={}, density={:.3f})'.format(
            self.d, self.box, self.density)


def bernoulli_sample(d, p, box, seed):
    """
    Independent occupation of every site with probability `p`.

    Raises:
        InvalidProbabilityError: `p` outside ``(0, 1)``
    """
    if not 0 < p < 1:
        raise InvalidProbabilityError(
            'Occupation probability {} is not in (0, 1)'.format(p))
    if d not in (1, 2):
        raise ValueError('Only d = 1 and d = 2 are supported')
    rng = np.random.default_rng(seed)
    return Configuration(rng.random((box,) * d) < p)


def bernoulli_sampler(d, p, box):
    """A sampler ``seed -> Configuration`` for :func:`bernoulli_sample`."""
    if not 0 < p < 1:
        raise InvalidProbabilityError(
            'Occupation probability {} is not in (0, 1)'.format(p))
    return partial(bernoulli_sample, d, p, box)


def _shifts(d, max_shift):
    if d == 1:
        return [(t,) for t in range(1, max_shift + 1)]
    return [(tx, ty) for tx in range(0, max_shift + 1)
            for ty in range(-max_shift, max_shift + 1)
            if (tx, ty) > (0, 0) and tx * tx + ty * ty <= max_shift ** 2]


def _overlap(a, t):
    src, dst = [], []
    for k in t:
        if k >= 0:
            src.append(slice(0, a.shape[0] - k))
            dst.append(slice(k, None))
        else:
            src.append(slice(-k, None))
            dst.append(slice(0, a.shape[0] + k))
    return a[tuple(src)], a[tuple(dst)]


def shift_matches(config, t):
    """Whether ``x`` and ``x + t`` carry the same occupation on the box."""
    a, b = _overlap(config.occupied, t)
    return bool(np.array_equal(a, b))


def find_period(config, max_shift=None):
    """
    The first shift ``t`` with ``0 < |t| <= max_shift`` (half the box by
    default) matching on the box, or None.
    """
    max_shift = config.box // 2 if max_shift is None else max_shift
    for t in _shifts(config.d, max_shift):
        if shift_matches(config, t):
            return t
    return None


def has_period(config, max_shift=None):
    return find_period(config, max_shift) is not None


def _chain_lengths(box, t):
    """Lengths of the chains ``x, x + t, x + 2t, ...`` inside the box."""
    lengths = []
    for start in np.ndindex(*(box,) * len(t)):
        back = tuple(x - k for x, k in zip(start, t))
        if all(0 <= x < box for x in back):
            continue
        n, x = 0, start
        while all(0 <= c < box for c in x):
            n += 1
            x = tuple(c + k for c, k in zip(x, t))
        lengths.append(n)
    return lengths


def shift_match_probability(p, box, max_shift=None, d=1):
    """
    Exact probability that a Bernoulli configuration matches its shift by
    ``t``, for each admissible ``t``. Sites along a chain have to agree,
    giving ``prod_c (p^n_c + (1-p)^n_c)``. The union bound over all shifts
    dominates the probability of any match.

    Returns:
        dict with ``per_shift`` probabilities and the ``union_bound``
    """
    if not 0 < p < 1:
        raise InvalidProbabilityError(
            'Occupation probability {} is not in (0, 1)'.format(p))
    max_shift = box // 2 if max_shift is None else max_shift
    q = 1 - p
    per_shift = {}
    for t in _shifts(d, max_shift):
        per_shift[t] = float(np.prod([p ** n + q ** n
                                      for n in _chain_lengths(box, t)]))
    return {'per_shift': per_shift,
            'union_bound': min(1.0, sum(per_shift.values()))}


def wilson_interval(successes, trials, confidence=0.95):
    """Wilson score interval for a binomial proportion."""
    z = norm.ppf(0.5 + confidence / 2)
    phat = successes / float(trials)
    denom = 1 + z * z / trials
    centre = (phat + z * z / (2 * trials)) / denom
    half = z * math.sqrt(phat * (1 - phat) / trials +
                         z * z / (4 * trials * trials)) / denom
    return max(0.0, centre - half), min(1.0, centre + half)


class AperiodicityEstimate(object):
    def __init__(self, periodic, trials, interval, confidence):
        self.periodic = periodic
        self.trials = trials
        self.interval = interval
        self.confidence = confidence

    @property
    def fraction(self):
        return self.periodic / float(self.trials)

    @property
    def upper(self):
        return self.interval[1]

    def to_dict(self):
        return {
            'fraction': self.fraction,
            'periodic': self.periodic,
            'trials': self.trials,
            'ci_low': self.interval[0],
            'ci_high': self.interval[1],
            'confidence': self.confidence,
        }


def metric_aperiodicity_estimate(sampler, trials, seed=0, max_shift=None,
                                 confidence=0.95):
    """
    Fraction of sampled configurations with a shift-match period. Trial
    ``i`` draws from ``sampler(seed + i)`` so runs are reproducible and
    trials may be evaluated in parallel.
    """
    if trials < MIN_TRIALS:
        raise ValueError('At least {} trials are required'.format(MIN_TRIALS))

    def trial(i):
        return has_period(sampler(seed + i), max_shift)

    periodic = sum(parallel_map(trial, range(trials)))
    estimate = AperiodicityEstimate(
        periodic, trials, wilson_interval(periodic, trials, confidence),
        confidence)
    logger.info('{} of {} samples periodic, CI ({:.4f}, {:.4f})'.format(
        periodic, trials, estimate.interval[0], estimate.interval[1]))
    return estimate


__all__ = ['Configuration', 'AperiodicityEstimate', 'bernoulli_sample',
           'bernoulli_sampler', 'shift_matches', 'find_period', 'has_period',
           'shift_match_probability', 'wilson_interval',
           'metric_aperiodicity_estimate']
