"""Linear-time selection with comparison accounting.

The counts follow the comparison model of the algorithm being simulated,
not the vectorised numpy calls that carry it out: a three-way partition of
``m`` items costs ``2m``, the median of five costs 6, and a small sort of
``m`` items costs what binary insertion sort would spend.
"""

from __future__ import annotations

import math

import numpy as np

GROUP_SIZE = 5
MEDIAN_OF_FIVE_COST = 6
SMALL = 25

_small_cost = [0, 0]
for _i in range(2, 4097):
    _small_cost.append(_small_cost[-1] + math.ceil(math.log2(_i)))


def small_sort_cost(m: int) -> int:
    """Comparisons binary insertion sort spends on ``m`` items."""
    if m < len(_small_cost):
        return _small_cost[m]
    return sum(math.ceil(math.log2(i)) for i in range(2, m + 1))


class Selector:
    """Pivot finder and k-th order statistic, counting comparisons.

    With ``randomized=True`` pivots are drawn uniformly instead of by
    median of medians; the worst-case guarantees then no longer hold.
    """

    def __init__(self, randomized: bool = False, seed: int | None = 0):
        self.randomized = randomized
        self.comparisons = 0
        self._rng = np.random.default_rng(seed) if randomized else None

    def pivot(self, x: np.ndarray) -> int:
        m = len(x)
        if self.randomized:
            return int(x[self._rng.integers(m)])
        if m <= SMALL:
            self.comparisons += small_sort_cost(m)
            return sorted(x.tolist())[(m - 1) // 2]
        g, rem = divmod(m, GROUP_SIZE)
        medians = np.partition(x[: g * GROUP_SIZE].reshape(g, GROUP_SIZE), 2, axis=1)[:, 2]
        self.comparisons += MEDIAN_OF_FIVE_COST * g
        if rem:
            tail = sorted(x[g * GROUP_SIZE:].tolist())
            self.comparisons += small_sort_cost(rem)
            medians = np.append(medians, tail[(rem - 1) // 2])
        return self.select(medians, (len(medians) - 1) // 2)

    def select(self, x: np.ndarray, k: int) -> int:
        """Return the ``k``-th smallest value of ``x`` (0-based)."""
        if not 0 <= k < len(x):
            raise IndexError(f"rank {k} outside [0, {len(x)})")
        while True:
            m = len(x)
            if m <= SMALL:
                self.comparisons += small_sort_cost(m)
                return sorted(x.tolist())[k]
            p = self.pivot(x)
            self.comparisons += 2 * m
            below = x < p
            nlt = int(np.count_nonzero(below))
            neq = int(np.count_nonzero(x == p))
            if k < nlt:
                x = x[below]
            elif k < nlt + neq:
                return p
            else:
                x = x[x > p]
                k -= nlt + neq
