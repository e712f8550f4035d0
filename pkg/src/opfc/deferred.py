"""A lazily sorted multiset answering rank, select and partial-sum queries.

Slots are permuted in place as queries force partitioning.  The store keeps
a list of *blocks*: maximal runs of slots known to hold one single value,
each flanked by boundaries.  Between two consecutive blocks lies a *gap* of
slots whose values are strictly between the two block values but otherwise
unordered.  A query refines only the gap its answer falls into, by median
splitting, so the total work adapts to the queries asked.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from typing import NamedTuple, Sequence

import numpy as np

from opfc.model import WeightSeq
from opfc.selection import Selector, small_sort_cost

# Gaps at most this long are sorted outright instead of split at a pivot.
SMALL_SEGMENT = 32
_LOW_MASK = (1 << 31) - 1


class Item(NamedTuple):
    value: int
    origin: int


def exact_sum(x: np.ndarray) -> int:
    """Sum of an int64 array of values below 2**62, without overflow."""
    if len(x) < 64:
        return sum(x.tolist())
    hi = int((x >> 31).sum())
    lo = int((x & _LOW_MASK).sum())
    return (hi << 31) + lo


class DeferredMultiset:
    """Partial-sum deferred data structure over positive integer weights.

    Positions are 1-based in the public API: ``select(r)`` is the r-th
    smallest value and ``partial_sum(r)`` the sum of the r smallest.
    """

    def __init__(self, weights: WeightSeq | Sequence[int], randomized: bool = False,
                 seed: int | None = 0):
        if not isinstance(weights, WeightSeq):
            weights = WeightSeq.from_values(weights)
        self._vals = weights.values.copy()
        self._orig = np.arange(1, len(weights) + 1, dtype=np.int64)
        n = len(self._vals)
        self._n = n
        # Blocks, ordered by position (equivalently by value).
        self._starts: list[int] = []
        self._ends: list[int] = []
        self._bvals: list[int] = []
        self._prefix: dict[int, int] = {0: 0, n: exact_sum(self._vals)}
        self._selector = Selector(randomized=randomized, seed=seed)
        self._search_comparisons = 0
        self.queries = 0

    @classmethod
    def build(cls, weights: WeightSeq | Sequence[int], **kwargs) -> "DeferredMultiset":
        return cls(weights, **kwargs)

    @property
    def n(self) -> int:
        return self._n

    @property
    def comparisons(self) -> int:
        return self._selector.comparisons + self._search_comparisons

    def stats(self) -> tuple[int, int]:
        """Return ``(queries, comparisons)`` so far."""
        return self.queries, self.comparisons

    # -- queries -----------------------------------------------------------

    def rank(self, x: int) -> int:
        """Number of values strictly smaller than ``x``."""
        self.queries += 1
        return self._rank(x)

    def rank_leq(self, x: int) -> int:
        """Number of values smaller than or equal to ``x``."""
        self.queries += 1
        return self._rank(x + 1)

    def select(self, r: int) -> Item:
        """The r-th smallest value with the origin of one slot holding it."""
        if not 1 <= r <= self._n:
            raise IndexError(f"select({r}) outside [1, {self._n}]")
        self.queries += 1
        i = self._resolve(r - 1)
        return Item(self._bvals[i], int(self._orig[r - 1]))

    def partial_sum(self, r: int) -> int:
        """Sum of the r smallest values."""
        if not 0 <= r <= self._n:
            raise IndexError(f"partial_sum({r}) outside [0, {self._n}]")
        self.queries += 1
        if r in self._prefix:
            return self._prefix[r]
        i = self._resolve(r - 1)
        start = self._starts[i]
        return self._prefix[start] + (r - start) * self._bvals[i]

    # -- inspection --------------------------------------------------------

    def boundaries(self) -> list[int]:
        """Positions ``p`` known to split the p smallest values from the rest."""
        return sorted({0, self._n, *self._starts, *self._ends})

    def is_boundary(self, p: int) -> bool:
        return p in self._prefix

    def prefix_at(self, p: int) -> int:
        """Stored partial sum at boundary ``p``."""
        return self._prefix[p]

    def slots(self) -> list[Item]:
        return [Item(v, o) for v, o in zip(self._vals.tolist(), self._orig.tolist())]

    def origins(self) -> np.ndarray:
        """Origins in current slot order (read-only view)."""
        view = self._orig.view()
        view.setflags(write=False)
        return view

    def blocks(self) -> list[tuple[int, int, int]]:
        """Resolved ``(start, end, value)`` runs, 0-based half-open."""
        return list(zip(self._starts, self._ends, self._bvals))

    # -- machinery ---------------------------------------------------------

    def _rank(self, x: int) -> int:
        while True:
            nb = len(self._bvals)
            i = bisect_left(self._bvals, x)
            self._search_comparisons += math.ceil(math.log2(nb + 1)) + 1
            a = self._ends[i - 1] if i > 0 else 0
            if i < nb:
                b = self._starts[i]
                if a == b or self._bvals[i] == x:
                    return b
            else:
                b = self._n
                if a == b:
                    return b
            self._refine(a, b)

    def _resolve(self, t: int) -> int:
        """Refine until slot ``t`` lies in a block; return the block index."""
        while True:
            i = bisect_right(self._starts, t) - 1
            if i >= 0 and t < self._ends[i]:
                return i
            a = self._ends[i] if i >= 0 else 0
            b = self._starts[i + 1] if i + 1 < len(self._starts) else self._n
            self._refine(a, b)

    def _refine(self, a: int, b: int) -> None:
        seg = self._vals[a:b]
        org = self._orig[a:b]
        m = b - a
        base = self._prefix[a]
        idx = bisect_left(self._starts, a)
        if m <= SMALL_SEGMENT:
            order = np.argsort(seg, kind="stable")
            self._selector.comparisons += small_sort_cost(m)
            seg[:] = seg[order]
            org[:] = org[order]
            vals = seg.tolist()
            starts, ends, bvals = [], [], []
            run = 0
            for j in range(1, m + 1):
                if j == m or vals[j] != vals[run]:
                    start, end = a + run, a + j
                    starts.append(start)
                    ends.append(end)
                    bvals.append(vals[run])
                    self._prefix[start] = base
                    base += (j - run) * vals[run]
                    self._prefix[end] = base
                    run = j
            self._starts[idx:idx] = starts
            self._ends[idx:idx] = ends
            self._bvals[idx:idx] = bvals
            return
        p = self._selector.pivot(seg)
        self._selector.comparisons += 2 * m
        lt = seg < p
        eq = seg == p
        gt = ~(lt | eq)
        nlt = int(np.count_nonzero(lt))
        neq = int(np.count_nonzero(eq))
        low_sum = exact_sum(seg[lt])
        seg[:] = np.concatenate((seg[lt], seg[eq], seg[gt]))
        org[:] = np.concatenate((org[lt], org[eq], org[gt]))
        start, end = a + nlt, a + nlt + neq
        self._prefix[start] = base + low_sum
        self._prefix[end] = base + low_sum + neq * p
        self._starts.insert(idx, start)
        self._ends.insert(idx, end)
        self._bvals.insert(idx, p)
