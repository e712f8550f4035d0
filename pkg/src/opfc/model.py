"""Shared value types and the cost functional every coder is judged by.

Weights are positive integers no larger than ``2**62``.  All sums are taken
over Python integers, so costs and Kraft sums are exact regardless of how far
the weights spread.
"""

from __future__ import annotations

import operator
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_WEIGHT = 1 << 62
# Totals must stay below this; anything larger is refused at load time.
ACCUMULATOR_LIMIT = 1 << 126


class WeightError(ValueError):
    """Raised for non-positive, oversized, or otherwise unusable weights."""


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class WeightSeq:
    """An unsorted multiset of weights; origin ``i`` is position ``i - 1``."""

    values: np.ndarray

    def __post_init__(self):
        vals = self.values
        if vals.ndim != 1 or len(vals) == 0:
            raise WeightError("a weight sequence needs at least one weight")
        if vals.dtype != np.int64:
            raise WeightError(f"weights must be int64, got {vals.dtype}")
        if vals.flags.writeable:
            object.__setattr__(self, "values", _frozen(vals.copy()))

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "WeightSeq":
        vals = [int(v) for v in values]
        if not vals:
            raise WeightError("a weight sequence needs at least one weight")
        total = 0
        for i, v in enumerate(vals, start=1):
            if v < 1:
                raise WeightError(f"non-positive weight {v} at origin {i}")
            if v > MAX_WEIGHT:
                raise WeightError(f"weight {v} at origin {i} exceeds 2**62")
            total += v
        if total >= ACCUMULATOR_LIMIT:
            raise WeightError("total weight exceeds the exact accumulator range")
        return cls(_frozen(np.array(vals, dtype=np.int64)))

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def items(self) -> Iterator[tuple[int, int]]:
        """Yield ``(value, origin)`` pairs with 1-based origins."""
        for i, v in enumerate(self.values.tolist(), start=1):
            yield v, i

    def total(self) -> int:
        return sum(self.values.tolist())

    def tolist(self) -> list[int]:
        return self.values.tolist()


@dataclass(frozen=True)
class RunStats:
    """Work counters for one coder run.

    ``ds_queries`` counts rank/select/partial-sum calls on the deferred
    store and ``comparisons`` the weight comparisons made inside it;
    ``distinct_lengths`` is the number of different code lengths produced.
    """

    ds_queries: int = 0
    comparisons: int = 0
    loop_iterations: int = 0
    distinct_lengths: int = 0

    def __post_init__(self):
        for name in ("ds_queries", "comparisons", "loop_iterations", "distinct_lengths"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")


@dataclass(frozen=True)
class LengthAssignment:
    """Code length per origin; ``lengths[i - 1]`` belongs to origin ``i``."""

    lengths: tuple[int, ...]
    stats: RunStats = field(default_factory=RunStats)

    def __post_init__(self):
        if not isinstance(self.lengths, tuple):
            object.__setattr__(self, "lengths", tuple(int(x) for x in self.lengths))
        if not self.lengths:
            raise ValueError("empty length assignment")
        if min(self.lengths) < 1:
            raise ValueError("code lengths must be positive")

    @classmethod
    def from_lengths(cls, lengths: Sequence[int], stats: RunStats | None = None,
                     **counters) -> "LengthAssignment":
        lengths = tuple(int(x) for x in lengths)
        if stats is None:
            stats = RunStats(distinct_lengths=len(set(lengths)), **counters)
        return cls(lengths, stats)

    def __len__(self) -> int:
        return len(self.lengths)


def code_cost(w: WeightSeq, a: LengthAssignment) -> int:
    """Exact total cost ``sum(L[i] * W[i])``."""
    if len(w) != len(a.lengths):
        raise ValueError(f"{len(a.lengths)} lengths for {len(w)} weights")
    return sum(map(operator.mul, w.values.tolist(), a.lengths))


def kraft_sum(a: LengthAssignment | Sequence[int]) -> tuple[int, int]:
    """Return ``sum(2**-L)`` as ``(numerator, 2**max(L))``."""
    lengths = a.lengths if isinstance(a, LengthAssignment) else tuple(a)
    if not lengths:
        raise ValueError("empty length assignment")
    counts = Counter(lengths)
    lmax = max(counts)
    num = sum(c << (lmax - length) for length, c in counts.items())
    return num, 1 << lmax


def is_complete(a: LengthAssignment | Sequence[int]) -> bool:
    num, den = kraft_sum(a)
    return num == den
