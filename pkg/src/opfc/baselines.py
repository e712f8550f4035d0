"""Reference constructions: heap Huffman and the two-queue sorted algorithm.

Both return leaf depths per origin and serve as optimality oracles for GDM.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from opfc.model import LengthAssignment, RunStats, WeightSeq


@dataclass(frozen=True)
class PairNode:
    """Node of an explicit code tree; leaves carry their 1-based origin."""

    weight: int
    origin: int | None = None
    left: "PairNode | None" = None
    right: "PairNode | None" = None

    @property
    def is_leaf(self) -> bool:
        return self.origin is not None


def leaf_depths(root: PairNode, n: int) -> list[int]:
    """Depth of every leaf, by origin; iterative so deep chains are fine."""
    depths = [0] * n
    stack = [(root, 0)]
    while stack:
        node, d = stack.pop()
        if node.is_leaf:
            depths[node.origin - 1] = d
        else:
            stack.append((node.left, d + 1))
            stack.append((node.right, d + 1))
    return depths


def _assignment(root: PairNode, n: int, comparisons: int = 0) -> LengthAssignment:
    if n == 1:
        return LengthAssignment.from_lengths([1])
    depths = leaf_depths(root, n)
    return LengthAssignment(tuple(depths), RunStats(
        comparisons=comparisons, distinct_lengths=len(set(depths))))


def _values(w: WeightSeq | Sequence[int]) -> list[int]:
    if not isinstance(w, WeightSeq):
        w = WeightSeq.from_values(w)
    return w.tolist()


def huffman_tree(w: WeightSeq | Sequence[int]) -> PairNode:
    vals = _values(w)
    # Ties are broken by creation order, leaves first in origin order.
    heap = [(v, i, PairNode(v, origin=i + 1)) for i, v in enumerate(vals)]
    heapq.heapify(heap)
    seq = len(vals)
    while len(heap) > 1:
        wa, _, a = heapq.heappop(heap)
        wb, _, b = heapq.heappop(heap)
        heapq.heappush(heap, (wa + wb, seq, PairNode(wa + wb, left=a, right=b)))
        seq += 1
    return heap[0][2]


def huffman_lengths(w: WeightSeq | Sequence[int]) -> LengthAssignment:
    """Optimal lengths by repeatedly merging the two lightest nodes."""
    vals = _values(w)
    return _assignment(huffman_tree(vals), len(vals))


def van_leeuwen_run(w: WeightSeq | Sequence[int], assume_sorted: bool = False
                    ) -> tuple[PairNode, str, int]:
    """Two-queue construction; returns ``(root, extraction string, comparisons)``.

    Comparisons counted are those between queue heads; the preliminary sort,
    when one is needed, is not included.
    """
    vals = _values(w)
    if assume_sorted:
        if any(vals[i] > vals[i + 1] for i in range(len(vals) - 1)):
            raise ValueError("weights are not in non-decreasing order")
        order = range(len(vals))
    else:
        order = sorted(range(len(vals)), key=vals.__getitem__)
    ext = [PairNode(vals[i], origin=i + 1) for i in order]
    if len(ext) == 1:
        return ext[0], "E", 0
    internals: deque[PairNode] = deque()
    trace = []
    comparisons = 0
    i = 0
    pending = None
    last_created = 0
    while True:
        if i < len(ext) and internals:
            comparisons += 1
        if i < len(ext) and (not internals or ext[i].weight <= internals[0].weight):
            node = ext[i]
            i += 1
            trace.append("E")
        else:
            node = internals.popleft()
            trace.append("I")
            if i == len(ext) and not internals and pending is None:
                return node, "".join(trace), comparisons
        if pending is None:
            pending = node
        else:
            merged = PairNode(pending.weight + node.weight, left=pending, right=node)
            assert merged.weight >= last_created, "internal nodes out of order"
            last_created = merged.weight
            internals.append(merged)
            pending = None


def van_leeuwen_lengths(w: WeightSeq | Sequence[int], assume_sorted: bool = False
                        ) -> LengthAssignment:
    """Optimal lengths by the linear two-queue algorithm on sorted weights."""
    vals = _values(w)
    root, _, comparisons = van_leeuwen_run(vals, assume_sorted)
    return _assignment(root, len(vals), comparisons)
