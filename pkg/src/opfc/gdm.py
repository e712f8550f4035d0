"""Grouping-Docking-Mixing: optimal code lengths over a deferred multiset.

The run replays the two-queue construction on the implicitly sorted input,
but it never sorts more than its queries force.  Leaves are *sorted
positions* of the deferred store.  A node whose leaves form one contiguous
range of positions is *pure*: its weight is a difference of two partial sums
and is only computed when a comparison needs it.  Any other node is *mixed*
and its weight is the sum of its children's.

One pass of the main loop handles one run of external extractions
(Grouping) and the run of internal extractions after it (Docking, then
Mixing when a generation straddles the next external weight).  The last run
of internal extractions is the Conclusion, where the remaining roots are
within a factor of two of each other and get depths from a two-level split
without any comparison.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from opfc.deferred import DeferredMultiset
from opfc.model import LengthAssignment, RunStats, WeightSeq


@dataclass(frozen=True)
class PhaseRecord:
    phase: str
    queries: int


class _Run:
    def __init__(self, w: WeightSeq, randomized: bool = False, seed: int | None = 0,
                 check_invariants: bool = False):
        self.w = w
        self.n = len(w)
        self.ds = DeferredMultiset(w, randomized=randomized, seed=seed)
        self.check_invariants = check_invariants
        self.trace: list[PhaseRecord] = []
        self._mark = 0
        # Node table.  Children are node ids (>= 0) or leaves encoded as -pos.
        self.lo: list[int] = []
        self.hi: list[int] = []
        self.weight: list[int | None] = []
        self.left: list[int] = []
        self.right: list[int] = []
        self.queue: deque[int] = deque()
        self._ps: dict[int, int] = {0: 0}
        self._leaf: dict[int, int] = {}
        self._oracle: list[int] | None = None

    # -- bookkeeping -------------------------------------------------------

    def record(self, phase: str) -> None:
        q = self.ds.queries
        self.trace.append(PhaseRecord(phase, q - self._mark))
        self._mark = q
        if self.check_invariants and self.queue:
            self._check_queue()

    def partial_sum(self, r: int) -> int:
        s = self._ps.get(r)
        if s is None:
            s = self._ps[r] = self.ds.partial_sum(r)
        return s

    def leaf_weight(self, pos: int) -> int:
        v = self._leaf.get(pos)
        if v is None:
            if pos in self._ps and pos - 1 in self._ps:
                v = self._ps[pos] - self._ps[pos - 1]
            else:
                v = self.ds.select(pos).value
            self._leaf[pos] = v
        return v

    def _range(self, c: int) -> tuple[int, int]:
        if c < 0:
            return -c, -c
        return self.lo[c], self.hi[c]

    def _known(self, c: int) -> int | None:
        if c < 0:
            return self._leaf.get(-c)
        return self.weight[c]

    def pair(self, a: int, b: int) -> int:
        alo, ahi = self._range(a)
        blo, bhi = self._range(b)
        if alo > 0 and blo > 0 and ahi + 1 == blo:
            lo, hi = alo, bhi
        elif alo > 0 and blo > 0 and bhi + 1 == alo:
            lo, hi = blo, ahi
        else:
            lo = hi = 0
        wa, wb = self._known(a), self._known(b)
        self.lo.append(lo)
        self.hi.append(hi)
        self.weight.append(wa + wb if wa is not None and wb is not None else None)
        self.left.append(a)
        self.right.append(b)
        return len(self.lo) - 1

    def node_weight(self, c: int) -> int:
        """Weight of node or leaf ``c``, computing and caching it if needed."""
        if c < 0:
            return self.leaf_weight(-c)
        if self.weight[c] is not None:
            return self.weight[c]
        stack = [c]
        while stack:
            x = stack[-1]
            if self.weight[x] is not None:
                stack.pop()
                continue
            if self.lo[x] > 0:
                self.weight[x] = self.partial_sum(self.hi[x]) - self.partial_sum(self.lo[x] - 1)
                stack.pop()
                continue
            todo = [ch for ch in (self.left[x], self.right[x])
                    if ch >= 0 and self.weight[ch] is None]
            if todo:
                stack.extend(todo)
                continue
            a, b = self.left[x], self.right[x]
            wa = self.leaf_weight(-a) if a < 0 else self.weight[a]
            wb = self.leaf_weight(-b) if b < 0 else self.weight[b]
            self.weight[x] = wa + wb
            stack.pop()
        return self.weight[c]

    # -- phases ------------------------------------------------------------

    def run(self) -> LengthAssignment:
        n = self.n
        if n == 1:
            self.record("initialization")
            return LengthAssignment((1,), RunStats(distinct_lengths=1))
        q = self.queue
        first = self.pair(-1, -2)
        self.weight[first] = self.partial_sum(2)
        q.append(first)
        if n >= 3:
            self.leaf_weight(3)
        self.record("initialization")
        p = 2
        pending = None
        loops = 0
        while True:
            loops += 1
            p, pending = self.grouping(p, pending)
            self.record("grouping")
            if p == n:
                break
            pending = self.internal_run(self.leaf_weight(p + 1))
        depths = self.conclusion()
        self.record("conclusion")
        lengths = self.label(depths)
        self.record("labeling")
        queries, comparisons = self.ds.stats()
        return LengthAssignment(lengths, RunStats(
            ds_queries=queries, comparisons=comparisons, loop_iterations=loops,
            distinct_lengths=len(set(lengths))))

    def grouping(self, p: int, pending: int | None) -> tuple[int, None]:
        """Absorb the run of external nodes not heavier than the lightest internal."""
        q = self.queue
        if pending is not None:
            q.append(self.pair(pending, -(p + 1)))
            p += 1
        if p == self.n:
            return p, None
        r = self.ds.rank_leq(self.node_weight(q[0]))
        assert r >= p, "rank fell below the processed externals"
        for j in range(p + 1, r, 2):
            q.append(self.pair(-j, -(j + 1)))
        if (r - p) % 2:
            # The odd external pairs with the lightest internal, which is
            # lighter than every external still unpaired.
            q.append(self.pair(-r, q.popleft()))
        return r, None

    def internal_run(self, e: int) -> int | None:
        """Extract internal nodes lighter than the next external weight ``e``.

        Returns the internal node left waiting for a partner, if any; that
        partner is the external of weight ``e``.
        """
        q = self.queue
        levels = 0
        while q and self.node_weight(q[-1]) < e:
            # The whole generation goes before e and before any node built
            # from it.
            levels += 1
            batch = list(q)
            q.clear()
            for k in range(0, len(batch) - 1, 2):
                q.append(self.pair(batch[k], batch[k + 1]))
            if len(batch) % 2:
                odd = batch[-1]
                if q and self.node_weight(q[0]) < e:
                    q.append(self.pair(odd, q.popleft()))
                else:
                    self.record("docking")
                    return odd
        self.record("docking")
        if not q:
            return None
        r = self._count_lighter(e)
        batch = [q.popleft() for _ in range(r)]
        for k in range(0, r - 1, 2):
            q.append(self.pair(batch[k], batch[k + 1]))
        self.record("mixing")
        return batch[-1] if r % 2 else None

    def _count_lighter(self, e: int) -> int:
        """Doubling search for the number of queued internals lighter than e."""
        q = self.queue
        last = len(q) - 1
        if self.node_weight(q[0]) >= e:
            return 0
        lo = 0
        hi = last
        step = 1
        while lo + step < last:
            if self.node_weight(q[lo + step]) < e:
                lo += step
                step *= 2
            else:
                hi = lo + step
                break
        # q[lo] < e <= q[hi]
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if self.node_weight(q[mid]) < e:
                lo = mid
            else:
                hi = mid
        return hi

    def conclusion(self) -> list[int]:
        """Leaf depth per sorted position, from a two-level split of the roots."""
        roots = list(self.queue)
        i = len(roots)
        lvl = i.bit_length() - 1
        deep = 2 * (i - (1 << lvl))
        depths = [0] * (self.n + 1)
        stack = [(c, lvl + 1 if j < deep else lvl) for j, c in enumerate(roots)]
        left, right = self.left, self.right
        while stack:
            c, d = stack.pop()
            if c < 0:
                depths[-c] = d
            else:
                stack.append((left[c], d + 1))
                stack.append((right[c], d + 1))
        return depths[1:]

    def label(self, depths: list[int]) -> tuple[int, ...]:
        """Map depths by sorted position to lengths by origin.

        Every position where the depth changes is made a boundary of the
        deferred store, so each run of equal depth holds the right slots.
        """
        ds = self.ds
        for t in range(1, self.n):
            if depths[t - 1] != depths[t] and not ds.is_boundary(t):
                ds.select(t)
        lengths = np.empty(self.n, dtype=np.int64)
        lengths[ds.origins() - 1] = depths
        return tuple(lengths.tolist())

    # -- debugging ---------------------------------------------------------

    def _oracle_weight(self, c: int) -> int:
        if self._oracle is None:
            pref = [0]
            for v in sorted(self.w.tolist()):
                pref.append(pref[-1] + v)
            self._oracle = pref
        pref = self._oracle
        total = 0
        stack = [c]
        while stack:
            x = stack.pop()
            if x < 0:
                total += pref[-x] - pref[-x - 1]
            elif self.lo[x] > 0:
                total += pref[self.hi[x]] - pref[self.lo[x] - 1]
            else:
                stack.extend((self.left[x], self.right[x]))
        return total

    def _check_queue(self) -> None:
        ws = [self._oracle_weight(c) for c in self.queue]
        assert all(a <= b for a, b in zip(ws, ws[1:])), "internal queue out of order"
        assert ws[-1] <= 2 * ws[0], "internal weights spread beyond a factor of two"
        for c, wc in zip(self.queue, ws):
            if self.weight[c] is not None:
                assert self.weight[c] == wc, "cached weight disagrees with oracle"


def _as_seq(w: WeightSeq | Sequence[int]) -> WeightSeq:
    return w if isinstance(w, WeightSeq) else WeightSeq.from_values(w)


def gdm_lengths(w: WeightSeq | Sequence[int], randomized: bool = False,
                seed: int | None = 0, check_invariants: bool = False) -> LengthAssignment:
    """Optimal code lengths for unsorted weights, sorting only as needed.

    ``check_invariants`` validates the internal queue against an eager
    oracle after every phase; it never issues extra queries.
    """
    return _Run(_as_seq(w), randomized, seed, check_invariants).run()


def gdm_phase_trace(w: WeightSeq | Sequence[int], **kwargs
                    ) -> tuple[LengthAssignment, list[PhaseRecord]]:
    """Run GDM and return its result with one record per phase executed."""
    run = _Run(_as_seq(w), **kwargs)
    result = run.run()
    return result, run.trace
