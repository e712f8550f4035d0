"""
Answering order queries without sorting
=======================================

The deferred multiset partitions only the ranges its queries land in.
"""

import numpy as np

from opfc import DeferredMultiset

ds = DeferredMultiset([5, 3, 1, 5, 2, 4, 6, 7])
print("rank(5) =", ds.rank(5))
print("select(6) =", ds.select(6).value)
print("partial_sum(2) =", ds.partial_sum(2))
print("blocks:", ds.blocks())

# A few queries on a large input leave most of it unsorted.
rng = np.random.default_rng(0)
big = DeferredMultiset(rng.integers(1, 10 ** 9, 1 << 16))
big.select(100)
big.partial_sum(1 << 15)
queries, comparisons = big.stats()
print(f"{queries} queries, {comparisons} comparisons, "
      f"{len(big.boundaries())} boundaries for n={big.n}")
