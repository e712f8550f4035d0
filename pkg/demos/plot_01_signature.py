"""
Signatures and alternation
==========================

The two-queue construction extracts either a leaf (E) or a merged node (I)
at each step.  The number of "EI" pairs measures how entangled the sorted
weights are with the merged ones.
"""

from opfc import alternation, gen_alternation, signature

w = [1, 2, 3, 4, 5, 5, 6, 7]
sig = signature(w)
print(sig.chars, "alternation", sig.alternation)

# Equal weights never interleave with merged nodes.
print(signature([3] * 8).chars)

# The generator builds well separated groups, one E-run per group.
for a in (1, 2, 5):
    print(a, alternation(gen_alternation(64, a, seed=0)))
