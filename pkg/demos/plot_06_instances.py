"""
Instances and the weights file format
=====================================
"""

import os
import tempfile

from opfc import gen_random, read_weights, write_weights
from opfc.instances import max_feasible_alternation

for n in (16, 256, 4096, 1 << 16):
    print(n, "largest generated alternation:", max_feasible_alternation(n))

w = gen_random(10, 100, seed=3)
path = os.path.join(tempfile.mkdtemp(), "weights.txt")
write_weights(path, w)
print(open(path).read().split())
assert read_weights(path).tolist() == w.tolist()
