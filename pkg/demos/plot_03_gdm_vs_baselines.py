"""
GDM against Huffman and van Leeuwen
===================================

All three produce optimal lengths.  GDM asks far fewer questions of the
input when the alternation is small.
"""

from opfc import gdm_lengths, gdm_phase_trace, gen_alternation, huffman_lengths
from opfc import van_leeuwen_lengths, code_cost

w = gen_alternation(4096, 3, seed=1)
for coder in (gdm_lengths, huffman_lengths, van_leeuwen_lengths):
    a = coder(w)
    print(f"{coder.__name__:20s} cost={code_cost(w, a)} {a.stats}")

_, trace = gdm_phase_trace(w)
for rec in trace:
    print(f"  {rec.phase:15s} {rec.queries}")
