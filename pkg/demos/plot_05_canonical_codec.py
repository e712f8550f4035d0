"""
Canonical codes and a small compressor
======================================
"""

from opfc import canonical_assign, decode, encode, gdm_lengths

lengths = gdm_lengths([45, 13, 12, 16, 9, 5])
for origin, code in sorted(canonical_assign(lengths).strings().items()):
    print(origin, code)

text = b"she sells sea shells by the sea shore " * 200
blob = encode(text)
assert decode(blob) == text
print(f"{len(text)} bytes -> {len(blob)} bytes")
