"""Canonical codewords and a byte-oriented container built on GDM lengths.

Container layout, all integers unsigned::

    "OPFC"                   magic, 4 bytes
    0x01                     version
    count - 1                number of symbols present, minus one
    (symbol, length) * count one byte each, symbols ascending
    original length          8 bytes, little-endian
    bitstream                codewords MSB-first, zero padded
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from opfc.gdm import gdm_lengths
from opfc.model import LengthAssignment, kraft_sum

MAGIC = b"OPFC"
VERSION = 1
_TABLE_BITS = 20


class KraftError(ValueError):
    """Code lengths that no prefix free code can have."""


class ContainerError(ValueError):
    """Malformed, truncated, or inconsistent container bytes."""


@dataclass(frozen=True)
class Codebook:
    """``(origin, length, codeword)`` entries in canonical order."""

    entries: tuple[tuple[int, int, int], ...]

    def by_origin(self) -> dict[int, tuple[int, int]]:
        return {o: (length, code) for o, length, code in self.entries}

    def strings(self) -> dict[int, str]:
        return {o: format(code, f"0{length}b") for o, length, code in self.entries}


def canonical_assign(a: LengthAssignment | Sequence[int]) -> Codebook:
    """Assign canonical codewords; origins are 1-based indices into ``a``."""
    lengths = a.lengths if isinstance(a, LengthAssignment) else tuple(int(x) for x in a)
    if not lengths or min(lengths) < 1:
        raise KraftError("code lengths must be positive")
    num, den = kraft_sum(lengths)
    if num > den:
        raise KraftError(f"Kraft sum {num}/{den} exceeds 1")
    order = sorted(range(len(lengths)), key=lambda i: (lengths[i], i))
    entries = []
    code = 0
    prev = lengths[order[0]]
    for i in order:
        code <<= lengths[i] - prev
        prev = lengths[i]
        entries.append((i + 1, lengths[i], code))
        code += 1
    return Codebook(tuple(entries))


def encode(data: bytes) -> bytes:
    """Compress ``data`` into a container."""
    if not data:
        raise ValueError("cannot encode empty data")
    arr = np.frombuffer(data, dtype=np.uint8)
    freq = np.bincount(arr, minlength=256)
    symbols = np.flatnonzero(freq)
    lengths = gdm_lengths(freq[symbols].astype(np.int64).tolist()).lengths
    if max(lengths) > 255:
        raise ValueError("code length does not fit the container header")
    book = canonical_assign(lengths)

    header = bytearray(MAGIC)
    header += bytes((VERSION, len(symbols) - 1))
    for s, length in zip(symbols.tolist(), lengths):
        header += bytes((s, length))
    header += struct.pack("<Q", len(data))

    maxlen = max(lengths)
    table = np.zeros((256, maxlen), dtype=np.uint8)
    lens = np.zeros(256, dtype=np.int64)
    for origin, length, code in book.entries:
        s = int(symbols[origin - 1])
        lens[s] = length
        table[s, :length] = [(code >> (length - 1 - j)) & 1 for j in range(length)]
    mask = np.arange(maxlen) < lens[:, None]
    bits = table[arr][mask[arr]]
    return bytes(header) + np.packbits(bits).tobytes()


def _parse_header(blob: bytes) -> tuple[list[int], list[int], int, int]:
    if len(blob) < 6:
        raise ContainerError("truncated header")
    if blob[:4] != MAGIC:
        raise ContainerError("bad magic")
    if blob[4] != VERSION:
        raise ContainerError(f"unsupported version {blob[4]}")
    count = blob[5] + 1
    end = 6 + 2 * count
    if len(blob) < end + 8:
        raise ContainerError("truncated header")
    symbols = list(blob[6:end:2])
    lengths = list(blob[7:end:2])
    if any(b <= a for a, b in zip(symbols, symbols[1:])):
        raise ContainerError("symbols not strictly ascending")
    (size,) = struct.unpack("<Q", blob[end:end + 8])
    return symbols, lengths, size, end + 8


def decode(blob: bytes) -> bytes:
    """Inverse of :func:`encode`."""
    symbols, lengths, size, start = _parse_header(blob)
    try:
        book = canonical_assign(lengths)
    except KraftError as exc:
        raise ContainerError(str(exc)) from exc
    body = np.frombuffer(blob, dtype=np.uint8, offset=start)
    bits = np.unpackbits(body)
    maxlen = max(lengths)
    if maxlen <= _TABLE_BITS:
        out, used = _decode_table(book, symbols, bits, size, maxlen)
    else:
        out, used = _decode_canonical(book, symbols, bits, size)
    if len(body) != (used + 7) // 8:
        raise ContainerError("trailing bytes after the bitstream")
    if bits[used:].any():
        raise ContainerError("non-zero padding bits")
    return out


def _decode_table(book: Codebook, symbols: list[int], bits: np.ndarray, size: int,
                  width: int) -> tuple[bytes, int]:
    nbits = len(bits)
    padded = np.concatenate((bits, np.zeros(width, dtype=np.uint8))).astype(np.int64)
    window = np.zeros(nbits, dtype=np.int64)
    for j in range(width):
        window = (window << 1) | padded[j:j + nbits]
    sym_of = np.zeros(1 << width, dtype=np.int64)
    len_of = np.zeros(1 << width, dtype=np.int64)
    for origin, length, code in book.entries:
        lo = code << (width - length)
        hi = (code + 1) << (width - length)
        sym_of[lo:hi] = symbols[origin - 1]
        len_of[lo:hi] = length
    win = window.tolist()
    syms = sym_of.tolist()
    lens = len_of.tolist()
    out = bytearray(size)
    pos = 0
    for k in range(size):
        if pos >= nbits:
            raise ContainerError("truncated bitstream")
        v = win[pos]
        step = lens[v]
        if step == 0:
            raise ContainerError("invalid codeword")
        out[k] = syms[v]
        pos += step
    if pos > nbits:
        raise ContainerError("truncated bitstream")
    return bytes(out), pos


def _decode_canonical(book: Codebook, symbols: list[int], bits: np.ndarray,
                      size: int) -> tuple[bytes, int]:
    # first[length] is the smallest codeword of that length, index[length]
    # the position of its entry in canonical order.
    maxlen = max(length for _, length, _ in book.entries)
    first = [0] * (maxlen + 2)
    count = [0] * (maxlen + 2)
    index = [0] * (maxlen + 2)
    for k, (_, length, code) in enumerate(book.entries):
        if count[length] == 0:
            first[length] = code
            index[length] = k
        count[length] += 1
    order = [symbols[o - 1] for o, _, _ in book.entries]
    stream = bits.tolist()
    nbits = len(stream)
    out = bytearray(size)
    pos = 0
    for k in range(size):
        code = 0
        length = 0
        while True:
            if pos >= nbits:
                raise ContainerError("truncated bitstream")
            code = (code << 1) | stream[pos]
            pos += 1
            length += 1
            if length > maxlen:
                raise ContainerError("invalid codeword")
            if count[length] and first[length] <= code < first[length] + count[length]:
                out[k] = order[index[length] + code - first[length]]
                break
    return bytes(out), pos
