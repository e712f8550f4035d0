import os
import struct

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from opfc.codec import ContainerError, KraftError, canonical_assign, decode, encode
from opfc.gdm import gdm_lengths
from opfc.model import WeightSeq, code_cost


def test_canonical_example():
    book = canonical_assign([2, 1, 3, 3])
    assert book.strings() == {2: "0", 1: "10", 3: "110", 4: "111"}


def test_canonical_ties_by_origin():
    assert canonical_assign([2, 2, 2, 2]).strings() == {1: "00", 2: "01", 3: "10", 4: "11"}


def test_canonical_incomplete_allowed():
    assert canonical_assign([1, 2]).strings() == {1: "0", 2: "10"}


@pytest.mark.parametrize("lengths", [[1, 1, 2], [1, 1, 1], [0, 1]])
def test_kraft_violation(lengths):
    with pytest.raises(KraftError):
        canonical_assign(lengths)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(1, 10 ** 6), min_size=2, max_size=100))
def test_prefix_free(w):
    codes = list(canonical_assign(gdm_lengths(w)).strings().values())
    codes.sort()
    # In sorted order a prefix would sit right before a word it prefixes.
    for a, b in zip(codes, codes[1:]):
        assert not b.startswith(a)


def body_bits(data: bytes) -> int:
    freq = np.bincount(np.frombuffer(data, dtype=np.uint8), minlength=256)
    nz = freq[freq > 0].tolist()
    return code_cost(WeightSeq.from_values(nz), gdm_lengths(nz))


CORPUS = {
    "single": b"aaaa",
    "two": b"ab",
    "all_bytes": bytes(range(256)),
    "skewed": b"a" * 1000 + b"b" * 10 + b"c",
    "text": b"the quick brown fox jumps over the lazy dog " * 50,
    "random": np.random.default_rng(1).integers(0, 256, 100_000, dtype=np.uint8).tobytes(),
}


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_round_trip(name):
    data = CORPUS[name]
    blob = encode(data)
    assert decode(blob) == data
    count = len(set(data))
    header = 4 + 2 + 2 * count + 8
    bits = body_bits(data)
    assert len(blob) - header == (bits + 7) // 8


@settings(max_examples=150, deadline=None)
@given(st.binary(min_size=1, max_size=2000))
def test_round_trip_property(data):
    assert decode(encode(data)) == data


def test_long_codewords_use_canonical_decoder():
    # Fibonacci-like counts force code lengths beyond the table width.
    fib = [1, 1]
    while len(fib) < 26:
        fib.append(fib[-1] + fib[-2])
    data = b"".join(bytes([i]) * f for i, f in enumerate(fib))
    assert max(gdm_lengths(fib).lengths) > 20
    assert decode(encode(data)) == data


def test_empty_rejected():
    with pytest.raises(ValueError):
        encode(b"")


def test_bad_magic():
    blob = bytearray(encode(b"hello"))
    blob[0] ^= 1
    with pytest.raises(ContainerError):
        decode(bytes(blob))


def test_bad_version():
    blob = bytearray(encode(b"hello"))
    blob[4] = 9
    with pytest.raises(ContainerError):
        decode(bytes(blob))


def test_truncated():
    blob = encode(b"hello world" * 10)
    for cut in (3, 8, len(blob) - 1):
        with pytest.raises(ContainerError):
            decode(blob[:cut])


def test_trailing_bytes():
    with pytest.raises(ContainerError):
        decode(encode(b"hello") + b"\x00")


def test_nonzero_padding():
    blob = bytearray(encode(b"abc"))  # 5 body bits, 3 padding bits
    blob[-1] |= 1
    with pytest.raises(ContainerError):
        decode(bytes(blob))


def test_header_kraft_violation():
    blob = bytearray(encode(b"abc"))
    blob[7] = blob[9] = blob[11] = 1
    with pytest.raises(ContainerError):
        decode(bytes(blob))


def test_unsorted_symbols():
    blob = bytearray(encode(b"ab"))
    blob[6], blob[8] = blob[8], blob[6]
    with pytest.raises(ContainerError):
        decode(bytes(blob))


def test_declared_length_too_long():
    blob = bytearray(encode(b"abab"))
    end = 6 + 2 * 2
    blob[end:end + 8] = struct.pack("<Q", 100)
    with pytest.raises(ContainerError):
        decode(bytes(blob))


def test_random_file_round_trip(tmp_path):
    data = os.urandom(4096)
    p = tmp_path / "x.opfc"
    p.write_bytes(encode(data))
    assert decode(p.read_bytes()) == data
