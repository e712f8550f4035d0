"""Optimal prefix free codes from unsorted weights with partial sorting."""

from opfc.model import (
    MAX_WEIGHT,
    LengthAssignment,
    RunStats,
    WeightError,
    WeightSeq,
    code_cost,
    kraft_sum,
)
from opfc.deferred import DeferredMultiset
from opfc.signature import Signature, alternation, signature
from opfc.baselines import huffman_lengths, van_leeuwen_lengths
from opfc.gdm import gdm_lengths, gdm_phase_trace
from opfc.codec import Codebook, KraftError, canonical_assign, decode, encode
from opfc.instances import gen_alternation, gen_random, read_weights, write_weights

__all__ = [
    "MAX_WEIGHT",
    "Codebook",
    "DeferredMultiset",
    "KraftError",
    "LengthAssignment",
    "RunStats",
    "Signature",
    "WeightError",
    "WeightSeq",
    "alternation",
    "canonical_assign",
    "code_cost",
    "decode",
    "encode",
    "gdm_lengths",
    "gdm_phase_trace",
    "gen_alternation",
    "gen_random",
    "huffman_lengths",
    "kraft_sum",
    "read_weights",
    "signature",
    "van_leeuwen_lengths",
    "write_weights",
]
