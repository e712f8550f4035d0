"""Extraction signature of the two-queue construction and its alternation."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from opfc.model import WeightSeq


@dataclass(frozen=True)
class Signature:
    """String over ``{E, I}`` recording each node extracted as a minimum.

    ``E`` marks an external node (an input weight) and ``I`` an internal
    node, the final root included.
    """

    chars: str

    def __str__(self) -> str:
        return self.chars

    def __len__(self) -> int:
        return len(self.chars)

    def count(self, sub: str) -> int:
        """Occurrences of ``sub``, overlapping ones included."""
        if len(sub) == 1:
            return self.chars.count(sub)
        return sum(1 for i in range(len(self.chars) - len(sub) + 1)
                   if self.chars.startswith(sub, i))

    @property
    def alternation(self) -> int:
        return self.chars.count("EI")


def _values(w: WeightSeq | Sequence[int]) -> list[int]:
    if isinstance(w, WeightSeq):
        return w.tolist()
    return [int(v) for v in w]


def signature(w: WeightSeq | Sequence[int], external_first: bool = True) -> Signature:
    """Run the two-queue algorithm on the sorted weights and record it.

    Ties between the two queue heads go to the external node.  Pass
    ``external_first=False`` to extract the internal node on ties instead;
    that variant is for experiments only and does not match the loop count
    of :func:`opfc.gdm.gdm_lengths`.
    """
    ext = sorted(_values(w))
    if not ext:
        raise ValueError("signature of an empty sequence")
    if len(ext) == 1:
        return Signature("E")
    out = []
    internals: deque[int] = deque()
    i = 0
    pending = None
    while True:
        if i < len(ext) and (not internals
                             or ext[i] < internals[0]
                             or (external_first and ext[i] == internals[0])):
            x = ext[i]
            i += 1
            out.append("E")
        else:
            x = internals.popleft()
            out.append("I")
            if i == len(ext) and not internals and pending is None:
                break
        if pending is None:
            pending = x
        else:
            internals.append(pending + x)
            pending = None
    return Signature("".join(out))


def alternation(w: WeightSeq | Sequence[int], external_first: bool = True) -> int:
    """Number of ``EI`` factors in the signature, in ``[1, n - 1]``."""
    return signature(w, external_first).alternation
