"""Instance generators and the plain-text weights format."""

from __future__ import annotations

import os
from typing import Iterable

import numpy as np

from opfc.model import MAX_WEIGHT, WeightError, WeightSeq
from opfc.signature import alternation


def separation(n: int) -> int:
    """Exponent gap between consecutive groups: ceil(lg n) + 1."""
    return (n - 1).bit_length() + 1


def max_feasible_alternation(n: int) -> int:
    """Largest alternation :func:`gen_alternation` can build for size ``n``."""
    return min(n - 1, 62 // separation(n))


def gen_alternation(n: int, alpha: int, seed: int | None = 0) -> WeightSeq:
    """Weights of alternation exactly ``alpha``, shuffled by ``seed``.

    Group ``g`` (1-based) holds copies of ``2**(g*s)`` with
    ``s = ceil(lg n) + 1``; every group outweighs the total of the lower
    ones, so the two-queue run exhausts one group per run of externals.
    """
    if n < 2:
        raise ValueError("need at least two weights")
    if not 1 <= alpha <= n - 1:
        raise ValueError(f"alternation {alpha} outside [1, {n - 1}]")
    s = separation(n)
    if alpha * s > 62:
        raise WeightError(f"alternation {alpha} needs weight 2**{alpha * s} > 2**62 for n={n}")
    base, extra = divmod(n, alpha)
    vals = []
    for g in range(1, alpha + 1):
        vals += [1 << (g * s)] * (base + (g <= extra))
    rng = np.random.default_rng(seed)
    arr = np.array(vals, dtype=np.int64)[rng.permutation(n)]
    w = WeightSeq(arr)
    got = alternation(w)
    if got != alpha:
        raise AssertionError(f"generated alternation {got}, wanted {alpha}")
    return w


def gen_random(n: int, max_value: int, seed: int | None = 0) -> WeightSeq:
    """``n`` i.i.d. uniform weights in ``[1, max_value]``."""
    if n < 1:
        raise ValueError("need at least one weight")
    if not 1 <= max_value <= MAX_WEIGHT:
        raise WeightError(f"max_value {max_value} outside [1, 2**62]")
    rng = np.random.default_rng(seed)
    return WeightSeq(rng.integers(1, max_value, size=n, endpoint=True, dtype=np.int64))


def parse_weights(lines: Iterable[str]) -> WeightSeq:
    vals = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            v = int(line, 10)
        except ValueError:
            raise WeightError(f"line {lineno}: not a decimal integer: {line!r}") from None
        if v < 1:
            raise WeightError(f"line {lineno}: non-positive weight {v}")
        if v > MAX_WEIGHT:
            raise WeightError(f"line {lineno}: weight {v} exceeds 2**62")
        vals.append(v)
    if not vals:
        raise WeightError("no weights found")
    return WeightSeq.from_values(vals)


def read_weights(path: str | os.PathLike) -> WeightSeq:
    with open(path, encoding="utf-8") as fh:
        return parse_weights(fh)


def write_weights(path: str | os.PathLike, w: WeightSeq) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for v in w.tolist():
            fh.write(f"{v}\n")
