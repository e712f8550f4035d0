"""Experiment matrix over (n, alternation) and regression checks on counters.

Wall time is recorded for information only; every check uses counters.
"""

from __future__ import annotations

import csv
import logging
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, fields
from typing import Iterable, Sequence

import numpy as np

from opfc.baselines import huffman_lengths, van_leeuwen_lengths
from opfc.gdm import gdm_lengths
from opfc.instances import gen_alternation, max_feasible_alternation
from opfc.model import code_cost

log = logging.getLogger(__name__)

DEFAULT_C = 32
ALGOS = {
    "gdm": gdm_lengths,
    "huffman": huffman_lengths,
    "vanleeuwen": van_leeuwen_lengths,
}


@dataclass(frozen=True)
class BenchRecord:
    n: int
    alpha: int
    algo: str
    ds_queries: int
    comparisons: int
    loop_iterations: int
    wall_time_ns: int
    cost: int


def instance_seed(seed: int, n: int, alpha: int, rep: int) -> int:
    return int(np.random.SeedSequence([seed, n, alpha, rep]).generate_state(1)[0])


def _run_instance(task: tuple[int, int, int, int, tuple[str, ...]]) -> list[BenchRecord]:
    n, alpha, rep, seed, algos = task
    w = gen_alternation(n, alpha, instance_seed(seed, n, alpha, rep))
    out = []
    for name in algos:
        t0 = time.perf_counter_ns()
        a = ALGOS[name](w)
        dt = time.perf_counter_ns() - t0
        s = a.stats
        out.append(BenchRecord(n, alpha, name, s.ds_queries, s.comparisons,
                               s.loop_iterations, dt, code_cost(w, a)))
    if len({r.cost for r in out}) > 1:
        raise RuntimeError(f"cost mismatch on n={n} alpha={alpha} rep={rep}: "
                           + ", ".join(f"{r.algo}={r.cost}" for r in out))
    return out


def run_matrix(ns: Sequence[int], alphas: Sequence[int], reps: int, seed: int = 0,
               algos: Sequence[str] = ("gdm", "huffman", "vanleeuwen"),
               workers: int = 1) -> list[BenchRecord]:
    """One record per (n, alpha, rep, algo); infeasible pairs are skipped."""
    for name in algos:
        if name not in ALGOS:
            raise ValueError(f"unknown algorithm {name!r}")
    tasks = []
    for n in ns:
        for alpha in alphas:
            if not 1 <= alpha <= n - 1:
                log.warning("skipping n=%d alpha=%d: alternation outside [1, n-1]", n, alpha)
                continue
            if alpha > max_feasible_alternation(n):
                log.warning("skipping n=%d alpha=%d: weights would exceed 2**62", n, alpha)
                continue
            tasks += [(n, alpha, rep, seed, tuple(algos)) for rep in range(reps)]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_run_instance, tasks))
    else:
        chunks = [_run_instance(t) for t in tasks]
    return [r for chunk in chunks for r in chunk]


def query_bound(n: int, alpha: int, c: float = DEFAULT_C) -> float:
    return c * alpha * (1 + math.log2((n - 1) / alpha))


def comparison_bound(n: int, q: int, c: float = DEFAULT_C) -> float:
    lq = math.log2(q) if q > 0 else 0.0
    return c * (n * (1 + lq) + q * (1 + math.log2(n)))


def check_query_bound(records: Iterable[BenchRecord], c: float = DEFAULT_C) -> list[BenchRecord]:
    """GDM records whose query count exceeds ``c*alpha*(1+lg((n-1)/alpha))``."""
    return [r for r in records
            if r.algo == "gdm" and r.n > 1 and r.ds_queries > query_bound(r.n, r.alpha, c)]


def check_comparison_bound(records: Iterable[BenchRecord], c: float = DEFAULT_C
                           ) -> list[BenchRecord]:
    """GDM records whose comparisons exceed ``c*(n(1+lg q)+q(1+lg n))``."""
    return [r for r in records
            if r.algo == "gdm" and r.n > 1
            and r.comparisons > comparison_bound(r.n, r.ds_queries, c)]


def fit_constant(records: Iterable[BenchRecord], kind: str = "queries") -> float:
    """Smallest constant under which the given records pass the check."""
    best = 0.0
    for r in records:
        if r.algo != "gdm" or r.n < 2:
            continue
        if kind == "queries":
            best = max(best, r.ds_queries / query_bound(r.n, r.alpha, 1))
        elif kind == "comparisons":
            best = max(best, r.comparisons / comparison_bound(r.n, r.ds_queries, 1))
        else:
            raise ValueError(f"unknown bound {kind!r}")
    return best


def export_csv(records: Iterable[BenchRecord], path: str | os.PathLike) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow([f.name for f in fields(BenchRecord)])
        for r in records:
            writer.writerow(astuple(r))


def read_csv(path: str | os.PathLike) -> list[BenchRecord]:
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.DictReader(fh))
    out = []
    for row in rows:
        kw = {f.name: (row[f.name] if f.type in ("str", str) else int(row[f.name]))
              for f in fields(BenchRecord)}
        out.append(BenchRecord(**kw))
    return out
