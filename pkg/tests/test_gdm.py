import math
import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from opfc.baselines import huffman_lengths
from opfc.gdm import _Run, gdm_lengths, gdm_phase_trace
from opfc.instances import gen_alternation, gen_random
from opfc.model import WeightSeq, code_cost, is_complete
from opfc.signature import alternation
from oracles import exhaustive_min_cost, fifo_root_depths, kraft_fraction


def cost(w, a):
    return code_cost(WeightSeq.from_values(w) if not isinstance(w, WeightSeq) else w, a)


def test_running_example():
    w = [1, 2, 3, 4, 5, 5, 6, 7]
    a = gdm_lengths(w, check_invariants=True)
    assert cost(w, a) == 95
    assert a.stats.loop_iterations == 3


def test_uniform_six():
    a = gdm_lengths([1] * 6)
    assert Counter(a.lengths) == Counter([2, 2, 3, 3, 3, 3])
    assert a.stats.loop_iterations == 1


def test_singleton():
    a = gdm_lengths([42])
    assert a.lengths == (1,)
    assert a.stats.loop_iterations == 0


def test_pair():
    assert gdm_lengths([3, 9]).lengths == (1, 1)


def test_powers_of_two():
    w = [16, 1, 8, 2, 4]
    a = gdm_lengths(w, check_invariants=True)
    assert a.lengths == (1, 4, 2, 4, 3)
    assert a.stats.loop_iterations == 4


def test_phase_trace_uniform():
    a, trace = gdm_phase_trace([1, 1, 1, 1])
    phases = [r.phase for r in trace]
    assert phases.count("grouping") == 1
    assert phases[0] == "initialization"
    assert sum(r.queries for r in trace) == a.stats.ds_queries


def test_phase_trace_powers():
    a, trace = gdm_phase_trace([1, 2, 4, 8, 16])
    assert [r.phase for r in trace].count("grouping") == 4
    assert sum(r.queries for r in trace) == a.stats.ds_queries


@pytest.mark.parametrize("seed", range(30))
def test_exhaustive_small(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 8)
    w = [rng.randint(1, rng.choice([2, 10, 10 ** 9])) for _ in range(n)]
    assert cost(w, gdm_lengths(w, check_invariants=True)) == exhaustive_min_cost(w)


@settings(max_examples=400, deadline=None)
@given(st.lists(st.integers(1, 40), min_size=1, max_size=90))
def test_matches_huffman_with_ties(w):
    a = gdm_lengths(w, check_invariants=True)
    assert cost(w, a) == cost(w, huffman_lengths(w))
    if len(w) > 1:
        assert kraft_fraction(a.lengths) == 1
        assert a.stats.loop_iterations == alternation(w)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(1, 2 ** 62), min_size=2, max_size=200))
def test_matches_huffman_wide(w):
    a = gdm_lengths(w)
    assert cost(w, a) == cost(w, huffman_lengths(w))
    assert is_complete(a)
    assert a.stats.loop_iterations == alternation(w)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(1, 1000), min_size=2, max_size=100), st.integers(0, 10 ** 6))
def test_randomized_pivots_same_cost(w, seed):
    a = gdm_lengths(w, randomized=True, seed=seed)
    assert cost(w, a) == cost(w, gdm_lengths(w))


@pytest.mark.parametrize("n", [2 ** 8, 2 ** 12, 2 ** 16])
def test_lazy_on_uniform(n):
    w = gen_alternation(n, 1, seed=3)
    run = _Run(w)
    a = run.run()
    assert a.stats.ds_queries <= 2 * (n - 1).bit_length() + 8
    # Only a handful of cut points, nowhere near a full sort.
    assert len(run.ds.boundaries()) <= 8
    assert a.stats.comparisons <= 8 * n


@pytest.mark.parametrize("alpha", [1, 2, 3, 4, 5, 6])
def test_alternation_instances(alpha):
    w = gen_alternation(256, alpha, seed=alpha)
    a = gdm_lengths(w, check_invariants=True)
    assert a.stats.loop_iterations == alpha
    assert cost(w, a) == cost(w, huffman_lengths(w))


@pytest.mark.parametrize("i", [1, 2, 3, 5, 6, 7, 8, 13, 64, 100])
def test_conclusion_split_matches_fifo(i):
    # i equal roots: two-level split has the same depth multiset as FIFO pairing.
    fifo = fifo_root_depths(i)
    lvl = i.bit_length() - 1
    deep = 2 * (i - (1 << lvl))
    split = [lvl + 1] * deep + [lvl] * (i - deep)
    assert sorted(split) == sorted(fifo)


def test_conclusion_depths_leaf_level():
    # Uniform weights: the conclusion sees leaf pairs, so depths follow the same split.
    for n in (2, 3, 5, 6, 7, 9, 31, 33):
        a = gdm_lengths([7] * n)
        assert sorted(a.lengths) == sorted(fifo_root_depths(n))


def test_random_large_agrees():
    w = gen_random(20000, 1 << 30, seed=5)
    assert cost(w, gdm_lengths(w)) == cost(w, huffman_lengths(w))


def test_stats_fields():
    s = gdm_lengths([1, 2, 3, 4]).stats
    assert s.ds_queries > 0 and s.comparisons > 0
    assert s.distinct_lengths == 3  # lengths 3, 3, 2, 1


@pytest.mark.parametrize("n", [2 ** 10, 2 ** 13, 2 ** 16])
@pytest.mark.parametrize("cap", [16, "n", 2 ** 40])
def test_query_bound_high_alternation_random(n, cap):
    # Random weights reach alternations near n/3, far past what the
    # separated-groups generator can express within 62-bit weights.
    w = gen_random(n, n if cap == "n" else cap, seed=n)
    a = gdm_lengths(w)
    alpha = alternation(w)
    assert a.stats.loop_iterations == alpha
    assert a.stats.ds_queries <= 32 * alpha * (1 + math.log2((n - 1) / alpha))
