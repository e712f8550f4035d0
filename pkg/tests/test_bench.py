import logging

import pytest

from opfc.bench import (
    BenchRecord,
    check_comparison_bound,
    check_query_bound,
    comparison_bound,
    export_csv,
    fit_constant,
    query_bound,
    read_csv,
    run_matrix,
)


def test_bounds():
    assert query_bound(9, 1, 1) == pytest.approx(4.0)
    assert comparison_bound(8, 1, 1) == pytest.approx(8 + 4)
    assert comparison_bound(8, 0, 1) == pytest.approx(8)


def test_matrix_records():
    recs = run_matrix([16, 64], [1, 2, 4], reps=2, seed=1)
    assert len(recs) == 2 * 3 * 2 * 3
    gdm = [r for r in recs if r.algo == "gdm"]
    assert all(r.loop_iterations == r.alpha for r in gdm)
    assert not check_query_bound(gdm) and not check_comparison_bound(gdm)


def test_matrix_deterministic():
    a = run_matrix([32], [2], reps=3, seed=5, algos=("gdm",))
    b = run_matrix([32], [2], reps=3, seed=5, algos=("gdm",))
    key = lambda r: (r.cost, r.ds_queries, r.comparisons)
    assert list(map(key, a)) == list(map(key, b))


def test_matrix_skips_infeasible(caplog):
    with caplog.at_level(logging.WARNING):
        recs = run_matrix([4096], [1, 8, 5000], reps=1, algos=("gdm",))
    assert {r.alpha for r in recs} == {1}
    assert "2**62" in caplog.text and "outside" in caplog.text


def test_unknown_algo():
    with pytest.raises(ValueError):
        run_matrix([8], [1], 1, algos=("bogus",))


def test_workers_same_result():
    a = run_matrix([64], [1, 3], reps=2, seed=2, algos=("gdm",))
    b = run_matrix([64], [1, 3], reps=2, seed=2, algos=("gdm",), workers=2)
    assert [r.cost for r in a] == [r.cost for r in b]


def test_check_flags_violation():
    bad = BenchRecord(1024, 1, "gdm", 10 ** 6, 10 ** 9, 1, 0, 0)
    assert check_query_bound([bad]) == [bad]
    assert check_comparison_bound([bad]) == [bad]
    assert fit_constant([bad], "queries") > 32


def test_csv_round_trip(tmp_path):
    recs = run_matrix([16], [1, 3], reps=1, seed=0)
    p = tmp_path / "r.csv"
    export_csv(recs, p)
    got = read_csv(p)
    assert [(r.n, r.alpha, r.algo, r.cost) for r in got] == [(r.n, r.alpha, r.algo, r.cost) for r in recs]
