"""Exhaustive searches: frozen counts, determinism, candidate gating."""

import pytest

from doptsnf.designs import is_barba
from doptsnf.exactmat import IntMatrix
from doptsnf.search import (
    DEFAULT_MAX_CANDIDATES,
    ENV_MAX_CANDIDATES,
    InfeasibleSearchError,
    SearchSpec,
    barba_problem_scan,
    enumerate_ew_tournaments,
    search_circulant_barba,
    search_circulant_tournament,
)
from doptsnf.verify import ew_tournament_check

GOLDEN_13_ROW = (1, 1, 1, 1, -1, 1, -1, -1, 1, 1, 1, -1, 1)


def test_order5_count_and_quality(witnesses5):
    assert len(witnesses5) == 40
    for w in witnesses5:
        verdict, a = ew_tournament_check(w)
        assert verdict and a in (0, 3)
    # no duplicates
    assert len({w.matrix.entries for w in witnesses5}) == 40


def test_enumeration_is_deterministic(witnesses5):
    again = enumerate_ew_tournaments(5)
    assert [w.matrix for w in again] == [w.matrix for w in witnesses5]


def test_enumeration_parallel_parity(witnesses5):
    par = enumerate_ew_tournaments(5, workers=2)
    assert [w.matrix for w in par] == [w.matrix for w in witnesses5]


def test_enumeration_limit(witnesses5):
    first = enumerate_ew_tournaments(5, limit=7)
    assert len(first) == 7
    assert [w.matrix for w in first] == [w.matrix for w in witnesses5[:7]]


def test_enumeration_rejects_bad_orders():
    with pytest.raises(ValueError):
        enumerate_ew_tournaments(7)  # not 4t + 1
    with pytest.raises(ValueError):
        enumerate_ew_tournaments(4)
    with pytest.raises(ValueError):
        enumerate_ew_tournaments(13)  # candidate space beyond any sane cap


def test_candidate_cap():
    with pytest.raises(InfeasibleSearchError) as exc:
        enumerate_ew_tournaments(9)  # 2^36 candidates > 2^20 default cap
    msg = str(exc.value)
    assert ENV_MAX_CANDIDATES in msg
    assert str(DEFAULT_MAX_CANDIDATES) in msg


def test_candidate_cap_override_param():
    with pytest.raises(InfeasibleSearchError):
        enumerate_ew_tournaments(5, max_candidates=512)  # 2^10 > 512
    assert len(enumerate_ew_tournaments(5, max_candidates=1024)) == 40


def test_candidate_cap_env(monkeypatch):
    monkeypatch.setenv(ENV_MAX_CANDIDATES, "512")
    with pytest.raises(InfeasibleSearchError):
        enumerate_ew_tournaments(5)
    monkeypatch.setenv(ENV_MAX_CANDIDATES, str(1 << 12))
    assert len(enumerate_ew_tournaments(5)) == 40


def test_circulant_tournament_searches_are_empty():
    # the three degree classes of a qualifying tournament have different
    # sizes, while every circulant is regular; the search can only be empty
    for order in (5, 13):
        assert search_circulant_tournament(order) == []
    with pytest.raises(ValueError):
        search_circulant_tournament(6)


def test_circulant_barba_counts():
    found5 = search_circulant_barba(5)
    assert len(found5) == 10
    assert all(is_barba(m) for m in found5)
    found13 = search_circulant_barba(13)
    assert len(found13) == 104
    assert GOLDEN_13_ROW in {m.row(0) for m in found13}


def test_circulant_barba_parallel_parity():
    serial = search_circulant_barba(13)
    par = search_circulant_barba(13, workers=3)
    assert serial == par


def test_circulant_barba_rejects_even_t_order():
    with pytest.raises(ValueError):
        search_circulant_barba(7)  # 7 != 1 (mod 4)


def test_barba_scan_small_orders():
    report = barba_problem_scan((1, 5))
    assert [r.order for r in report.per_order] == [1, 5]
    one, five = report.per_order
    assert one.t_param == 0
    assert one.reference is None
    assert len(one.entries) == 2  # rows (1) and (-1)
    assert all(e.factors == (1, 2) for e in one.entries)
    assert five.t_param == 2
    assert five.reference is None  # 8t + 1 = 17 is not a square
    assert len(five.entries) == 10
    assert all(e.factors == (1, 2, 2, 2, 2, 2, 4, 4, 12, 12) for e in five.entries)


def test_barba_scan_order_13():
    report = barba_problem_scan((13,))
    (rep,) = report.per_order
    assert rep.t_param == 6
    assert rep.reference == (1,) + (2,) * 12 + (12,) * 11 + (84,)
    assert len(rep.reference) == 25  # one short of the doubled order 26
    assert len(rep.entries) == 104
    golden = (1,) + (2,) * 13 + (12,) * 10 + (60, 60)
    assert all(e.factors == golden for e in rep.entries)
    assert GOLDEN_13_ROW in {e.first_row for e in rep.entries}


def test_search_spec_is_frozen():
    spec = SearchSpec(kind="ew-tournaments", order=5)
    assert spec.limit is None
    with pytest.raises(Exception):
        spec.order = 9
