import random
import threading

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercontig import pq_engine
from hypercontig.exprio import parse_expr
from hypercontig.gauss_core import E_A, ShiftVector
from hypercontig.pq_engine import (
    _measure,
    cache_sizes,
    choose_split,
    clear_caches,
    p_from_q,
    pq,
    pq_det,
    pq_det_closed,
    pq_divide_conquer,
    pq_negative,
    pq_path,
    q_divide_conquer,
    w_one_closed,
    w_symbol,
)
from hypercontig.ratfield import RatFunc

shifts = st.tuples(*(st.integers(-4, 4) for _ in range(3))).map(lambda s: ShiftVector(*s))


def test_initial_conditions():
    assert tuple(pq((0, 0, 0))) == (RatFunc(1), RatFunc(0))
    assert tuple(pq((1, 0, 0))) == (RatFunc(0), RatFunc(1))


@pytest.mark.parametrize(
    "shift, q",
    [
        ((-1, 0, 0), "(a*z-a)/(a-c)"),
        ((0, 1, 0), "a/b"),
        ((0, 0, -1), "a/(c-1)"),
    ],
)
@pytest.mark.parametrize("method", ["path", "dc"])
def test_small_q_values(shift, q, method):
    assert pq(shift, method).q == parse_expr(q)


def test_negative_method_small_values():
    assert pq_negative((1, 0, 0)).q == parse_expr("(a*z-a)/(a-c)")
    assert pq_negative((0, 0, 1)).q == parse_expr("a/(c-1)")
    with pytest.raises(ValueError):
        pq_negative((-1, 0, 0))


@settings(max_examples=60, deadline=None)
@given(shifts)
def test_path_equals_divide_conquer(s):
    x, y = pq_path(s), pq_divide_conquer(s)
    assert (x.p, x.q) == (y.p, y.q)


@settings(max_examples=30, deadline=None)
@given(st.tuples(*(st.integers(0, 4) for _ in range(3))))
def test_negated_shift_matches_path(t):
    neg = ShiftVector(*(-x for x in t))
    x, y = pq_path(neg), pq_negative(t)
    assert (x.p, x.q) == (y.p, y.q)


def test_p_from_q():
    for s in [(2, -1, 1), (0, 3, -2), (-3, 0, 0)]:
        s = ShiftVector(*s)
        assert pq_path(s).p == p_from_q(pq_path(s - E_A).q)


def test_split_shrinks_all_subproblems():
    rng = random.Random(3)
    for _ in range(200):
        s = ShiftVector(*(rng.randint(-12, 12) for _ in range(3)))
        h = choose_split(s)
        if s.norm1() > 2:
            assert h is not None, s
        if h is None:
            continue
        hp = s - h
        for t in (h, h + E_A, hp, hp - E_A):
            assert _measure(t) < _measure(s)


def test_auto_dispatch_agrees_on_large_shifts():
    for s in [(8, 0, -1), (-7, 0, 0), (0, -3, -4), (2, 9, 1)]:
        x, y = pq(s), pq_path(s)
        assert (x.p, x.q) == (y.p, y.q)


def test_large_shift_divide_conquer_only():
    q = q_divide_conquer((12, -5, 7))
    assert q.variables() <= {"a", "b", "c", "z"}
    assert not q.is_zero()


def test_unknown_method():
    with pytest.raises(ValueError):
        pq((1, 1, 1), "magic")
    with pytest.raises(ValueError):
        pq((1, 0, 0), "negative")


def test_w_one_closed_base_cases():
    assert w_one_closed(0, 0, 0) == RatFunc(1)
    assert w_one_closed(1, 0, 0) == parse_expr("(c-a-1)/((a+1)*(z-1))")
    assert w_symbol(1, 0, 0, 1, 0, 0) == parse_expr("(-a+c-1)/(a*z-a+z-1)")


@settings(max_examples=25, deadline=None)
@given(shifts, shifts)
def test_pq_det_closed_form(s, s2):
    assert pq_det(s, s2) == pq_det_closed(s, s2)


def test_cache_behaviour():
    clear_caches()
    assert cache_sizes() == {"path": 0, "dc": 0, "negative": 0}
    pq_path((2, 2, 2))
    assert cache_sizes()["path"] > 0
    before = pq_path((2, 2, 2))
    clear_caches()
    after = pq_path((2, 2, 2))
    assert (before.p, before.q) == (after.p, after.q)


def test_concurrent_callers_agree():
    clear_caches()
    results = []

    def work():
        results.append(pq_divide_conquer((5, -3, 4)).q)

    threads = [threading.Thread(target=work) for _ in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len(results) == 4 and all(r == results[0] for r in results)


def test_thresholds_are_sane():
    assert pq_engine.DC_THRESHOLD > 4
    assert pq_engine.NEGATIVE_THRESHOLD >= 3
