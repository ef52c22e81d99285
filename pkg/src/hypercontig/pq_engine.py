"""Coefficients P(k,l,m), Q(k,l,m) with F(a+k,b+l;c+m) = P F + Q F(a+1).

Three independent routes are provided:

* :func:`pq_path` multiplies unit transfer matrices along the walk
  ``(0,0,0) -> (k,0,0) -> (k,l,0) -> (k,l,m)``;
* :func:`pq_divide_conquer` computes Q alone from the splitting formula
  ``Q(h+h') = S^h Q(h') Q(h+e_a) + S^(h+e_a)[(c-a)/(a(1-z)) Q(h'-e_a)] Q(h)``
  and gets P from ``P(s) = (c-a-1)/((a+1)(1-z)) S_a Q(s-e_a)``;
* :func:`pq_negative` maps a negated shift to the positive one through the
  closed-form Pochhammer prefactor.

All three are memoized in separate caches so they can be checked against
each other.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass

from .exprio import parse_expr
from .gauss_core import (
    DIRECTIONS,
    E_A,
    ORIGIN,
    ShiftVector,
    apply_shift,
    as_shift,
    step_matrix,
    unit_vectors,
)
from .ratfield import RatFunc, pochhammer, var

#: ``auto`` switches to divide and conquer at this max |component|.
DC_THRESHOLD = 8
#: ``auto`` uses the negated-shift closed form above this |k|+|l|+|m|.
NEGATIVE_THRESHOLD = 6


@dataclass(frozen=True)
class PQPair:
    shift: ShiftVector
    p: RatFunc
    q: RatFunc

    def __iter__(self):
        return iter((self.p, self.q))


class _Cache:
    """Dict with serialized insertion; reads are lock-free."""

    def __init__(self):
        self._data = {}
        self._lock = threading.Lock()

    def get(self, key):
        return self._data.get(key)

    def put(self, key, value):
        with self._lock:
            return self._data.setdefault(key, value)

    def clear(self):
        with self._lock:
            self._data.clear()

    def __len__(self):
        return len(self._data)


_CACHES = {"path": _Cache(), "dc": _Cache(), "negative": _Cache()}


def clear_caches():
    for c in _CACHES.values():
        c.clear()


def cache_sizes() -> dict:
    return {k: len(v) for k, v in _CACHES.items()}


_PINQ = parse_expr("(c-a-1)/((a+1)*(1-z))")
_SPLIT_FACTOR = parse_expr("(c-a)/(a*(1-z))")


def p_from_q(q_prev_a: RatFunc) -> RatFunc:
    """P(s) from Q(s - e_a)."""
    return _PINQ * q_prev_a.shift("a", 1)


# -- path method ------------------------------------------------------------


def _sign(x):
    return (x > 0) - (x < 0)


def _path_predecessor(s: ShiftVector):
    k, l, m = s
    if m:
        d = "+c" if m > 0 else "-c"
        return ShiftVector(k, l, m - _sign(m)), d
    if l:
        d = "+b" if l > 0 else "-b"
        return ShiftVector(k, l - _sign(l), 0), d
    d = "+a" if k > 0 else "-a"
    return ShiftVector(k - _sign(k), 0, 0), d


def _path_state(s: ShiftVector):
    """X(s) as a 4-tuple, walking forward from the nearest cached prefix."""
    cache = _CACHES["path"]
    chain = []
    cur = s
    while True:
        hit = cache.get(cur)
        if hit is not None:
            state = hit
            break
        if cur == ORIGIN:
            one, zero = RatFunc(1), RatFunc(0)
            state = cache.put(ORIGIN, (one, zero, zero, one))
            break
        prev, d = _path_predecessor(cur)
        chain.append((prev, d, cur))
        cur = prev
    for prev, d, nxt in reversed(chain):
        u11, u12, u21, u22 = step_matrix(d, prev).entries
        x11, x12, x21, x22 = state
        state = (
            u11 * x11 + u12 * x21,
            u11 * x12 + u12 * x22,
            u21 * x11 + u22 * x21,
            u21 * x12 + u22 * x22,
        )
        state = cache.put(nxt, state)
    return state


def pq_path(shift) -> PQPair:
    s = as_shift(shift)
    x11, x12, _, _ = _path_state(s)
    return PQPair(s, x11, x12)


# -- divide and conquer ----------------------------------------------------


def _measure(s) -> int:
    # Q(0) and Q(e_a) are both trivial, so centre the a-axis at 1/2
    return abs(2 * s[0] - 1) + 2 * abs(s[1]) + 2 * abs(s[2])


def _half_candidates(x):
    return range(x // 2 - 1, -(-x // 2) + 2)


def choose_split(s):
    """Split ``s = h + h'`` whose four Q sub-problems all shrink.

    Among candidates near ``s/2`` take the one with the smallest largest
    sub-problem (ties: smallest total, then smallest ``h``).  ``None`` when
    no candidate shrinks everything; that only happens for |s|_1 <= 2.
    """
    s = as_shift(s)
    mu = _measure(s)
    best = None
    for h in itertools.product(*(_half_candidates(x) for x in s)):
        h = ShiftVector(*h)
        hp = s - h
        subs = (h, h + E_A, hp, hp - E_A)
        sizes = [_measure(t) for t in subs]
        if max(sizes) >= mu:
            continue
        key = (max(sizes), sum(sizes), h)
        if best is None or key < best[0]:
            best = (key, h)
    return None if best is None else best[1]


def _dc_base():
    cache = _CACHES["dc"]
    if cache.get(ORIGIN) is None:
        for s, (_, q) in unit_vectors().items():
            cache.put(s, q)


def _dc_q(s: ShiftVector) -> RatFunc:
    cache = _CACHES["dc"]
    hit = cache.get(s)
    if hit is not None:
        return hit
    h = choose_split(s)
    if h is not None:
        hp = s - h
        q = apply_shift(_dc_q(hp), h) * _dc_q(h + E_A) + apply_shift(
            _SPLIT_FACTOR * _dc_q(hp - E_A), h + E_A
        ) * _dc_q(h)
    else:
        q = _dc_unit_step(s)
    return cache.put(s, q)


def _dc_unit_step(s: ShiftVector) -> RatFunc:
    # Q(t + d) = S^t P(d) Q(t) + S^t Q(d) Q(t + e_a) for a unit step d
    units = unit_vectors()
    mu = _measure(s)
    for name in ("+a", "-a", "+b", "-b", "+c", "-c"):
        d = DIRECTIONS[name]
        t = s - d
        if _measure(t) < mu and _measure(t + E_A) < mu:
            pd, qd = units[d]
            return apply_shift(pd, t) * _dc_q(t) + apply_shift(qd, t) * _dc_q(t + E_A)
    raise RuntimeError(f"no reduction available for shift {tuple(s)}")


def q_divide_conquer(shift) -> RatFunc:
    _dc_base()
    return _dc_q(as_shift(shift))


def pq_divide_conquer(shift) -> PQPair:
    s = as_shift(shift)
    q = q_divide_conquer(s)
    p = p_from_q(q_divide_conquer(s - E_A))
    return PQPair(s, p, q)


# -- negated shifts ----------------------------------------------------------


def negative_prefactor(k: int, l: int, m: int) -> RatFunc:
    """Q(-k,-l,-m) / S_a^-k S_b^-l S_c^-m Q(k,l,m)."""
    a, b, c, z = var("a"), var("b"), var("c"), var("z")
    num = (-1) ** (m + 1) * pochhammer(-a, k) * pochhammer(1 - b, l) * z**m * (1 - z) ** (k + l - m)
    den = pochhammer(1 - c, m) ** 2 * pochhammer(c - a, k - m) * pochhammer(c - b, l - m)
    return num / den


def _q_negative(k, l, m, inner):
    cache = _CACHES["negative"]
    key = (k, l, m, inner)
    hit = cache.get(key)
    if hit is not None:
        return hit
    if (k, l, m) == (0, 0, 0):
        return cache.put(key, RatFunc(0))
    q_pos = pq(ShiftVector(k, l, m), inner).q
    q = negative_prefactor(k, l, m) * q_pos.shift_abc(-k, -l, -m)
    return cache.put(key, q)


def pq_negative(shift, inner: str = "path") -> PQPair:
    """PQ at ``(-k,-l,-m)`` for a non-negative triple ``(k,l,m)``.

    ``inner`` selects the method used for the positive-shift Q values.
    """
    k, l, m = as_shift(shift)
    if min(k, l, m) < 0:
        raise ValueError("pq_negative takes the non-negative triple (k, l, m) describing (-k,-l,-m)")
    q = _q_negative(k, l, m, inner)
    p = p_from_q(_q_negative(k + 1, l, m, inner))
    return PQPair(ShiftVector(-k, -l, -m), p, q)


# -- dispatch ------------------------------------------------------------------


def pq(shift, method: str = "auto") -> PQPair:
    s = as_shift(shift)
    if method == "auto":
        if max(s) <= 0 and -sum(s) > NEGATIVE_THRESHOLD:
            return pq_negative(-s, inner="dc")
        if max(abs(x) for x in s) >= DC_THRESHOLD:
            method = "dc"
        else:
            method = "path"
    if method == "path":
        return pq_path(s)
    if method == "dc":
        return pq_divide_conquer(s)
    if method == "negative":
        if max(s) > 0:
            raise ValueError("the negative method needs all components <= 0")
        return pq_negative(-s)
    raise ValueError(f"unknown method {method!r}")


# -- W symbols and closed forms -------------------------------------------------


def w_symbol(p, q, r, k, l, m, method: str = "path") -> RatFunc:
    """det [[P(s), P(s+t)], [Q(s), Q(s+t)]] with s=(k,l,m), t=(p,q,r)."""
    s = ShiftVector(k, l, m)
    x = pq(s, method)
    y = pq(s + (p, q, r), method)
    return x.p * y.q - y.p * x.q


def w_one_closed(k: int, l: int, m: int) -> RatFunc:
    """Closed form of W_{1,0,0}(k,l,m)."""
    a, b, c, z = var("a"), var("b"), var("c"), var("z")
    num = pochhammer(c, m) ** 2 * z ** (-m) * (z - 1) ** (m - k - l)
    den = pochhammer(a + 1, k) * pochhammer(b, l) * pochhammer(c - a, m - k) * pochhammer(c - b, m - l)
    return num / den


def w_symbol_closed(p, q, r, k, l, m, method: str = "path") -> RatFunc:
    """W_{p,q,r}(k,l,m) = W_{1,0,0}(k,l,m) * S^(k,l,m) Q(p,q,r)."""
    return w_one_closed(k, l, m) * pq((p, q, r), method).q.shift_abc(k, l, m)


def pq_det(s, s2, method: str = "path") -> RatFunc:
    """det [[P(s), P(s2)], [Q(s), Q(s2)]] computed from the coefficients."""
    x, y = pq(s, method), pq(s2, method)
    return x.p * y.q - y.p * x.q


def pq_det_closed(s, s2, method: str = "path") -> RatFunc:
    """The same determinant from the Pochhammer closed form."""
    s, s2 = as_shift(s), as_shift(s2)
    return w_one_closed(*s) * pq(s2 - s, method).q.shift_abc(*s)
