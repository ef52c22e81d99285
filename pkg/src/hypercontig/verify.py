"""Named symbolic checks of the P/Q identities and the W-symbol properties.

Each check returns a :class:`Check`; every comparison is exact equality of
canonical rational functions.  Left and right sides are always produced by
different routes (the step-matrix walk against a closed form or a
recombination), so agreement is evidence rather than tautology.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

from .gauss_core import DIRECTIONS, E_A, ShiftVector, apply_shift, gauss_relations, lemma_step_factor
from .pq_engine import (
    _PINQ,
    _SPLIT_FACTOR,
    negative_prefactor,
    pq_det,
    pq_det_closed,
    pq_divide_conquer,
    pq_negative,
    pq_path,
    w_one_closed,
    w_symbol,
    w_symbol_closed,
)
from .ratfield import RatFunc


@dataclass
class Check:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.cases > 0 and not self.failures

    def expect(self, ok: bool, label) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(str(label))

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"; first failure {self.failures[0]}" if self.failures else ""
        return f"{status} {self.name}: {self.cases} cases, {self.seconds:.2f}s{extra}"


def _timed(name):
    def wrap(fn):
        def run(*args, **kwargs):
            chk = Check(name)
            start = time.perf_counter()
            fn(chk, *args, **kwargs)
            chk.seconds = time.perf_counter() - start
            return chk

        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        run.check_name = name
        return run

    return wrap


def _box(radius, lo=None):
    lo = -radius if lo is None else lo
    return [ShiftVector(*s) for s in itertools.product(range(lo, radius + 1), repeat=3)]


def _rand_shift(rng, radius):
    return ShiftVector(*(rng.randint(-radius, radius) for _ in range(3)))


def _P(s):
    return pq_path(s).p


def _Q(s):
    return pq_path(s).q


# -- Theorem 1 -------------------------------------------------------------------


@_timed("initcond")
def check_initcond(chk):
    """P(0)=1, Q(0)=0, P(e_a)=0, Q(e_a)=1."""
    for s, (p, q) in (((0, 0, 0), (1, 0)), ((1, 0, 0), (0, 1))):
        v = pq_path(s)
        chk.expect(v.p == RatFunc(p) and v.q == RatFunc(q), s)


@_timed("pinq")
def check_pinq(chk, radius=3):
    """P(s) = (c-a-1)/((a+1)(1-z)) S_a Q(s - e_a)."""
    for s in _box(radius):
        chk.expect(_P(s) == _PINQ * _Q(s - E_A).shift("a", 1), s)


@_timed("qargplus")
def check_qargplus(chk, trials=20, seed=0, radius=3):
    """Q(h+h') from Q(h'), Q(h+e_a), Q(h'-e_a), Q(h)."""
    rng = random.Random(seed)
    for _ in range(trials):
        h, hp = _rand_shift(rng, radius), _rand_shift(rng, radius)
        rhs = apply_shift(_Q(hp), h) * _Q(h + E_A) + apply_shift(_SPLIT_FACTOR * _Q(hp - E_A), h + E_A) * _Q(h)
        chk.expect(_Q(h + hp) == rhs, (h, hp))


@_timed("pqdet")
def check_pqdet(chk, trials=20, seed=0, radius=3):
    """det [[P(s),P(s')],[Q(s),Q(s')]] against the Pochhammer closed form."""
    rng = random.Random(seed)
    for _ in range(trials):
        s, s2 = _rand_shift(rng, radius), _rand_shift(rng, radius)
        chk.expect(pq_det(s, s2) == pq_det_closed(s, s2), (s, s2))


@_timed("minklm")
def check_minklm(chk, radius=3):
    """Q(-k,-l,-m) from S^-(k,l,m) Q(k,l,m), for 0 <= k,l,m <= radius."""
    for s in _box(radius, lo=0):
        rhs = RatFunc(0) if s == (0, 0, 0) else negative_prefactor(*s) * _Q(s).shift_abc(*(-s))
        chk.expect(_Q(-s) == rhs, s)


@_timed("same-relations")
def check_same_relations(chk, radius=2):
    """P and Q satisfy every Gauss relation, shifted by S^s, at all s in the box."""
    relations = list(gauss_relations())
    for s in _box(radius):
        for r in relations:
            sp = sq = RatFunc(0)
            for alpha, f in r.terms:
                v = pq_path(s + alpha)
                g = apply_shift(f, s)
                sp, sq = sp + g * v.p, sq + g * v.q
            chk.expect(sp.is_zero() and sq.is_zero(), (s, str(r)))


@_timed("method-agreement")
def check_method_agreement(chk, radius=4):
    """Path, divide and conquer and (for non-positive shifts) negation agree."""
    for s in _box(radius):
        a = pq_path(s)
        b = pq_divide_conquer(s)
        ok = a.p == b.p and a.q == b.q
        if max(s) <= 0:
            c = pq_negative(-s)
            ok = ok and a.p == c.p and a.q == c.q
        chk.expect(ok, s)


# -- W-symbol lemma -------------------------------------------------------------


@_timed("lemma-i")
def check_lemma_i(chk, radius=3):
    """W_{0,0,0}(k,l,m) = 0."""
    for s in _box(radius):
        chk.expect(w_symbol(0, 0, 0, *s).is_zero(), s)


@_timed("lemma-ii")
def check_lemma_ii(chk, radius=3):
    """W_{p,q,r}(0,0,0) = Q(p,q,r)."""
    for t in _box(radius):
        chk.expect(w_symbol(*t, 0, 0, 0) == _Q(t), t)


@_timed("lemma-iii")
def check_lemma_iii(chk, trials=20, seed=0, radius=2):
    """For fixed (k,l,m), W_{p,q,r}(k,l,m) satisfies the Gauss relations in (p,q,r)."""
    rng = random.Random(seed)
    relations = list(gauss_relations())
    for _ in range(trials):
        s, t = _rand_shift(rng, radius), _rand_shift(rng, radius)
        r = rng.choice(relations)
        total = RatFunc(0)
        for alpha, f in r.terms:
            total = total + apply_shift(f, s + t) * w_symbol(*(t + alpha), *s)
        chk.expect(total.is_zero(), (s, t, str(r)))


@_timed("lemma-iv")
def check_lemma_iv(chk, radius=2):
    """First-order recurrences of W_{1,0,0} in k, l and m."""
    for s in _box(radius):
        w = w_symbol(1, 0, 0, *s)
        for d in ("+a", "+b", "+c"):
            lhs = w_symbol(1, 0, 0, *(s + DIRECTIONS[d]))
            chk.expect(lhs == lemma_step_factor(d, s) * w, (s, d))


@_timed("woneklm")
def check_woneklm(chk, radius=3):
    """Closed form of W_{1,0,0}(k,l,m) against the determinant."""
    for s in _box(radius):
        chk.expect(w_symbol(1, 0, 0, *s) == w_one_closed(*s), s)


@_timed("wpqrklm")
def check_wpqrklm(chk, trials=20, seed=0, radius=3):
    """W_{p,q,r}(k,l,m) = W_{1,0,0}(k,l,m) S^(k,l,m) Q(p,q,r)."""
    rng = random.Random(seed)
    for _ in range(trials):
        t, s = _rand_shift(rng, radius), _rand_shift(rng, radius)
        chk.expect(w_symbol(*t, *s) == w_symbol_closed(*t, *s), (t, s))


@_timed("antisymmetry")
def check_antisymmetry(chk, trials=20, seed=0, radius=3):
    """W_{s-s'}(s') = -W_{s'-s}(s)."""
    rng = random.Random(seed)
    for _ in range(trials):
        s, s2 = _rand_shift(rng, radius), _rand_shift(rng, radius)
        chk.expect(w_symbol(*(s - s2), *s2) == -w_symbol(*(s2 - s), *s), (s, s2))


THEOREM_CHECKS = (
    check_initcond,
    check_pinq,
    check_qargplus,
    check_pqdet,
    check_minklm,
    check_same_relations,
)
LEMMA_CHECKS = (
    check_lemma_i,
    check_lemma_ii,
    check_lemma_iii,
    check_lemma_iv,
    check_woneklm,
    check_wpqrklm,
    check_antisymmetry,
)


def run_suite(max_shift: int = 3, seed: int = 0) -> list:
    """All theorem and lemma checks with box radius ``max_shift``."""
    small = min(max_shift, 2)
    out = [
        check_initcond(),
        check_pinq(max_shift),
        check_qargplus(seed=seed, radius=max_shift),
        check_pqdet(seed=seed, radius=max_shift),
        check_minklm(max_shift),
        check_same_relations(small),
        check_lemma_i(max_shift),
        check_lemma_ii(max_shift),
        check_lemma_iii(seed=seed, radius=small),
        check_lemma_iv(small),
        check_woneklm(max_shift),
        check_wpqrklm(seed=seed, radius=max_shift),
        check_antisymmetry(seed=seed, radius=max_shift),
    ]
    return out

