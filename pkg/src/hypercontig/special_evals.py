"""Kummer-type evaluations of 2F1(a+n, b; a-b; -1).

For every integer n,

    2F1(a+n, b; a-b; -1) = P(n) G1 + Q(n) G2,
    G1 = Gamma(a-b)Gamma((a+1)/2) / (Gamma(a)Gamma((a+1)/2-b)),
    G2 = Gamma(a-b)Gamma(a/2) / (Gamma(a)Gamma(a/2-b)),

where P(n), Q(n) are rational in a, b.  For n >= 0 they are terminating
3F2(1) sums; negative n is reached by running the contiguous recurrence in
n backwards from n = 0, 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
import random

from .errors import InadmissibleError
from .gauss_core import gauss_relation
from .ratfield import RatFunc, _to_fraction, var
from .recurrence_classes import Recurrence
from .series_oracle import float_gamma, random_rational, sum_pfq


class PoleProximityError(InadmissibleError):
    pass


@dataclass(frozen=True)
class KummerCoeffs:
    n: int
    p_of_n: RatFunc
    q_of_n: RatFunc


@dataclass(frozen=True)
class NumericVerdict:
    passed: bool
    lhs: float
    rhs: float
    rel_error: float
    tolerance: float
    params: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed


def terminating_pfq(upper, lower) -> RatFunc:
    """Symbolic pFq(upper; lower; 1) for a series that terminates because an
    upper parameter is a non-positive integer constant."""
    upper = [RatFunc(u) for u in upper]
    lower = [RatFunc(v) for v in lower]
    stops = [
        -int(u.eval_at({}))
        for u in upper
        if not u.variables() and u.eval_at({}).denominator == 1 and u.eval_at({}) <= 0
    ]
    if not stops:
        raise ValueError("no upper parameter is a non-positive integer")
    total = term = RatFunc(1)
    for k in range(min(stops)):
        num = RatFunc(1)
        for u in upper:
            num = num * (u + k)
        den = RatFunc(k + 1)
        for v in lower:
            den = den * (v + k)
        term = term * num / den
        total = total + term
    return total


_A, _B = var("a"), var("b")
_HALF = Fraction(1, 2)


def _p_closed(n: int) -> RatFunc:
    f = terminating_pfq([Fraction(-n, 2), Fraction(-(n + 1), 2), _A / 2 - _B], [_HALF, _A / 2])
    return f / 2 ** (n + 1)


def _q_closed(n: int) -> RatFunc:
    f = terminating_pfq(
        [Fraction(-(n - 1), 2), Fraction(-n, 2), (_A + 1) / 2 - _B], [Fraction(3, 2), (_A + 1) / 2]
    )
    return f * (n + 1) / 2 ** (n + 1)


@lru_cache(maxsize=None)
def kummer_recurrence() -> Recurrence:
    """Recurrence in n for 2F1(a+n, b; a-b; -1), read off the (+a, -a)
    Gauss relation at a -> a+n, c -> a-b, z -> -1."""
    r = gauss_relation("+a", "-a")
    images = {"a": _A + var("n"), "c": _A - _B, "z": -1}
    a_, b_, c_ = (r.coeff(s).subs(images) for s in ((1, 0, 0), (0, 0, 0), (-1, 0, 0)))
    return Recurrence(a_, b_, c_, "kummer")


def _backward(f_n: RatFunc, f_n1: RatFunc, n: int) -> RatFunc:
    # C(n) F(n-1) = -A(n) F(n+1) - B(n) F(n)
    a_, b_, c_ = kummer_recurrence().at(n)
    return -(a_ * f_n1 + b_ * f_n) / c_


@lru_cache(maxsize=None)
def _coeff_pair(n: int) -> tuple:
    if n >= 0:
        return _p_closed(n), _q_closed(n)
    p1, q1 = _coeff_pair(n + 1)
    p2, q2 = _coeff_pair(n + 2)
    return _backward(p1, p2, n + 1), _backward(q1, q2, n + 1)


def kummer_p(n: int) -> RatFunc:
    return _coeff_pair(n)[0]


def kummer_q(n: int) -> RatFunc:
    return _coeff_pair(n)[1]


def kummer_coeffs(n: int) -> KummerCoeffs:
    p, q = _coeff_pair(n)
    return KummerCoeffs(n, p, q)


# -- float checks ----------------------------------------------------------------


def _check_gamma_args(args, tol=1e-6):
    for x in args:
        if x <= tol and abs(x - round(x)) < tol:
            raise PoleProximityError(f"Gamma argument {x} is within {tol} of a pole")


def _gamma_ratio(num_args, den_args) -> float:
    _check_gamma_args(list(num_args) + list(den_args))
    # log-gamma would lose the sign; the arguments here are moderate
    out = 1.0
    for x in num_args:
        out *= float_gamma(x)
    for x in den_args:
        out /= float_gamma(x)
    return out


def _verdict(lhs, rhs, tol, **params) -> NumericVerdict:
    err = abs(lhs - rhs) / max(abs(rhs), 1e-300)
    return NumericVerdict(err < tol, lhs, rhs, err, tol, params)


def kummer_identity_check(a, b, tol: float = 1e-8) -> NumericVerdict:
    """2F1(a, b; 1+a-b; -1) = Gamma(1+a-b)Gamma(1+a/2) / (Gamma(1+a)Gamma(1+a/2-b))."""
    a, b = float(a), float(b)
    rhs = _gamma_ratio((1 + a - b, 1 + a / 2), (1 + a, 1 + a / 2 - b))
    lhs = sum_pfq([a, b], [1 + a - b], -1).value
    return _verdict(lhs, rhs, tol, a=a, b=b)


def kummer_points(count: int, seed=0) -> list:
    """Seeded rational (a, b) with b < 0 and every Gamma argument of the
    Kummer-type identities away from its poles."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        a = random_rational(rng)
        b = -abs(random_rational(rng))
        if b == 0:
            continue
        args = (1 + a - b, 1 + a / 2, 1 + a, 1 + a / 2 - b, a - b, (a + 1) / 2, a, (a + 1) / 2 - b, a / 2, a / 2 - b)
        if any(_nonpositive_int(x) for x in args):
            continue
        out.append((a, b))
    return out


def gkummer_rhs(n: int, a, b) -> float:
    fa, fb = float(a), float(b)
    g1 = _gamma_ratio((fa - fb, (fa + 1) / 2), (fa, (fa + 1) / 2 - fb))
    g2 = _gamma_ratio((fa - fb, fa / 2), (fa, fa / 2 - fb))
    point = {"a": _to_fraction(a), "b": _to_fraction(b)}
    p, q = _coeff_pair(n)
    return float(p.eval_at(point)) * g1 + float(q.eval_at(point)) * g2


def gkummer_check(n: int, a, b, tol: float = 1e-8) -> NumericVerdict:
    """Float check of the Kummer generalization at integer ``n``."""
    rhs = gkummer_rhs(n, a, b)
    lhs = sum_pfq([float(a) + n, float(b)], [float(a) - float(b)], -1).value
    return _verdict(lhs, rhs, tol, n=n, a=str(a), b=str(b))


# -- the conic specialization ----------------------------------------------------

CONIC = 2 * _A**2 - 4 * _A * _B + _B**2 - 12 * _A + 17 * _B + 12


def conic_point(s) -> tuple:
    """Second intersection of the line through (3, 1) with slope ``s``."""
    s = _to_fraction(s)
    t = (4 - 7 * s) / (s * s - 4 * s + 2)
    return 3 + t, 1 + s * t


def slopes(count: int = 50):
    """0, 1, -1, 2, -2, 1/2, -1/2, ... (distinct rationals by height)."""
    seen = []
    height = 0
    while len(seen) < count:
        for den in range(1, height + 1 or 2):
            num = height - den if height else 0
            for q in (Fraction(num, den), Fraction(-num, den)):
                if q not in seen:
                    seen.append(q)
        height += 1
    return seen[:count]


def _nonpositive_int(x: Fraction) -> bool:
    return x.denominator == 1 and x <= 0


def specfo2_degenerate(a: Fraction, b: Fraction) -> str | None:
    """Reason the conic point is unusable, or None."""
    if (a, b) == (3, 1):
        return "base point of the parameterization"
    if a == 2 * b:
        return "a = 2b"
    for x in (a - b - 2, a / 2 - 1, a - 3, a / 2 - b, a - b):
        if _nonpositive_int(x):
            return f"Gamma/lower-parameter pole at {x}"
    if _nonpositive_int(a - 5) or _nonpositive_int(b):
        return "terminating left-hand side"
    return None


def specfo2_sides(a, b) -> tuple:
    fa, fb = float(a), float(b)
    lhs = sum_pfq([fa - 5, fb], [fa - fb], -1).value
    rhs = (fa - fb - 1) / (fa - 2 * fb) * _gamma_ratio((fa - fb - 2, fa / 2 - 1), (fa - 3, fa / 2 - fb))
    return lhs, rhs


def specfo2_probe(count: int = 50, tol: float = 1e-6) -> NumericVerdict:
    """Float check of the one-term evaluation at the first usable conic point."""
    skipped = []
    for s in slopes(count):
        a, b = conic_point(s)
        assert CONIC.eval_at({"a": a, "b": b}) == 0
        reason = specfo2_degenerate(a, b)
        if reason:
            skipped.append((str(s), reason))
            continue
        lhs, rhs = specfo2_sides(a, b)
        return _verdict(lhs, rhs, tol, slope=str(s), a=str(a), b=str(b), skipped=skipped)
    raise AssertionError(f"no usable conic point among the first {count} slopes")


def p_minus5_on_conic() -> bool:
    """Whether the backward-recurrence P(-5) vanishes identically on the conic."""
    # The conic is irreducible, so by Bezout a numerator of degree d
    # vanishing at more than 2d conic points is divisible by it.
    num = kummer_p(-5).num
    points = [conic_point(s) for s in slopes(60)]
    points = [p for p in points if p != (3, 1)]
    assert len(points) > 2 * max(num.degree("a"), num.degree("b")) * 2
    return all(num.eval({"a": a, "b": b}) == 0 for a, b in points)


def float_pq(n: int, a, b) -> tuple:
    point = {"a": _to_fraction(a), "b": _to_fraction(b)}
    p, q = _coeff_pair(n)
    return float(p.eval_at(point)), float(q.eval_at(point))


__all__ = [
    "KummerCoeffs",
    "NumericVerdict",
    "PoleProximityError",
    "CONIC",
    "conic_point",
    "float_pq",
    "gkummer_check",
    "gkummer_rhs",
    "kummer_coeffs",
    "kummer_identity_check",
    "kummer_p",
    "kummer_points",
    "kummer_q",
    "kummer_recurrence",
    "p_minus5_on_conic",
    "slopes",
    "specfo2_degenerate",
    "specfo2_probe",
    "specfo2_sides",
    "terminating_pfq",
]
