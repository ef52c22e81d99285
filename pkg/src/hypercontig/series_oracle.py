"""Independent checks: exact truncated 2F1 series and float pFq / Gamma.

The exact route specializes a, b, c to rationals and verifies a relation
coefficient by coefficient in z.  After clearing denominators each weight
is a polynomial p_i(z), and the z^j coefficient of sum p_i(z) F_i(z) only
involves series coefficients of index <= j, so truncating every F_i at
order N makes coefficients 0..N of the residual exact.  The check is only
meaningful when N >= max deg p_i; relations built by this package have
weights of degree well below the default N = 20.
"""

from __future__ import annotations

import math
import random
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import InadmissibleError, PoleError
from .ratfield import RatFunc, _to_fraction, denominator_lcm


@dataclass(frozen=True)
class SeriesTrunc:
    coeffs: tuple
    params: tuple
    order: int


def series_pfq_exact(upper, lower, order: int) -> list:
    """Exact coefficients of z^0..z^order of a pFq series."""
    upper = [_to_fraction(u) for u in upper]
    lower = [_to_fraction(x) for x in lower]
    out = [Fraction(1)]
    t = Fraction(1)
    for j in range(order):
        den = Fraction(j + 1)
        for x in lower:
            den *= x + j
        if den == 0:
            if t == 0:
                out.append(Fraction(0))
                continue
            raise InadmissibleError(f"lower parameter {x} hits the pole {-j}")
        num = Fraction(1)
        for u in upper:
            num *= u + j
        t = t * num / den
        out.append(t)
    return out


def series_2f1(a, b, c, order: int) -> SeriesTrunc:
    """Exact truncation of 2F1(a, b; c; z) through z^order."""
    a, b, c = _to_fraction(a), _to_fraction(b), _to_fraction(c)
    if c.denominator == 1 and -order < c <= 0:
        raise InadmissibleError(f"lower parameter c = {c} is a pole within order {order}")
    coeffs = series_pfq_exact((a, b), (c,), order)
    return SeriesTrunc(tuple(coeffs), (a, b, c), order)


@dataclass(frozen=True)
class Verdict:
    passed: bool
    first_nonzero: int | None = None
    residual: Fraction | None = None
    params: tuple = ()
    order: int = 0
    detail: str = ""

    def __bool__(self):
        return self.passed


def _z_coeffs(poly: RatFunc) -> dict:
    """{exponent of z: Fraction} for a polynomial in z alone."""
    stray = poly.variables() - {"z"}
    if stray:
        raise InadmissibleError(f"coefficient still depends on {sorted(stray)} after specialization")
    den = poly.den.leading_coefficient()
    return {mono[3]: q / den for mono, q in poly.num.terms().items()}


def check_relation(r, a, b, c, order: int = 20) -> Verdict:
    """Verify ``r`` exactly through z^order at the point (a, b, c)."""
    a, b, c = _to_fraction(a), _to_fraction(b), _to_fraction(c)
    point = {"a": a, "b": b, "c": c}
    specialized = []
    for s, coeff in r.terms:
        try:
            cz = coeff.specialize(point)
        except PoleError as exc:
            raise InadmissibleError(str(exc)) from exc
        series = series_2f1(a + s[0], b + s[1], c + s[2], order)
        specialized.append((cz, series.coeffs))
    if all(cz.is_zero() for cz, _ in specialized):
        raise InadmissibleError(f"every coefficient vanishes at {(a, b, c)}")
    den = denominator_lcm(cz for cz, _ in specialized)
    residual = [Fraction(0)] * (order + 1)
    for cz, coeffs in specialized:
        weights = _z_coeffs(cz * den)
        for t, w in weights.items():
            for j in range(t, order + 1):
                residual[j] += w * coeffs[j - t]
    for j, value in enumerate(residual):
        if value:
            return Verdict(False, j, value, (a, b, c), order, f"z^{j} coefficient is {value}")
    return Verdict(True, None, None, (a, b, c), order)


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-20, 20), rng.randint(7, 13))


def random_point(rng: random.Random) -> tuple:
    return tuple(random_rational(rng) for _ in range(3))


def check_relation_random(r, trials: int = 5, seed=0, order: int = 20, max_attempts: int = 1000):
    """Run :func:`check_relation` at ``trials`` admissible seeded points,
    resampling any point where the relation or a series is undefined."""
    rng = random.Random(seed)
    verdicts = []
    attempts = 0
    while len(verdicts) < trials:
        attempts += 1
        if attempts > max_attempts:
            raise InadmissibleError(f"no admissible point found in {max_attempts} attempts")
        try:
            verdicts.append(check_relation(r, *random_point(rng), order=order))
        except InadmissibleError:
            continue
    return verdicts


# -- floating point ----------------------------------------------------------


class PrecisionWarning(RuntimeWarning):
    pass


class PFQSum(NamedTuple):
    value: float
    bound: float
    terms: int


def _pfaff_minus_one(upper, lower):
    a, b = upper
    (c,) = lower
    # 2F1(a,b;c;-1) = 2^-a 2F1(a, c-b; c; 1/2)
    return (a, c - b), (c,), 0.5, 2.0 ** (-a)


def sum_pfq(upper, lower, x: float, max_terms: int = 2000, rtol: float = 1e-17) -> PFQSum:
    """Float pFq(upper; lower; x) with a tail bound.

    A 2F1 at x = -1 is summed as its Pfaff transform at 1/2.
    """
    upper = [float(u) for u in upper]
    lower = [float(v) for v in lower]
    scale = 1.0
    if len(upper) == 2 and len(lower) == 1 and x == -1:
        upper, lower, x, scale = _pfaff_minus_one(upper, lower)
    x = float(x)
    term = 1.0
    total = 1.0
    biggest = 1.0
    for k in range(max_terms):
        num = x
        for u in upper:
            num *= u + k
        if num == 0.0:
            return PFQSum(scale * total, 0.0, k + 1)
        den = float(k + 1)
        for v in lower:
            den *= v + k
        if den == 0.0:
            raise InadmissibleError(f"lower parameter reaches the pole {-k}")
        ratio = num / den
        term *= ratio
        total += term
        biggest = max(biggest, abs(term))
        # ratio at the next index bounds the geometric tail once it is < 1
        nxt = abs(x) / (k + 2)
        for u in upper:
            nxt *= abs(u + k + 1)
        next_den = 1.0
        for v in lower:
            next_den *= v + k + 1
        if next_den == 0.0:
            continue  # the next pass terminates or reports the pole
        nxt /= abs(next_den)
        if nxt < 1.0:
            tail = abs(term) * nxt / (1.0 - nxt)
            if tail <= rtol * abs(total) or tail == 0.0:
                bound = scale * (tail + biggest * 1e-16 * (k + 1))
                if biggest > 1e8 * abs(total):
                    warnings.warn(
                        f"cancellation: largest term {biggest:.3g} vs sum {total:.3g}", PrecisionWarning
                    )
                return PFQSum(scale * total, abs(bound), k + 2)
    warnings.warn(f"series did not converge in {max_terms} terms", PrecisionWarning)
    return PFQSum(scale * total, math.inf, max_terms)


def float_pfq(upper, lower, x: float, terms: int = 2000) -> float:
    return sum_pfq(upper, lower, x, max_terms=terms).value


def float_gamma(x: float) -> float:
    """Gamma function; raises :class:`PoleError` at non-positive integers."""
    x = float(x)
    if x <= 0 and x == math.floor(x):
        raise PoleError(f"Gamma has a pole at {x}")
    return math.gamma(x)


def float_2f1(a, b, c, z) -> float:
    return float_pfq([a, b], [c], z)
