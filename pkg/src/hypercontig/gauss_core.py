"""Gauss contiguous relations and unit-step transfer matrices.

Shifts ``(k, l, m)`` stand for ``F(a+k, b+l; c+m; z)``.  Every contiguous
function is written in the fixed basis ``{F(a,b;c), F(a+1,b;c)}`` as a pair
``(P, Q)``.  A transfer matrix moves the state

    X(s) = [[P(s),       Q(s)      ],
            [P(s + e_a), Q(s + e_a)]]

one unit step: ``X(s + d) = M_d(s) X(s)``.  ``M_d(s)`` is the base-0 matrix
with ``S_a^k S_b^l S_c^m`` applied to every entry, because shifting the
identity ``F(d) = P(d) F + Q(d) F(a+1)`` by ``s`` expresses ``F(s+d)`` in
``F(s)`` and ``F(s+e_a)``.

The unit data comes from five seed relations: the three relations
printed with the a-, c- and b-neighbours, the image of the first under
``a <-> b``, and ``c(1-z) F - c F(a-1) + (c-b) z F(c+1) = 0``.  The fifteen
Gauss relations are eliminations between pairs of unit neighbours; they
are kept as generated constants in ``_gauss_table.py`` (see
``scripts/regen_gauss_table.py``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache
from typing import NamedTuple

from .errors import DegenerateRelationError
from .exprio import parse_expr, print_expr
from .ratfield import RatFunc, denominator_lcm, leading_coefficient, polynomial_gcd


class ShiftVector(NamedTuple):
    k: int
    l: int
    m: int

    def __add__(self, other):
        return ShiftVector(self.k + other[0], self.l + other[1], self.m + other[2])

    def __sub__(self, other):
        return ShiftVector(self.k - other[0], self.l - other[1], self.m - other[2])

    def __neg__(self):
        return ShiftVector(-self.k, -self.l, -self.m)

    def norm1(self) -> int:
        return abs(self.k) + abs(self.l) + abs(self.m)

    def __str__(self):
        return f"{self.k},{self.l},{self.m}"


ORIGIN = ShiftVector(0, 0, 0)
E_A = ShiftVector(1, 0, 0)
E_B = ShiftVector(0, 1, 0)
E_C = ShiftVector(0, 0, 1)

DIRECTIONS = {
    "+a": E_A,
    "-a": -E_A,
    "+b": E_B,
    "-b": -E_B,
    "+c": E_C,
    "-c": -E_C,
}


def as_shift(s) -> ShiftVector:
    if isinstance(s, ShiftVector):
        return s
    if isinstance(s, str):
        parts = s.split(",")
        if len(parts) != 3:
            raise ValueError(f"shift {s!r} must be a comma-separated triple")
        return ShiftVector(*(int(p) for p in parts))
    k, l, m = s
    return ShiftVector(int(k), int(l), int(m))


def apply_shift(x: RatFunc, s) -> RatFunc:
    """``S_a^k S_b^l S_c^m x``."""
    return x.shift_abc(s[0], s[1], s[2])


# -- relations ------------------------------------------------------------


def normalize_terms(terms):
    """Clear denominators, divide out the polynomial content, sort by shift
    (descending lex) and make the first term's lex-leading coefficient
    positive."""
    terms = [(as_shift(s), RatFunc(c)) for s, c in terms]
    coeffs = [c for _, c in terms]
    if all(c.is_zero() for c in coeffs):
        raise DegenerateRelationError("all coefficients vanish identically")
    den = denominator_lcm(coeffs)
    coeffs = [c * den for c in coeffs]
    g = polynomial_gcd(c for c in coeffs if not c.is_zero())
    coeffs = [c / g for c in coeffs]
    ordered = sorted(zip((s for s, _ in terms), coeffs), key=lambda t: t[0], reverse=True)
    lead = next(c for _, c in ordered if not c.is_zero())
    if leading_coefficient(lead) < 0:
        ordered = [(s, -c) for s, c in ordered]
    return tuple(ordered)


@dataclass(frozen=True)
class ContigRelation:
    """``sum coeff_i * F(a+k_i, b+l_i; c+m_i) = 0`` over three distinct shifts."""

    terms: tuple

    def __post_init__(self):
        terms = tuple((as_shift(s), RatFunc(c)) for s, c in self.terms)
        if len(terms) != 3:
            raise ValueError(f"a contiguous relation has three terms, got {len(terms)}")
        if len({s for s, _ in terms}) != 3:
            raise ValueError("shift vectors of a relation must be pairwise distinct")
        if sum(1 for _, c in terms if not c.is_zero()) < 2:
            raise DegenerateRelationError("a relation needs at least two nonzero coefficients")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def normalized(cls, terms) -> ContigRelation:
        return cls(normalize_terms(terms))

    @property
    def shifts(self):
        return tuple(s for s, _ in self.terms)

    def coeff(self, shift) -> RatFunc:
        shift = as_shift(shift)
        for s, c in self.terms:
            if s == shift:
                return c
        raise KeyError(shift)

    def translated(self, t) -> ContigRelation:
        """The same identity with parameters shifted by ``t``."""
        t = as_shift(t)
        return ContigRelation(tuple((s + t, apply_shift(c, t)) for s, c in self.terms))

    def normalize(self) -> ContigRelation:
        return ContigRelation.normalized(self.terms)

    def is_normalized(self) -> bool:
        return self.terms == normalize_terms(self.terms)

    def __str__(self):
        return " + ".join(f"({print_expr(c)})*F[{s}]" for s, c in self.terms) + " = 0"


# -- seeds and unit data --------------------------------------------------

SEED_RELATIONS = {
    "aa": {(1, 0, 0): "a*(z-1)", (0, 0, 0): "2*a-c-a*z+b*z", (-1, 0, 0): "c-a"},
    "ac": {(1, 0, 0): "a", (0, 0, -1): "-(c-1)", (0, 0, 0): "c-a-1"},
    "ab": {(1, 0, 0): "a", (0, 1, 0): "-b", (0, 0, 0): "b-a"},
    "bb": {(0, 1, 0): "b*(z-1)", (0, 0, 0): "2*b-c-b*z+a*z", (0, -1, 0): "c-b"},
    "c_up": {(0, 0, 0): "c*(1-z)", (-1, 0, 0): "-c", (0, 0, 1): "(c-b)*z"},
}


def _seed(name, t=ORIGIN):
    return {as_shift(s) + t: apply_shift(parse_expr(c), t) for s, c in SEED_RELATIONS[name].items()}


def _solve(relation, known):
    """Solve a relation for its single shift missing from ``known``."""
    unknown = [s for s in relation if s not in known]
    if len(unknown) != 1:
        raise ValueError(f"expected exactly one unknown, got {unknown}")
    target = unknown[0]
    f = relation[target]
    p = RatFunc(0)
    q = RatFunc(0)
    for s, coeff in relation.items():
        if s == target:
            continue
        p = p - coeff * known[s][0]
        q = q - coeff * known[s][1]
    return target, (p / f, q / f)


@cache
def unit_vectors():
    """``{shift: (P, Q)}`` for every shift one unit step from 0 or from e_a."""
    one, zero = RatFunc(1), RatFunc(0)
    known = {ORIGIN: (one, zero), E_A: (zero, one)}
    for name, t in (("aa", ORIGIN), ("ac", ORIGIN), ("ab", ORIGIN), ("bb", ORIGIN), ("c_up", ORIGIN), ("aa", E_A)):
        target, vec = _solve(_seed(name, t), known)
        known[target] = vec
    p2, q2 = known[E_A + E_A]
    for d in (E_B, -E_B, E_C, -E_C):
        pd, qd = known[d]
        # F(d + e_a) = S_a P(d) F(a+1) + S_a Q(d) F(a+2)
        spd, sqd = pd.shift("a", 1), qd.shift("a", 1)
        known[d + E_A] = (sqd * p2, spd + sqd * q2)
    return known


def eliminate(s1, v1, s2, v2, origin=ORIGIN):
    """Terms of ``Q2 F(s1) - Q1 F(s2) - (P1 Q2 - P2 Q1) F(origin) = 0``."""
    (p1, q1), (p2, q2) = v1, v2
    return ((s1, q2), (s2, -q1), (origin, -(p1 * q2 - p2 * q1)))


def derive_gauss_relations():
    """The fifteen Gauss relations, derived from the unit vectors."""
    units = unit_vectors()
    out = []
    for d1, d2 in itertools.combinations(DIRECTIONS, 2):
        s1, s2 = DIRECTIONS[d1], DIRECTIONS[d2]
        out.append(((d1, d2), ContigRelation.normalized(eliminate(s1, units[s1], s2, units[s2]))))
    return out


@cache
def _gauss_table():
    from ._gauss_table import GAUSS_RELATIONS

    return tuple(
        (names, ContigRelation(tuple((ShiftVector(*s), parse_expr(c)) for s, c in terms)))
        for names, terms in GAUSS_RELATIONS
    )


def gauss_relations():
    """The fifteen Gauss contiguous relations (normalized)."""
    return [r for _, r in _gauss_table()]


def gauss_relation(d1: str, d2: str) -> ContigRelation:
    """The Gauss relation linking ``F`` with its neighbours ``d1`` and ``d2``."""
    for names, r in _gauss_table():
        if set(names) == {d1, d2}:
            return r
    raise KeyError((d1, d2))


# -- transfer matrices ----------------------------------------------------


@dataclass(frozen=True)
class StepMatrix:
    u11: RatFunc
    u12: RatFunc
    u21: RatFunc
    u22: RatFunc
    direction: str
    base: ShiftVector

    @property
    def entries(self):
        return (self.u11, self.u12, self.u21, self.u22)

    def det(self) -> RatFunc:
        return self.u11 * self.u22 - self.u12 * self.u21

    def inverse(self) -> StepMatrix:
        d = self.det()
        if d.is_zero():
            raise ZeroDivisionError("singular transfer matrix")
        return StepMatrix(self.u22 / d, -self.u12 / d, -self.u21 / d, self.u11 / d,
                          f"inv({self.direction})", self.base)

    def __matmul__(self, other: StepMatrix) -> StepMatrix:
        a11, a12, a21, a22 = self.entries
        b11, b12, b21, b22 = other.entries
        return StepMatrix(
            a11 * b11 + a12 * b21,
            a11 * b12 + a12 * b22,
            a21 * b11 + a22 * b21,
            a21 * b12 + a22 * b22,
            f"{other.direction}{self.direction}",
            other.base,
        )

    def shifted(self, t) -> StepMatrix:
        t = as_shift(t)
        return StepMatrix(*(apply_shift(u, t) for u in self.entries), self.direction, self.base + t)


def _unit_matrix(d: ShiftVector, name: str) -> StepMatrix:
    units = unit_vectors()
    (p0, q0), (p1, q1) = units[d], units[d + E_A]
    return StepMatrix(p0, q0, p1, q1, name, ORIGIN)


@cache
def _forward_matrices():
    return {name: _unit_matrix(DIRECTIONS[name], name) for name in ("+a", "+b", "+c")}


@cache
def direct_backward_matrix(direction: str) -> StepMatrix:
    """The backward base-0 step read straight off the unit vectors."""
    if not direction.startswith("-"):
        raise ValueError("expected a backward direction")
    return _unit_matrix(DIRECTIONS[direction], direction)


def step_matrix(direction: str, base=ORIGIN) -> StepMatrix:
    """Transfer matrix for one unit step in ``direction`` starting at ``base``.

    Backward steps are the inverse of the forward step that lands on
    ``base``.
    """
    if direction not in DIRECTIONS:
        raise ValueError(f"unknown direction {direction!r}")
    base = as_shift(base)
    if direction.startswith("+"):
        return _forward_matrices()[direction].shifted(base)
    forward = "+" + direction[1:]
    m = step_matrix(forward, base + DIRECTIONS[direction]).inverse()
    return StepMatrix(*m.entries, direction, base)


def lemma_step_factor(direction: str, base=ORIGIN) -> RatFunc:
    """Closed-form determinant of a forward step (first-order W recurrences)."""
    k, l, m = as_shift(base)
    if direction == "+a":
        return parse_expr("(a-c)/(a*(1-z))").shift_abc(k + 1, 0, m)
    if direction == "+b":
        return parse_expr("(b-c+1)/(b*(1-z))").shift_abc(0, l, m)
    if direction == "+c":
        return parse_expr("c^2*(z-1)/((c-a)*(c-b)*z)").shift_abc(k, l, m)
    raise ValueError(f"no closed form for direction {direction!r}")
