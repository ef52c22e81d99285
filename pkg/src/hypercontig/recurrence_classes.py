"""Second-order recurrences A(n)S(n+1) + B(n)S(n) + C(n)S(n-1) = 0 up to
rescaling of solutions by hypergeometric terms.

Putting S(n) = h(n) Z(n) with a suitable hypergeometric term h(n) brings the
recurrence to ``Z(n+1) - Z(n) + H(n) Z(n-1) = 0`` with
``H(n) = C(n)A(n-1) / (B(n)B(n-1))``.  ``H`` (or its reciprocal, the class
function) is therefore an invariant of the equivalence class.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidRecurrenceError
from .exprio import parse_expr
from .ratfield import RatFunc
from .series_oracle import sum_pfq


@dataclass(frozen=True)
class Recurrence:
    A: RatFunc
    B: RatFunc
    C: RatFunc
    name: str = ""

    def __post_init__(self):
        for label in ("A", "B", "C"):
            value = RatFunc(getattr(self, label))
            if value.is_zero():
                raise InvalidRecurrenceError(f"coefficient {label} is identically zero")
            object.__setattr__(self, label, value)

    @classmethod
    def parse(cls, a: str, b: str, c: str, name: str = "") -> Recurrence:
        return cls(parse_expr(a), parse_expr(b), parse_expr(c), name)

    def scaled(self, factor) -> Recurrence:
        factor = RatFunc(factor)
        return Recurrence(self.A * factor, self.B * factor, self.C * factor, self.name)

    def at(self, n) -> tuple:
        """(A(n), B(n), C(n)) with ``n`` substituted."""
        return tuple(x.subs({"n": n}) for x in (self.A, self.B, self.C))

    def residual(self, seq, n) -> RatFunc:
        """A(n)S(n+1) + B(n)S(n) + C(n)S(n-1) for a callable ``seq``."""
        a, b, c = self.at(n)
        return a * seq(n + 1) + b * seq(n) + c * seq(n - 1)

    def __str__(self):
        return f"({self.A})*S(n+1) + ({self.B})*S(n) + ({self.C})*S(n-1) = 0"


@dataclass(frozen=True)
class ClassFunction:
    value: RatFunc

    def __str__(self):
        return str(self.value)


def normalize_z(r: Recurrence) -> RatFunc:
    """H(n) = C(n)A(n-1) / (B(n)B(n-1))."""
    return r.C * r.A.shift("n", -1) / (r.B * r.B.shift("n", -1))


def class_function(r: Recurrence) -> ClassFunction:
    """B(n)B(n-1) / (C(n)A(n-1))."""
    return ClassFunction(r.B * r.B.shift("n", -1) / (r.C * r.A.shift("n", -1)))


def same_class(r1: Recurrence, r2: Recurrence) -> bool:
    return class_function(r1).value == class_function(r2).value


# 0F1(; c+n; z): F(c-1) - F(c) = z/(c(c-1)) F(c+1), read with c -> c+n
# 0F1(; 2-c-n; z): the same identity with c -> 2-c-n, so S(n+1) is F(c-1)
BUILTIN = {
    "0f1-up": ("-z/((c+n)*(c+n-1))", "-1", "1"),
    "0f1-down": ("1", "-1", "-z/((2-c-n)*(1-c-n))"),
}


def builtin(name: str) -> Recurrence:
    try:
        a, b, c = BUILTIN[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; choose from {sorted(BUILTIN)}") from None
    return Recurrence.parse(a, b, c, name)


def confluent_demo(a: float = 5 / 3, z: float = 0.25, n_max: int = 5) -> list:
    """Relative gaps between 1F1(a+n; 2a+2n; 4z) and e^(2z) 0F1(; a+n+1/2; z^2)."""
    gaps = []
    for n in range(n_max + 1):
        lhs = sum_pfq([a + n], [2 * a + 2 * n], 4 * z).value
        rhs = math.exp(2 * z) * sum_pfq([], [a + n + 0.5], z * z).value
        gaps.append(abs(lhs - rhs) / abs(rhs))
    return gaps
