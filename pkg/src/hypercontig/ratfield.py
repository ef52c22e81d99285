"""Exact multivariate polynomials and rational functions over Q.

Everything in the package lives in the field Q(a, b, c, z, n).  Polynomials
are sparse, with terms kept in lexicographic order for the variable order
``a > b > c > z > n``.  The heavy lifting (multiplication, exact division,
multivariate GCD, composition) is done by FLINT through ``python-flint``;
this module owns the canonical form and the operations the rest of the
package consumes: shift operators, Pochhammer symbols and specialization.

A :class:`RatFunc` is stored as a pair of integer polynomials ``num/den``
with

* ``gcd(num, den) = 1``, integer content included,
* the lex-leading coefficient of ``den`` positive,
* zero represented as ``0/1``.

Two rational functions are equal iff these stored pairs are identical, so
``==`` is a structural comparison.
"""

from __future__ import annotations

from collections.abc import Mapping
from fractions import Fraction
from math import lcm
from numbers import Rational

import flint

from .errors import PoleError

VARS = ("a", "b", "c", "z", "n")
_INDEX = {v: i for i, v in enumerate(VARS)}

_ZCTX = flint.fmpz_mpoly_ctx.get(VARS, "lex")
_QCTX = flint.fmpq_mpoly_ctx.get(VARS, "lex")
_ZGENS = _ZCTX.gens()
_ZZERO = _ZCTX.constant(0)
_ZONE = _ZCTX.constant(1)


def var_index(v: str) -> int:
    try:
        return _INDEX[v]
    except KeyError:
        raise ValueError(f"unknown variable {v!r}; expected one of {VARS}") from None


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, flint.fmpq):
        return Fraction(int(x.p), int(x.q))
    if isinstance(x, flint.fmpz):
        return Fraction(int(x))
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def _zpoly_from_fractions(terms: Mapping) -> tuple:
    """Scale a {monomial: Fraction} map to integers; returns (poly, scale)."""
    scale = 1
    for q in terms.values():
        scale = lcm(scale, q.denominator)
    d = {m: int(q * scale) for m, q in terms.items() if q}
    return _ZCTX.from_dict(d) if d else _ZZERO, scale


def _eval_terms(p, values: Mapping[int, Fraction]):
    """Evaluate an fmpz/fmpq polynomial at a partial assignment.

    Returns a ``{monomial: Fraction}`` map in the unassigned variables.
    """
    out: dict = {}
    powers: dict = {}
    for mono, coeff in p.terms():
        mono = tuple(int(e) for e in mono)
        acc = _to_fraction(coeff)
        rest = list(mono)
        for i, e in enumerate(mono):
            if e and i in values:
                key = (i, e)
                pw = powers.get(key)
                if pw is None:
                    pw = powers[key] = values[i] ** e
                acc *= pw
                rest[i] = 0
        if acc:
            rest = tuple(rest)
            acc = out.get(rest, 0) + acc
            if acc:
                out[rest] = acc
            else:
                out.pop(rest, None)
    return out


def _assignment(assignment: Mapping) -> dict:
    return {var_index(v): _to_fraction(x) for v, x in assignment.items()}


def _shift_images(offsets: Mapping[int, int]):
    return [g + offsets[i] if offsets.get(i) else g for i, g in enumerate(_ZGENS)]


class MPoly:
    """Sparse polynomial in ``a, b, c, z, n`` with rational coefficients."""

    __slots__ = ("_p",)

    def __init__(self, terms: Mapping | None = None):
        if terms is None:
            self._p = _QCTX.constant(0)
        elif isinstance(terms, Mapping):
            d = {}
            for mono, coeff in terms.items():
                mono = tuple(int(e) for e in mono)
                if len(mono) != len(VARS) or min(mono, default=0) < 0:
                    raise ValueError(f"bad exponent vector {mono}")
                q = _to_fraction(coeff)
                if q:
                    d[mono] = flint.fmpq(q.numerator, q.denominator)
            self._p = _QCTX.from_dict(d) if d else _QCTX.constant(0)
        else:
            raise TypeError("MPoly expects a mapping of exponent vectors to rationals")

    @classmethod
    def _wrap(cls, p) -> MPoly:
        obj = cls.__new__(cls)
        obj._p = p
        return obj

    @classmethod
    def _from_z(cls, p) -> MPoly:
        return cls._wrap(_QCTX.from_dict({m: flint.fmpq(int(c)) for m, c in p.terms()}))

    @classmethod
    def var(cls, name: str) -> MPoly:
        return cls._wrap(_QCTX.gens()[var_index(name)])

    @classmethod
    def const(cls, value) -> MPoly:
        q = _to_fraction(value)
        return cls._wrap(_QCTX.constant(flint.fmpq(q.numerator, q.denominator)))

    def terms(self) -> dict:
        """``{exponent vector: Fraction}`` in lex order, leading term first."""
        return {tuple(int(e) for e in m): _to_fraction(c) for m, c in self._p.terms()}

    def __iter__(self):
        return iter(self.terms().items())

    def __len__(self):
        return len(self._p)

    def is_zero(self) -> bool:
        return self._p.is_zero()

    def __bool__(self):
        return not self._p.is_zero()

    def leading_coefficient(self) -> Fraction:
        if self._p.is_zero():
            return Fraction(0)
        return _to_fraction(self._p.leading_coefficient())

    def degree(self, v: str) -> int:
        if self._p.is_zero():
            return -1
        return int(self._p.degrees()[var_index(v)])

    def _coerce(self, other):
        if isinstance(other, MPoly):
            return other._p
        if isinstance(other, (int, Fraction, Rational)):
            q = _to_fraction(other)
            return _QCTX.constant(flint.fmpq(q.numerator, q.denominator))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else MPoly._wrap(self._p + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else MPoly._wrap(self._p - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else MPoly._wrap(o - self._p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else MPoly._wrap(self._p * o)

    __rmul__ = __mul__

    def __neg__(self):
        return MPoly._wrap(-self._p)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial; use RatFunc")
        return MPoly._wrap(self._p**e)

    def __eq__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._p == o

    def __hash__(self):
        return hash(tuple(self.terms().items()))

    def shift(self, v: str, offset: int) -> MPoly:
        if not offset:
            return self
        i = var_index(v)
        gens = list(_QCTX.gens())
        gens[i] = gens[i] + offset
        return MPoly._wrap(self._p.compose(*gens))

    def eval(self, assignment: Mapping) -> Fraction:
        vals = _assignment(assignment)
        rest = _eval_terms(self._p, vals)
        if any(any(m) for m in rest):
            raise ValueError("not all variables of the polynomial are assigned")
        return rest.get((0,) * len(VARS), Fraction(0))

    def __str__(self):
        from .exprio import print_expr

        return print_expr(RatFunc(self))

    def __repr__(self):
        return f"MPoly({str(self)!r})"


def _canon(n, d):
    if d.is_zero():
        raise ZeroDivisionError("division by the zero rational function")
    if n.is_zero():
        return _ZZERO, _ZONE
    g = n.gcd(d)
    if not g.is_one():
        n = n / g
        d = d / g
    if d.leading_coefficient() < 0:
        n, d = -n, -d
    return n, d


class RatFunc:
    """Canonical element of Q(a, b, c, z, n).  Immutable."""

    __slots__ = ("_n", "_d", "_hash")

    def __init__(self, value=0, den=None):
        n, d = self._parts(value)
        if den is not None:
            n2, d2 = self._parts(den)
            n, d = n * d2, d * n2
        self._n, self._d = _canon(n, d)
        self._hash = None

    @staticmethod
    def _parts(value):
        if isinstance(value, RatFunc):
            return value._n, value._d
        if isinstance(value, MPoly):
            p, scale = _zpoly_from_fractions(value.terms())
            return p, _ZCTX.constant(scale)
        if isinstance(value, (int, Fraction, Rational, flint.fmpq, flint.fmpz)):
            q = _to_fraction(value)
            return _ZCTX.constant(q.numerator), _ZCTX.constant(q.denominator)
        raise TypeError(f"cannot convert {type(value).__name__} to RatFunc")

    @classmethod
    def _raw(cls, n, d) -> RatFunc:
        obj = cls.__new__(cls)
        obj._n, obj._d, obj._hash = n, d, None
        return obj

    @classmethod
    def _make(cls, n, d) -> RatFunc:
        return cls._raw(*_canon(n, d))

    @classmethod
    def var(cls, name: str) -> RatFunc:
        return cls._raw(_ZGENS[var_index(name)], _ZONE)

    # -- structure -------------------------------------------------------

    @property
    def num(self) -> MPoly:
        return MPoly._from_z(self._n)

    @property
    def den(self) -> MPoly:
        return MPoly._from_z(self._d)

    def is_zero(self) -> bool:
        return self._n.is_zero()

    def is_one(self) -> bool:
        return self._n.is_one() and self._d.is_one()

    def is_polynomial(self) -> bool:
        return self._d.is_one()

    def __bool__(self):
        return not self._n.is_zero()

    def variables(self) -> set:
        used = [x or y for x, y in zip(self._n.degrees(), self._d.degrees())]
        return {v for v, u in zip(VARS, used) if u > 0}

    def degree(self, v: str) -> tuple:
        """(numerator degree, denominator degree) in ``v``."""
        i = var_index(v)
        dn = int(self._n.degrees()[i]) if not self._n.is_zero() else -1
        return dn, int(self._d.degrees()[i])

    # -- arithmetic ------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction, MPoly, Rational)):
            return RatFunc(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o._n.is_zero():
            return self
        if self._n.is_zero():
            return o
        d1, d2 = self._d, o._d
        if d1 == d2:
            return RatFunc._make(self._n + o._n, d1)
        g = d1.gcd(d2)
        if g.is_one():
            return RatFunc._raw(self._n * d2 + o._n * d1, d1 * d2)
        d1g, d2g = d1 / g, d2 / g
        t = self._n * d2g + o._n * d1g
        if t.is_zero():
            return RatFunc._raw(_ZZERO, _ZONE)
        g2 = t.gcd(g)
        if not g2.is_one():
            t = t / g2
            g = g / g2
        n, d = t, d1g * d2g * g
        if d.leading_coefficient() < 0:
            n, d = -n, -d
        return RatFunc._raw(n, d)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self._n, self._d)

    def __sub__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self._n.is_zero() or o._n.is_zero():
            return RatFunc._raw(_ZZERO, _ZONE)
        n1, d1, n2, d2 = self._n, self._d, o._n, o._d
        g1 = n1.gcd(d2)
        if not g1.is_one():
            n1, d2 = n1 / g1, d2 / g1
        g2 = n2.gcd(d1)
        if not g2.is_one():
            n2, d1 = n2 / g2, d1 / g2
        n, d = n1 * n2, d1 * d2
        if d.leading_coefficient() < 0:
            n, d = -n, -d
        return RatFunc._raw(n, d)

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if self._n.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        n, d = self._d, self._n
        if d.leading_coefficient() < 0:
            n, d = -n, -d
        return RatFunc._raw(n, d)

    def __truediv__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o if o is NotImplemented else o * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            raise TypeError("only integer powers are supported")
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc._raw(self._n**e, self._d**e)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._n == o._n and self._d == o._d

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((tuple(self._n.to_dict().items()), tuple(self._d.to_dict().items())))
        return self._hash

    # -- substitution ----------------------------------------------------

    def shift(self, v: str, offset: int) -> RatFunc:
        """Substitute ``v -> v + offset``."""
        if not offset:
            return self
        return self._shift_by({var_index(v): offset})

    def shift_abc(self, k: int, l: int, m: int) -> RatFunc:
        """Apply ``S_a^k S_b^l S_c^m``."""
        if not (k or l or m):
            return self
        return self._shift_by({0: k, 1: l, 2: m})

    def _shift_by(self, offsets):
        if self._n.is_constant() and self._d.is_constant():
            return self
        images = _shift_images(offsets)
        # a translation maps the lex-leading monomial to itself, so the
        # canonical form survives without a GCD
        n = self._n.compose(*images) if not self._n.is_constant() else self._n
        d = self._d.compose(*images) if not self._d.is_constant() else self._d
        return RatFunc._raw(n, d)

    def subs(self, mapping: Mapping[str, RatFunc | int | Fraction]) -> RatFunc:
        """Simultaneous substitution of variables by rational functions."""
        images = [RatFunc(mapping[v]) if v in mapping else RatFunc.var(v) for v in VARS]
        if all(im._d.is_one() for im in images):
            zim = [im._n for im in images]
            return RatFunc._make(self._n.compose(*zim), self._d.compose(*zim))
        return _subs_slow(self._n, images) / _subs_slow(self._d, images)

    def specialize(self, assignment: Mapping) -> RatFunc:
        """Partially evaluate at rational values; raises :class:`PoleError`."""
        vals = _assignment(assignment)
        num = _eval_terms(self._n, vals)
        den = _eval_terms(self._d, vals)
        if not den:
            raise PoleError(
                f"denominator {MPoly._from_z(self._d)} vanishes at {dict(assignment)}",
                denominator=MPoly._from_z(self._d),
            )
        scale = 1
        for q in list(num.values()) + list(den.values()):
            scale = lcm(scale, q.denominator)
        n = _ZCTX.from_dict({m: int(q * scale) for m, q in num.items()}) if num else _ZZERO
        d = _ZCTX.from_dict({m: int(q * scale) for m, q in den.items()})
        return RatFunc._make(n, d)

    def eval_at(self, assignment: Mapping) -> Fraction:
        r = self.specialize(assignment)
        if not (r._n.is_constant() and r._d.is_constant()):
            missing = sorted(r.variables(), key=var_index)
            raise ValueError(f"unassigned variables {missing}")
        return Fraction(int(r._n.leading_coefficient()) if not r._n.is_zero() else 0,
                        int(r._d.leading_coefficient()))

    def __str__(self):
        from .exprio import print_expr

        return print_expr(self)

    def __repr__(self):
        return f"RatFunc({str(self)!r})"


def _subs_slow(p, images):
    acc = RatFunc(0)
    for mono, coeff in p.terms():
        t = RatFunc(int(coeff))
        for im, e in zip(images, mono):
            if e:
                t = t * im ** int(e)
        acc = acc + t
    return acc


def var(name: str) -> RatFunc:
    return RatFunc.var(name)


def const(value) -> RatFunc:
    return RatFunc(value)


def add(x: RatFunc, y: RatFunc) -> RatFunc:
    return x + y


def sub(x: RatFunc, y: RatFunc) -> RatFunc:
    return x - y


def mul(x: RatFunc, y: RatFunc) -> RatFunc:
    return x * y


def div(x: RatFunc, y: RatFunc) -> RatFunc:
    return x / y


def neg(x: RatFunc) -> RatFunc:
    return -x


def shift(x: RatFunc, v: str, offset: int) -> RatFunc:
    return RatFunc(x).shift(v, offset)


def shift_abc(x: RatFunc, k: int, l: int, m: int) -> RatFunc:
    return RatFunc(x).shift_abc(k, l, m)


def pochhammer(base, k: int) -> RatFunc:
    """``(base)_k = Gamma(base + k) / Gamma(base)`` for any integer ``k``.

    For ``k < 0`` this is ``1 / ((base + k)(base + k + 1)...(base - 1))``.
    """
    base = RatFunc(base)
    acc = RatFunc(1)
    if k >= 0:
        for j in range(k):
            acc = acc * (base + j)
        return acc
    for j in range(k, 0):
        acc = acc * (base + j)
    return acc.inverse()


def eval_at(x: RatFunc, assignment: Mapping) -> Fraction:
    return RatFunc(x).eval_at(assignment)


def denominator_lcm(values) -> RatFunc:
    """Least common multiple of the denominators, as a polynomial RatFunc."""
    acc = _ZONE
    for x in values:
        d = RatFunc(x)._d
        if d.is_one():
            continue
        acc = acc * (d / acc.gcd(d))
    return RatFunc._raw(acc, _ZONE)


def polynomial_gcd(values) -> RatFunc:
    """GCD of polynomial RatFuncs (integer content included); ``gcd() = 0``."""
    acc = _ZZERO
    for x in values:
        x = RatFunc(x)
        if not x.is_polynomial():
            raise ValueError(f"{x} is not a polynomial")
        acc = x._n if acc.is_zero() else acc.gcd(x._n)
        if acc.is_one():
            break
    if not acc.is_zero() and acc.leading_coefficient() < 0:
        acc = -acc
    return RatFunc._raw(acc, _ZONE)


def leading_coefficient(x: RatFunc) -> Fraction:
    """Lex-leading coefficient of the numerator (the sign carrier)."""
    x = RatFunc(x)
    if x._n.is_zero():
        return Fraction(0)
    return Fraction(int(x._n.leading_coefficient()), int(x._d.leading_coefficient()))
