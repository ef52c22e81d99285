"""Text and JSON forms of rational functions and relations.

Grammar (whitespace is ignored)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('-' | '+') unary | power
    power  := atom ('^' INTEGER)?
    atom   := INTEGER | 'a' | 'b' | 'c' | 'z' | 'n' | '(' expr ')'

``-`` and ``/`` associate to the left, ``-a^2`` means ``-(a^2)`` and
exponents are non-negative integer literals; ``a^2^3`` is rejected rather
than guessed.

Printed form (frozen, golden files depend on it): numerator and denominator
are expanded with integer coefficients, terms in lex order ``a > b > c > z
> n`` with the leading term first.  A polynomial prints bare (``a*z - a``);
anything else prints as ``(num)/(den)``, e.g. ``(-a + b)/(b)``.  The
denominator always has a positive leading coefficient and the integer
content of numerator and denominator together is 1.
"""

from __future__ import annotations

import json
import re

from .errors import ParseError, UnknownIdentifierError
from .ratfield import VARS, RatFunc

_DIGITS = frozenset("0123456789")
_IDENT = frozenset("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_")


def _tokenize(text: str):
    tokens = []
    pos, size = 0, len(text)
    while pos < size:
        ch = text[pos]
        if ch.isspace():
            pos += 1
        elif ch in _DIGITS:
            end = pos
            while end < size and text[end] in _DIGITS:
                end += 1
            tokens.append(("int", int(text[pos:end]), pos))
            pos = end
        elif ch in _IDENT:
            end = pos
            while end < size and (text[end] in _IDENT or text[end] in _DIGITS):
                end += 1
            name = text[pos:end]
            if name not in VARS:
                raise UnknownIdentifierError(f"unknown identifier {name!r}", pos, text)
            tokens.append(("var", name, pos))
            pos = end
        elif ch in "+-*/^()":
            tokens.append((ch, ch, pos))
            pos += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", pos, text)
    tokens.append(("end", None, size))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, tok[2], self.text)

    def parse(self) -> RatFunc:
        if self.peek()[0] == "end":
            raise self.error("empty expression")
        value = self.expr()
        if self.peek()[0] != "end":
            raise self.error(f"unexpected {self.peek()[1]!r}")
        return value

    def expr(self):
        acc = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.unary()
        while self.peek()[0] in ("*", "/"):
            op = self.take()
            rhs = self.unary()
            if op[0] == "*":
                acc = acc * rhs
            else:
                if rhs.is_zero():
                    raise self.error("division by zero", op)
                acc = acc / rhs
        return acc

    def unary(self):
        if self.peek()[0] in ("-", "+"):
            op = self.take()[0]
            val = self.unary()
            return -val if op == "-" else val
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "int":
                raise self.error("exponent must be a non-negative integer literal", tok)
            if self.peek()[0] == "^":
                raise self.error("chained exponents are ambiguous; use parentheses")
            return base ** tok[1]
        return base

    def atom(self):
        tok = self.take()
        kind = tok[0]
        if kind == "int":
            return RatFunc(tok[1])
        if kind == "var":
            return RatFunc.var(tok[1])
        if kind == "(":
            val = self.expr()
            if self.peek()[0] != ")":
                raise self.error("expected ')'")
            self.take()
            return val
        if kind == "end":
            raise self.error("unexpected end of input", tok)
        raise self.error(f"unexpected {tok[1]!r}", tok)


def parse_expr(text: str) -> RatFunc:
    """Parse ``text`` into a canonical :class:`RatFunc`."""
    return _Parser(text).parse()


def _monomial(mono) -> str:
    parts = []
    for v, e in zip(VARS, mono):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def _print_zpoly(p) -> str:
    if p.is_zero():
        return "0"
    out = []
    for mono, coeff in p.terms():
        coeff = int(coeff)
        mag = abs(coeff)
        body = _monomial(mono)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        if not out:
            out.append(("-" if coeff < 0 else "") + text)
        else:
            out.append((" - " if coeff < 0 else " + ") + text)
    return "".join(out)


def print_expr(x: RatFunc) -> str:
    x = RatFunc(x)
    num = _print_zpoly(x._n)
    if x._d.is_one():
        return num
    return f"({num})/({_print_zpoly(x._d)})"


# -- JSON ---------------------------------------------------------------


def relation_to_dict(r) -> dict:
    return {
        "terms": [
            {"shift": [int(s[0]), int(s[1]), int(s[2])], "coeff": print_expr(c)}
            for s, c in r.terms
            if not c.is_zero()
        ]
    }


def relation_to_json(r) -> str:
    return json.dumps(relation_to_dict(r))


def relation_from_json(text: str):
    from .gauss_core import ContigRelation, ShiftVector

    try:
        data = json.loads(text)
        terms = [(ShiftVector(*t["shift"]), parse_expr(t["coeff"])) for t in data["terms"]]
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise ParseError(f"malformed relation JSON: {exc}") from exc
    return ContigRelation(tuple(terms))


def pq_to_dict(p) -> dict:
    return {"shift": [int(v) for v in p.shift], "P": print_expr(p.p), "Q": print_expr(p.q)}


def pq_to_json(p) -> str:
    return json.dumps(pq_to_dict(p))


def pq_from_json(text: str):
    from .gauss_core import ShiftVector
    from .pq_engine import PQPair

    try:
        data = json.loads(text)
        return PQPair(ShiftVector(*data["shift"]), parse_expr(data["P"]), parse_expr(data["Q"]))
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise ParseError(f"malformed PQ JSON: {exc}") from exc


# -- LaTeX (best effort, not part of any golden file) --------------------

_POW = re.compile(r"\^(\d+)")


def _latex_poly(s: str) -> str:
    return _POW.sub(r"^{\1}", s).replace("*", " ")


def latex_expr(x: RatFunc) -> str:
    x = RatFunc(x)
    num = _latex_poly(_print_zpoly(x._n))
    if x._d.is_one():
        return num
    return rf"\frac{{{num}}}{{{_latex_poly(_print_zpoly(x._d))}}}"


def _latex_param(name, k):
    if k == 0:
        return name
    return f"{name}{'+' if k > 0 else '-'}{abs(k)}"


def relation_to_latex(r) -> str:
    pieces = []
    for s, c in r.terms:
        if c.is_zero():
            continue
        coeff = latex_expr(c)
        if len(c.num) > 1 or not c.is_polynomial():
            coeff = rf"\left({coeff}\right)"
        fn = (
            rf"{{}}_2F_1\left({_latex_param('a', s[0])},\,{_latex_param('b', s[1])};"
            rf"\,{_latex_param('c', s[2])};\,z\right)"
        )
        pieces.append(f"{coeff}\\,{fn}")
    out = pieces[0]
    for piece in pieces[1:]:
        out += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
    return out + " = 0"
