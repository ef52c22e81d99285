import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercontig.errors import InvalidRecurrenceError
from hypercontig.exprio import parse_expr
from hypercontig.ratfield import RatFunc
from hypercontig.recurrence_classes import (
    Recurrence,
    builtin,
    class_function,
    confluent_demo,
    normalize_z,
    same_class,
)


def test_unit_case():
    r = Recurrence.parse("1", "-1", "c*n + z")
    assert normalize_z(r) == parse_expr("c*n + z")


def test_0f1_up_class_function():
    assert class_function(builtin("0f1-up")).value == parse_expr("-(n+c-1)*(n+c-2)/z")
    assert normalize_z(builtin("0f1-up")) == parse_expr("-z/((c+n-1)*(c+n-2))")


def test_0f1_down_same_polynomial():
    assert class_function(builtin("0f1-down")).value == parse_expr("-(n+c-1)*(n+c-2)/z")
    assert same_class(builtin("0f1-up"), builtin("0f1-down"))


def test_shifted_family_differs():
    shifted = Recurrence.parse("-z/((c+1+n)*(c+n))", "-1", "1")
    assert not same_class(builtin("0f1-up"), shifted)
    assert same_class(shifted, shifted)


def test_zero_coefficient_rejected():
    with pytest.raises(InvalidRecurrenceError):
        Recurrence.parse("1", "0", "1")
    with pytest.raises(InvalidRecurrenceError):
        Recurrence.parse("n - n", "1", "1")


def test_unknown_fixture():
    with pytest.raises(KeyError):
        builtin("2f1")


_polys = st.sampled_from(["n + 1", "a*n - c", "z", "n^2 + b", "3", "c + n*z", "(n + a)/(b + 1)"])


@settings(max_examples=40, deadline=None)
@given(_polys, _polys, _polys, _polys)
def test_scaling_invariance_and_reciprocity(sa, sb, sc, sf):
    r = Recurrence.parse(sa, sb, sc)
    f = parse_expr(sf)
    assert class_function(r.scaled(f)).value == class_function(r).value
    assert normalize_z(r) * class_function(r).value == RatFunc(1)


def test_residual_on_0f1_sequence():
    # exact check of the up recurrence on truncated series at c = 1/3, z = 1/5
    from fractions import Fraction as F

    from hypercontig.series_oracle import series_pfq_exact

    c0, z0 = F(1, 3), F(1, 5)

    def value(k):
        coeffs = series_pfq_exact([], [c0 + k], 30)
        return sum(q * z0**j for j, q in enumerate(coeffs))

    r = builtin("0f1-up")
    for k in range(1, 4):
        A, B, C = (x.eval_at({"c": c0, "z": z0, "n": k}) for x in (r.A, r.B, r.C))
        assert abs(float(A * value(k + 1) + B * value(k) + C * value(k - 1))) < 1e-30


def test_confluent_demo():
    gaps = confluent_demo()
    assert len(gaps) == 6
    assert max(gaps) < 1e-10
    assert not math.isnan(sum(gaps))
