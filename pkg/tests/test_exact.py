from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from weighted_hurwitz.exact import (
    ONE,
    ZERO,
    MultiPoly,
    RationalFunction,
    TruncatedSeries,
    exp_laurent,
    parse_rational_function as R,
    rf_arith,
    series_expand,
)


def test_canonical_strings():
    assert str(R("1/(2*(1-q))")) == "1/(2-2*q)"
    assert str(R("(1+2*q)/(3*(1-q)*(1-q^2))")) == "(1+2*q)/(3-3*q-3*q^2+3*q^3)"
    assert str(R("-q/(-2*p)")) == "q/(2*p)"
    assert str(R("1/(q*p)")) == "1/(q*p)"
    assert str(R("(z/2+u/3)")) == "(3*z+2*u)/6"


def test_rf_arith_examples():
    assert rf_arith(R("1/(1-q)"), R("q/(1-q)"), "add") == R("(1+q)/(1-q)")
    x = R("(q+p^2)/(1-z*u)")
    assert rf_arith(x, x, "sub") == ZERO
    assert R("(1-q^2)/(1-q)") == R("1+q")
    assert str(R("(1-q^2)/(1-q)")) == "1+q"


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        rf_arith(ONE, ZERO, "div")
    with pytest.raises(ZeroDivisionError):
        R("1/(q-q)")


def test_parse_errors():
    for bad in ("1/(1-x)", "1+", "(q", "q^p"):
        with pytest.raises(ValueError):
            R(bad)


def test_series_expand_examples():
    s = series_expand(R("1/(1-q)"), "q", 3)
    assert s.coefficients == (ONE, ONE, ONE, ONE)
    # sympy oracle: 1/3 + q + 4*q**2/3
    s = series_expand(R("(1+2*q)/(3*(1-q)*(1-q^2))"), "q", 2)
    assert s.coefficients == (R("1/3"), ONE, R("4/3"))
    assert all(c.is_zero() for c in series_expand(ZERO, "q", 4).coefficients)


def test_series_expand_pole():
    with pytest.raises(ValueError):
        series_expand(R("1/q"), "q", 3)
    with pytest.raises(ValueError):
        series_expand(R("1/(q-q*p)"), "q", 3)


def test_series_with_parameter_coefficients():
    s = series_expand(R("1/(1-q*p)"), "q", 2)
    assert s[2] == R("p^2")


def test_subs():
    assert R("q/(1-q)").subs("q", R("p^2")) == R("p^2/(1-p^2)")
    assert R("q/(1-q)").subs("q", R("1/2")) == 1
    assert R("q+z").subs("z", R("1/(1-q)")) == R("(q-q^2+1)/(1-q)")


def test_exp_laurent():
    # 1/(2(1-e^-eps)) = 1/(2 eps) + 1/4 + eps/24 + ...
    L = exp_laurent(R("1/(2*(1-q))"), "q", 3)
    assert L.order == -1
    assert [c.constant_value() for c in L.coefficients] == [Fraction(1, 2), Fraction(1, 4), Fraction(1, 24)]


def test_multipoly_custom_generators():
    gens = ("x1", "y1")
    x, y = MultiPoly.gen("x1", gens), MultiPoly.gen("y1", gens)
    f = (1 + x * y) ** 3
    assert f.total_degree() == 6
    assert f.truncate(2, ["x1"]) == 1 + 3 * x * y + 3 * x * x * y * y


def test_truncated_series_inverse():
    s = series_expand(R("1-q"), "q", 5)
    assert s.inverse() == series_expand(R("1/(1-q)"), "q", 5)
    with pytest.raises(ZeroDivisionError):
        series_expand(R("q"), "q", 3).inverse()


# randomized algebraic laws

VARS = ("q", "p", "z", "u")


@st.composite
def polys(draw, max_terms=3):
    terms = draw(st.lists(
        st.tuples(st.tuples(*(st.integers(0, 2) for _ in VARS)), st.integers(-4, 4)),
        min_size=0, max_size=max_terms,
    ))
    return MultiPoly({e: c for e, c in terms if c})


@st.composite
def rfs(draw):
    num = draw(polys())
    den = draw(polys())
    if den.is_zero():
        den = MultiPoly(1)
    return RationalFunction(num, den)


@settings(max_examples=60, deadline=None)
@given(rfs(), rfs(), rfs())
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    assert a - a == ZERO


@settings(max_examples=60, deadline=None)
@given(rfs())
def test_canonical_idempotent(a):
    again = RationalFunction(a.num, a.den)
    assert again == a
    assert str(again) == str(a)
    assert R(str(a)) == a
    if not a.is_zero():
        assert a / a == ONE


@st.composite
def q_rfs(draw):
    num = [draw(st.integers(-3, 3)) for _ in range(3)]
    den = [1] + [draw(st.integers(-3, 3)) for _ in range(2)]
    qv = R("q")
    return (sum((c * qv ** i for i, c in enumerate(num)), ZERO)
            / sum((c * qv ** i for i, c in enumerate(den)), ZERO))


@settings(max_examples=40, deadline=None)
@given(q_rfs(), q_rfs())
def test_series_multiplicative(a, b):
    D = 6
    assert series_expand(a * b, "q", D) == series_expand(a, "q", D) * series_expand(b, "q", D)
    assert series_expand(a + b, "q", D) == series_expand(a, "q", D) + series_expand(b, "q", D)


def test_truncated_series_string():
    s = TruncatedSeries("q", 2, [ONE, R("1/2")])
    assert str(s) == "1 + (1/2)*q + O(q^3)"
