from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kpalgebra import GaussRat, Poly, RatFunc, generators, parse_expr
from kpalgebra.errors import ParseError, UnknownGenerator

XYZ = ["x", "y", "z"]
x, y, z = generators(3)


def p(text, names=XYZ):
    return parse_expr(text, names)


@pytest.mark.parametrize("text, expected", [
    ("2 + 3*4", RatFunc.const(3, 14)),
    ("(2 + 3)*4", RatFunc.const(3, 20)),
    ("2*3^2", RatFunc.const(3, 18)),
    ("-x^2", -(x * x)),
    ("x - y - z", x - y - z),
    ("x / y / z", x / (y * z)),
    ("3/4", RatFunc.const(3, Fraction(3, 4))),
    ("x**3", x ** 3),
    ("x^-2", RatFunc.one(3) / (x * x)),
    ("x^(-1)", RatFunc.one(3) / x),
    ("(1 + 2*i)*x", GaussRat(1, 2) * x),
    ("  x^2+y^2 +z^2-1 ", x * x + y * y + z * z - 1),
    ("--x", x),
])
def test_precedence_and_literals(text, expected):
    assert p(text).equals(expected)


def test_i_may_be_a_generator():
    f = parse_expr("i*j", ["i", "j"])
    assert f.equals(RatFunc.gen(2, 0) * RatFunc.gen(2, 1))
    assert f.is_real()


def test_unknown_generator_position():
    with pytest.raises(UnknownGenerator) as info:
        p("x + w")
    assert info.value.column == 5


@pytest.mark.parametrize("text, column", [
    ("x +", 4),
    ("2 x", 3),          # no implicit multiplication
    ("x ^ y", 5),
    ("x^2^3", 4),
    ("(x + y", 7),
    ("x $ y", 3),
    ("", 1),
])
def test_syntax_errors_carry_column(text, column):
    with pytest.raises(ParseError) as info:
        p(text)
    assert info.value.column == column


def test_division_by_zero_literal():
    with pytest.raises(ParseError):
        p("x / (y - y)")


def test_zero_negative_power():
    with pytest.raises(ParseError):
        p("(x - x)^-1")


small = st.integers(-4, 4)
exps = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
coeffs = st.one_of(st.fractions(min_value=-5, max_value=5, max_denominator=7),
                   st.builds(GaussRat, small, st.integers(-2, 2)))


@st.composite
def ratfuncs(draw):
    num = Poly(3, draw(st.dictionaries(exps, coeffs, max_size=4)))
    den = Poly(3, draw(st.dictionaries(exps, coeffs, min_size=1, max_size=3)))
    if den.is_zero():
        den = Poly.const(3, 1)
    return RatFunc(num, den)


@given(ratfuncs())
def test_print_parse_round_trip(f):
    text = str(f)
    g = p(text)
    assert g.equals(f)
    assert str(g) == text
