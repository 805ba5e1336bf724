from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gmtilde.polycore import (
    NonHomogeneousError,
    ParseError,
    PolynomialError,
    PolyRing,
    derivative,
    evaluate,
    is_homogeneous,
    matrix_rank,
    parse_rational,
    substitute,
    weighted_degree,
)
from strategies import homogeneous_polynomials, polynomials, rings


def test_weighted_degree_examples():
    R = PolyRing([("x", 1), ("y", -1)])
    assert weighted_degree(R("x*y")) == 0
    S = PolyRing([("x", 3)])
    assert weighted_degree(S("x^2")) == 6
    T = PolyRing([("x", 1), ("y", 2)])
    with pytest.raises(NonHomogeneousError) as info:
        weighted_degree(T("x + y"))
    assert sorted(str(w) for w in info.value.witnesses) == ["x", "y"]
    assert weighted_degree(T.zero) is None


def test_substitute_examples():
    R = PolyRing(["x", "y"])
    S = PolyRing(["s"])
    s = S.gen("s")
    assert substitute(R("x^2 - y"), {"x": s, "y": s ** 2}) == S.zero
    U = PolyRing(["t", "a", "b"])
    t, a, b = U.gens
    assert substitute(R("x*y"), {"x": a, "y": t * b}) == t * a * b
    X = PolyRing(["x"])
    x = X.gen("x")
    once = substitute(x, {"x": x + 1})
    assert substitute(once, {"x": x + 1}) == x + 2


def test_substitute_missing_variable_is_named():
    R = PolyRing(["x", "y"])
    with pytest.raises(PolynomialError, match="'y'"):
        substitute(R("x"), {"x": R("x")})


def test_evaluate_examples():
    R = PolyRing(["x", "y"])
    assert evaluate(R("x^2 + y"), {"x": 2, "y": 3}) == 7
    assert evaluate(R("5"), {"x": 9, "y": -1}) == 5
    assert evaluate(R("x*y - 1"), {"x": Fraction(1, 2), "y": 2}) == 0


def test_printing_format():
    R = PolyRing(["x", "y"], "grevlex")
    p = R("3 + x^2*y - y/2")
    assert str(p) == "x^2*y - 1/2*y + 3"
    assert str(R.zero) == "0"
    assert str(R("-x")) == "-x"
    assert str(R("(x+y)^2")) == "x^2 + 2*x*y + y^2"


def test_terms_iterate_in_descending_order():
    for order in ("lex", "grevlex", ("block", 1)):
        R = PolyRing(["x", "y", "z"], order)
        p = R("x + y^3 + z^2*x + 1 + y*z")
        keys = [R.key(e) for e, _ in p.terms()]
        assert keys == sorted(keys, reverse=True)


def test_lex_and_grevlex_leading_terms():
    lex = PolyRing(["x", "y", "z"], "lex")
    grev = PolyRing(["x", "y", "z"], "grevlex")
    assert lex("x + y^5").leading_exponent == (1, 0, 0)
    assert grev("x + y^5").leading_exponent == (0, 5, 0)
    # grevlex tie at degree 2: x*z < y^2
    assert grev("x*z + y^2").leading_exponent == (0, 2, 0)


def test_parse_errors_report_position():
    R = PolyRing(["x", "y"])
    with pytest.raises(ParseError) as info:
        R.parse("x + * y")
    assert (info.value.line, info.value.column) == (1, 5)
    with pytest.raises(ParseError) as info:
        R.parse("x*y +\n 2*q")
    assert (info.value.line, info.value.column) == (2, 4)
    with pytest.raises(ParseError):
        R.parse("1.5*x")
    with pytest.raises(ParseError):
        R.parse("x^-1")


def test_parse_rational_rejects_floats():
    assert parse_rational("-2/6") == Fraction(-1, 3)
    assert parse_rational("7") == 7
    for bad in ("0.5", "1e3", "1/0x", ""):
        with pytest.raises(PolynomialError):
            parse_rational(bad)


def test_ring_validation():
    with pytest.raises(PolynomialError):
        PolyRing(["x", "x"])
    with pytest.raises(PolynomialError):
        PolyRing(["x"], ("block", 3))


def test_matrix_rank_small():
    assert matrix_rank([[1, 2], [2, 4]]) == 1
    assert matrix_rank([[0, 0], [0, 0]]) == 0
    assert matrix_rank([[1, 0, 1], [0, 1, 1], [1, 1, 2]]) == 2
    assert matrix_rank([]) == 0


def test_derivative():
    R = PolyRing(["x", "y"])
    assert derivative(R("x^3*y + y"), "x") == R("3*x^2*y")


# -- properties --------------------------------------------------------------


@st.composite
def ring_and_three(draw):
    R = draw(rings())
    return R, draw(polynomials(R)), draw(polynomials(R)), draw(polynomials(R))


@given(ring_and_three())
def test_ring_axioms(data):
    R, a, b, c = data
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a - a == R.zero
    assert a * R.one == a


@given(ring_and_three())
def test_parse_print_round_trip(data):
    R, a, _, _ = data
    assert R.parse(str(a)) == a


@st.composite
def homogeneous_pair(draw):
    R = draw(rings())
    return draw(homogeneous_polynomials(R)), draw(homogeneous_polynomials(R))


@given(homogeneous_pair())
def test_weighted_degree_is_additive(pair):
    p, q = pair
    assert is_homogeneous(p * q)
    assert weighted_degree(p * q) == weighted_degree(p) + weighted_degree(q)


@given(ring_and_three(), st.data())
def test_substitute_respects_products(data, draw):
    R, p, q, _ = data
    S = PolyRing(["s", "t"])
    images = {n: draw.draw(polynomials(S, max_degree=2, max_terms=3)) for n in R.names}
    assert substitute(p * q, images) == substitute(p, images) * substitute(q, images)
    assert substitute(p + q, images) == substitute(p, images) + substitute(q, images)
