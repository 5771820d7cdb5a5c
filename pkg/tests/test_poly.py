import pytest
from hypothesis import given, strategies as st

from tanglekh.poly import BigradingMultiset, LaurentPoly, parse_poly

terms = st.dictionaries(st.tuples(st.integers(-4, 4), st.integers(-8, 8)), st.integers(-3, 3), max_size=5)


def test_parse_table_notation():
    p = parse_poly("x^{-3}y^{-9}+x^{-2}y^{-5}+y^{-3}+y^{-1}")
    assert p == LaurentPoly({(-3, -9): 1, (-2, -5): 1, (0, -3): 1, (0, -1): 1})
    assert parse_poly("y^{-1} + 3 x + 3 x^2 y + x^3 y^2").coeff(1, 0) == 3
    assert parse_poly("1 - y") == LaurentPoly({(0, 0): 1, (0, 1): -1})


def test_print_order_is_i_then_j():
    assert str(parse_poly("y+y^{-1}")) == "y^-1 + y"
    assert str(parse_poly("y^{-1}+x^{-3}y^{-9}+y^{-3}+x^{-2}y^{-5}")) == "x^-3y^-9 + x^-2y^-5 + y^-3 + y^-1"
    assert str(parse_poly("1-y")) == "1 - y"
    assert str(LaurentPoly()) == "0"


def test_malformed_poly():
    with pytest.raises(ValueError):
        parse_poly("x^^2")


def test_substitute_and_evaluate():
    p = parse_poly("x^{-3}y^{-9}+x^{-2}y^{-5}+y^{-3}+y^{-1}")
    assert p.substitute_x(-1) == parse_poly("-y^{-9}+y^{-5}+y^{-3}+y^{-1}")
    assert parse_poly("1+xy").substitute_x(-1) == parse_poly("1-y")
    assert p.evaluate(1, 1) == 4


def test_negative_power_of_monomial():
    assert LaurentPoly.monomial(1, 2) ** -2 == LaurentPoly.monomial(-2, -4)
    with pytest.raises(ValueError):
        parse_poly("1+x") ** -1


@given(terms, terms, terms)
def test_ring_laws(a, b, c):
    a, b, c = LaurentPoly(a), LaurentPoly(b), LaurentPoly(c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == LaurentPoly()


@given(terms)
def test_string_round_trip(a):
    p = LaurentPoly(a)
    assert parse_poly(str(p)) == p
    assert LaurentPoly.from_json(p.to_json()) == p


def test_multiset_convolution():
    m = BigradingMultiset.of((0, 0), (1, 1)) * BigradingMultiset.of((-1, -3), (0, -2))
    assert m == BigradingMultiset({(-1, -3): 1, (0, -2): 2, (1, -1): 1})
    assert len(m) == 4


@given(st.dictionaries(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), st.integers(1, 3), max_size=4),
       st.dictionaries(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), st.integers(1, 3), max_size=4))
def test_multiset_matches_polynomial_product(a, b):
    ma, mb = BigradingMultiset(a), BigradingMultiset(b)
    assert (ma * mb).to_poly() == ma.to_poly() * mb.to_poly()
    assert len(ma * mb) == len(ma) * len(mb)
