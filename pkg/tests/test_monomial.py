import pytest
from hypothesis import given, strategies as st

from econres.monomial import (ONE, Monomial, divides, format_monomial, parse_monomial, weight_of)
from econres.quotienttype import GroupType

exps = st.integers(min_value=-15, max_value=15)
monomials = st.builds(Monomial, exps, exps, exps)


@given(monomials)
def test_format_parse_round_trip(m):
    assert parse_monomial(format_monomial(m)) == m


@given(monomials, monomials)
def test_weight_is_a_homomorphism(m, n):
    g = GroupType(12, 7)
    assert weight_of(g, m * n) == (weight_of(g, m) + weight_of(g, n)) % 12
    assert weight_of(g, m / m) == 0


@pytest.mark.parametrize("text,expected", [
    ("1", (0, 0, 0)), ("xz^5/y^2", (1, -2, 5)), ("y/x^2z", (-2, 1, -1)),
    ("z^{12}", (0, 0, 12)), ("[1,-1,0]", (1, -1, 0)), ("x*y", (1, 1, 0)),
])
def test_parse(text, expected):
    assert parse_monomial(text) == expected


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_monomial("xw")


def test_invariants_of_examples():
    g = GroupType(7, 3)
    for s in ("y^5/z^2", "z^3/y^4", "xy/z", "x^7"):
        assert weight_of(g, parse_monomial(s)) == 0
    assert weight_of(g, parse_monomial("z/y")) == 1


def test_divides():
    assert divides(ONE, Monomial(1, 0, 2))
    assert not divides(Monomial(0, 1, 0), Monomial(1, 0, 0))
    assert format_monomial(Monomial(0, 0, 0)) == "1"
    assert str(Monomial(-1, 0, 2)) == "z^2/x"
