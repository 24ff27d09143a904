import random
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from econres.monomial import Monomial, weight_of
from econres.quotienttype import GroupType, Side, child, pushforward_character
from econres.rounddown import fiber, round_down

SIDES = (Side.LEFT, Side.RIGHT, Side.CENTRAL)


def coprime_types(rmax):
    return [(r, a) for r in range(2, rmax + 1) for a in range(1, r) if gcd(r, a) == 1]


def test_examples():
    g = GroupType(7, 3)
    assert set(fiber(g, Side.LEFT, (0, 0, 1))) == {Monomial(0, 0, 1), Monomial(0, -1, 1)}
    assert fiber(g, Side.LEFT, (0, 0, 0)) == [Monomial(0, 0, 0), Monomial(0, 1, 0), Monomial(0, 2, 0)]
    assert round_down(GroupType(12, 7), Side.RIGHT, (0, 1, 0)) == (0, 1, 0)
    assert round_down(g, Side.LEFT, (0, -2, 2)) == (0, 0, 2)
    with pytest.raises(ValueError):
        round_down(GroupType(1, 0), Side.LEFT, (1, 0, 0))


exps = st.integers(min_value=-12, max_value=12)
monomials = st.builds(Monomial, exps, exps, exps)
types = st.sampled_from(coprime_types(12))


@settings(max_examples=300, deadline=None)
@given(types, st.sampled_from(SIDES), monomials)
def test_equivariance(ra, side, m):
    g = GroupType(*ra)
    assert weight_of(child(g, side), round_down(g, side, m)) == pushforward_character(g, side, weight_of(g, m))


@settings(max_examples=300, deadline=None)
@given(types, st.sampled_from(SIDES), monomials, monomials)
def test_fibres_are_intervals_and_comparable(ra, side, m, n):
    g = GroupType(*ra)
    f = fiber(g, side, round_down(g, side, m))
    assert m in f
    # consecutive elements differ by the free variable, so any two are comparable
    slot = {Side.CENTRAL: 0, Side.LEFT: 1, Side.RIGHT: 2}[side]
    for p, q in zip(f, f[1:]):
        d = q / p
        assert d == Monomial(*(int(k == slot) for k in range(3)))
    # collapse: the fibre never grows past the order of the group
    assert 1 <= len(f) <= g.r


@settings(max_examples=200, deadline=None)
@given(types, st.sampled_from((Side.LEFT, Side.RIGHT)), monomials)
def test_lifting_of_multiplication(ra, side, m):
    # round down is monotone under multiplication by generators in the fixed slots
    g = GroupType(*ra)
    slot = {Side.LEFT: 1, Side.RIGHT: 2}[side]
    for k in range(3):
        if k == slot:
            continue
        e = Monomial(*(int(i == k) for i in range(3)))
        lhs, rhs = round_down(g, side, m * e), round_down(g, side, m)
        assert (lhs / rhs).is_genuine


@pytest.mark.parametrize("r,a", coprime_types(12))
def test_fiber_matches_exhaustive_scan(r, a):
    g = GroupType(r, a)
    rng = random.Random(1000 * r + a)
    for side in SIDES:
        for _ in range(20):
            t = Monomial(*(rng.randint(-4, 4) for _ in range(3)))
            slot = {Side.CENTRAL: 0, Side.LEFT: 1, Side.RIGHT: 2}[side]
            # |c e| <= r (|t_slot| + 1) + |rest| with c >= 1 and every weight below r
            bound = r * (abs(t[slot]) + 1) + r * sum(abs(v) for v in t) + 1
            scan = []
            for e in range(-bound, bound + 1):
                m = list(t)
                m[slot] = e
                if round_down(g, side, m) == t:
                    scan.append(Monomial(*m))
            assert fiber(g, side, t) == scan
