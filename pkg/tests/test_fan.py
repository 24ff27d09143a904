import random
from fractions import Fraction
from math import gcd

import pytest

from econres.fan import (Cone, IntegralityViolation, NotUnimodular, central_cone, chart_coordinates,
                         discrepancy, econ_fan, in_lattice, is_unimodular, positive_orthant,
                         primitive_point, transport_point, unit, v_point)
from econres.monomial import weight_of
from econres.quotienttype import GroupType, Side

from goldens import FAN_7_3, TABLE_12_7


def coprime_types(rmax):
    return [(r, a) for r in range(2, rmax + 1) for a in range(1, r) if gcd(r, a) == 1]


def cone_set(g, triples):
    return {Cone.make(g, t) for t in triples}


def test_fan_7_3_matches_picture():
    g = GroupType(7, 3)
    fan = econ_fan(g)
    assert len(fan.maximal_cones) == 13
    assert set(fan.maximal_cones) == cone_set(g, FAN_7_3)


def test_fan_12_7_matches_table_generators():
    g = GroupType(12, 7)
    assert set(econ_fan(g).maximal_cones) == cone_set(g, [row[0] for row in TABLE_12_7])


def test_small_fans():
    assert len(econ_fan(GroupType(2, 1)).maximal_cones) == 3
    assert econ_fan(GroupType(1, 0)).maximal_cones == (positive_orthant(GroupType(1, 0)),)


@pytest.mark.parametrize("r,a", coprime_types(18))
def test_fan_invariants(r, a):
    g = GroupType(r, a)
    cones = econ_fan(g).maximal_cones
    assert len(cones) == 2 * r - 1
    assert sum(unit(g, 0) in c.rays for c in cones) == r
    assert all(is_unimodular(g, c) for c in cones)
    assert econ_fan(g).rays() == {unit(g, k) for k in range(3)} | {v_point(g, i) for i in range(1, r)}
    for i in range(1, r):
        assert discrepancy(g, [Fraction(c, r) for c in v_point(g, i)]) == Fraction(i, r)


@pytest.mark.parametrize("r,a", [(7, 3), (12, 7), (11, 2), (13, 9)])
def test_fan_covers_orthant_once(r, a):
    g = GroupType(r, a)
    cones = econ_fan(g).maximal_cones
    rng = random.Random(r * 100 + a)
    for _ in range(200):
        p = [rng.randint(1, 10 ** 6) for _ in range(3)]
        assert sum(c.contains(p) for c in cones) == 1


@pytest.mark.parametrize("r,a", coprime_types(12))
def test_chart_coordinates_are_dual_invariants(r, a):
    g = GroupType(r, a)
    for c in econ_fan(g).maximal_cones:
        coords = chart_coordinates(g, c)
        for i, m in enumerate(coords):
            assert weight_of(g, m) == 0
            assert [sum(x * y for x, y in zip(m, ray)) for ray in c.rays] == [r * (k == i) for k in range(3)]


def test_lattice_membership():
    g = GroupType(7, 3)
    assert in_lattice(g, (1, 3, 4))
    assert not in_lattice(g, (1, 2, 4))
    assert in_lattice(g, (7, 0, 0))
    assert primitive_point(g, (2, 6, 8)) == (1, 3, 4)
    assert primitive_point(g, (1, 0, 0)) == (7, 0, 0)


def test_central_cone_and_transport():
    g = GroupType(3, 2)
    assert central_cone(g) == Cone.make(g, [(1, 2, 1), (0, 3, 0), (0, 0, 3)])
    # child 1/2(1,1,1) point (1,1,1)/2 lands on v_2 = (2,1,2)/3
    assert transport_point(g, Side.LEFT, (1, 1, 1), 2) == (2, 1, 2)
    with pytest.raises(IntegralityViolation):
        transport_point(g, Side.LEFT, (1, 0, 0), 2)


def test_singular_cone_has_no_chart():
    g = GroupType(7, 3)
    with pytest.raises(NotUnimodular):
        chart_coordinates(g, positive_orthant(g))
