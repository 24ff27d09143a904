"""The economic resolution fan, built by recursive weighted blowups.

Lattice points of L = Z^3 + Z(1, a, r-a)/r are stored multiplied by r, so a
ray is an integer triple ``p`` standing for ``p / r``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactcore import invert_matrix3, primitive_scale
from .monomial import Monomial, weight_of
from .quotienttype import GroupType, Side, child


class IntegralityViolation(AssertionError):
    pass


class NotUnimodular(ValueError):
    pass


def in_lattice(g: GroupType, p) -> bool:
    """Whether the r-scaled point ``p`` lies in L."""
    k = p[0] % g.r
    return all((pi - k * wi) % g.r == 0 for pi, wi in zip(p, g.weights))


def primitive_point(g: GroupType, direction) -> tuple[int, int, int]:
    """r-scaled primitive point of L on the ray through ``direction``."""
    u = primitive_scale(direction)
    for j in range(1, g.r + 1):
        p = tuple(j * c for c in u)
        if in_lattice(g, p):
            return p
    raise IntegralityViolation(f"{u} has no lattice multiple in L")  # unreachable: Z^3 is in L


def unit(g: GroupType, i: int) -> tuple[int, int, int]:
    return tuple(g.r if k == i else 0 for k in range(3))


def v_point(g: GroupType, i: int) -> tuple[int, int, int]:
    """r-scaled v_i = (i, ai mod r, -ai mod r)/r."""
    return (i % g.r, (g.a * i) % g.r, (-g.a * i) % g.r)


@dataclass(frozen=True)
class Cone:
    """Simplicial 3-dimensional cone; rays are r-scaled primitive L points, sorted."""

    scale: int
    rays: tuple

    @classmethod
    def make(cls, g: GroupType, rays) -> "Cone":
        prim = sorted(primitive_point(g, p) for p in rays)
        return cls(g.r, tuple(prim))

    def ray_vectors(self) -> list[list[Fraction]]:
        return [[Fraction(c, self.scale) for c in p] for p in self.rays]

    def contains(self, point) -> bool:
        coeffs = _coefficients(self, point)
        return all(c >= 0 for c in coeffs)

    def to_json(self) -> dict:
        return {"scale": self.scale, "rays": [list(p) for p in self.rays]}


def _ray_columns(c: Cone):
    vs = c.ray_vectors()
    return [[vs[j][i] for j in range(3)] for i in range(3)]


def _coefficients(c: Cone, point):
    inv = invert_matrix3(_ray_columns(c))
    return [sum(Fraction(a) * b for a, b in zip(row, point)) for row in inv]


def positive_orthant(g: GroupType) -> Cone:
    return Cone.make(g, [unit(g, 0), unit(g, 1), unit(g, 2)])


@dataclass(frozen=True)
class EconFan:
    group: GroupType
    maximal_cones: tuple

    def rays(self) -> set:
        return {p for c in self.maximal_cones for p in c.rays}

    def to_json(self) -> dict:
        return {"r": self.group.r, "a": self.group.a,
                "maximal_cones": [c.to_json() for c in self.maximal_cones]}


def transport_matrix(g: GroupType, side: Side) -> tuple:
    """r times the matrix whose columns are the parent images of the child's e1, e2, e3."""
    v = g.weights
    cols = {
        Side.LEFT: (unit(g, 0), v, unit(g, 2)),
        Side.RIGHT: (unit(g, 0), unit(g, 1), v),
        Side.CENTRAL: (v, unit(g, 1), unit(g, 2)),
    }[side]
    return tuple(tuple(cols[j][i] for j in range(3)) for i in range(3))


def transport_point(g: GroupType, side: Side, p, child_scale: int) -> tuple[int, int, int]:
    """Parent r-scaled image of a child point stored at ``child_scale``."""
    a = transport_matrix(g, side)
    out = []
    for row in a:
        num = sum(x * y for x, y in zip(row, p))
        if num % child_scale:
            raise IntegralityViolation(f"ray {p} does not transport into L for {g}")
        out.append(num // child_scale)
    if not in_lattice(g, out):
        raise IntegralityViolation(f"transported ray {out} is not in L for {g}")
    return tuple(out)


def transport_cone(g: GroupType, side: Side, c: Cone) -> Cone:
    return Cone.make(g, [transport_point(g, side, p, c.scale) for p in c.rays])


def central_cone(g: GroupType) -> Cone:
    return Cone.make(g, [g.weights, unit(g, 1), unit(g, 2)])


@lru_cache(maxsize=None)
def econ_fan(g: GroupType) -> EconFan:
    """Maximal cones of the economic resolution of C^3 / (1/r(1,a,r-a))."""
    if g.trivial:
        return EconFan(g, (positive_orthant(g),))
    cones = []
    for side in (Side.CENTRAL, Side.LEFT, Side.RIGHT):
        sub = econ_fan(child(g, side))
        cones.extend(transport_cone(g, side, c) for c in sub.maximal_cones)
    return EconFan(g, tuple(cones))


def discrepancy(g: GroupType, v) -> Fraction:
    """Discrepancy <xyz, v> - 1 of the divisor of the (rational) lattice point ``v``."""
    return sum((Fraction(c) for c in v), Fraction(0)) - 1


def scaled_det(c: Cone) -> int:
    (a, b, cc), (d, e, f), (g_, h, i) = c.rays
    return a * (e * i - f * h) - b * (d * i - f * g_) + cc * (d * h - e * g_)


def is_unimodular(g: GroupType, c: Cone) -> bool:
    """Rays form a basis of L, i.e. |det| of the r-scaled rays is r^2."""
    return abs(scaled_det(c)) == g.r ** 2


def chart_coordinates(g: GroupType, c: Cone) -> tuple[Monomial, ...]:
    """Dual basis of sigma^vee cap M, one monomial per ray in ray order."""
    if not is_unimodular(g, c):
        raise NotUnimodular(f"cone {c.rays} is not smooth for {g}")
    inv = invert_matrix3(_ray_columns(c))
    out = []
    for row in inv:
        if any(x.denominator != 1 for x in row):
            raise IntegralityViolation(f"dual basis of {c.rays} is not integral")
        m = Monomial(*(int(x) for x in row))
        if weight_of(g, m) != 0:
            raise IntegralityViolation(f"chart coordinate {m} is not invariant")
        out.append(m)
    return tuple(out)

