"""Cyclic groups of type 1/r(1, a, r-a) and their blowup children."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class InvalidType(ValueError):
    pass


class TrivialGroup(ValueError):
    pass


class Side(enum.Enum):
    CENTRAL = "central"
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True, order=True)
class GroupType:
    """The group 1/r(1, a, r-a).  ``(1, 0)`` is the trivial group."""

    r: int
    a: int

    def __post_init__(self):
        if self.r < 1:
            raise InvalidType(f"group order must be positive, got r={self.r}")
        if self.r == 1:
            if self.a != 0:
                raise InvalidType("the trivial group is written 1/1(1,0,1), a must be 0")
        elif not (1 <= self.a <= self.r - 1) or gcd(self.r, self.a) != 1:
            raise InvalidType(f"1/{self.r}(1,{self.a},{self.r - self.a}) needs 1 <= a < r and gcd(r, a) = 1")

    @property
    def weights(self) -> tuple[int, int, int]:
        return (1, self.a, (self.r - self.a) % self.r) if self.r > 1 else (1, 0, 0)

    @property
    def trivial(self) -> bool:
        return self.r == 1

    def __str__(self):
        return f"1/{self.r}(1,{self.a},{self.r - self.a})"


TRIVIAL = GroupType(1, 0)


def make_group(r: int, a: int) -> GroupType:
    return GroupType(int(r), int(a))


def child(g: GroupType, side: Side) -> GroupType:
    """Group of the chart on the given side of v = (1, a, r-a)/r after one weighted blowup.

    Left is 1/a(1, -r, r) and right is 1/(r-a)(1, r, -r), both put back in
    normal form; the central chart is smooth.
    """
    if g.trivial or side is Side.CENTRAL:
        return TRIVIAL
    if side is Side.LEFT:
        n = g.a
        return TRIVIAL if n == 1 else GroupType(n, (-g.r) % n)
    n = g.r - g.a
    return TRIVIAL if n == 1 else GroupType(n, g.r % n)


def pushforward_character(g: GroupType, side: Side, weight: int) -> int:
    """Weight in the child group of the round-down image of a weight-``weight`` monomial."""
    if g.trivial or side is Side.CENTRAL:
        return 0
    return weight % child(g, side).r


def characters(g: GroupType) -> range:
    return range(g.r)


def vartheta(g: GroupType) -> tuple[Fraction, ...]:
    """The direction whose fibre sums under both side pushforwards vanish.

    -1 on weights below min(a, r-a), +1 on weights at or above max(a, r-a),
    0 in between.
    """
    if g.trivial:
        raise TrivialGroup("no distinguished direction for the trivial group")
    s, t = min(g.a, g.r - g.a), max(g.a, g.r - g.a)
    return tuple(Fraction(-1 if w < s else 1 if w >= t else 0) for w in range(g.r))
