"""Stability parameters theta = theta_P + m * vartheta and the stability test."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, lcm

import numpy as np

from .brick import GBrick, closed_masks
from .exactcore import solve_rational_system
from .monomial import mono, weight_of
from .quotienttype import GroupType, Side, child, pushforward_character, vartheta


class InvalidTheta(ValueError):
    pass


@dataclass(frozen=True)
class Theta:
    """Rational values on the characters 0..r-1, summing to zero."""

    values: tuple

    def __post_init__(self):
        vals = tuple(Fraction(v) for v in self.values) or (Fraction(0),)
        object.__setattr__(self, "values", vals)
        if sum(vals) != 0:
            raise InvalidTheta(f"parameter values must sum to zero, got {sum(vals)}")

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def __add__(self, other):
        return Theta(tuple(p + q for p, q in zip(self.values, other)))

    def scaled(self, k) -> "Theta":
        return Theta(tuple(k * v for v in self.values))

    def to_json(self) -> dict:
        return {"values": [fraction_str(v) for v in self.values]}

    def __str__(self):
        return "(" + ", ".join(fraction_str(v) for v in self.values) + ")"


def fraction_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_theta(text: str) -> Theta:
    """Comma separated fractions, e.g. ``-2,1,1`` or ``-1/2,1/2``."""
    parts = [p.strip() for p in text.strip().strip("()[]").split(",") if p.strip()]
    try:
        return Theta(tuple(Fraction(p.strip('"')) for p in parts))
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidTheta(f"cannot parse parameter {text!r}") from exc


@dataclass(frozen=True)
class SymbolicTheta:
    """theta_P + m * direction for an unspecified large m."""

    base: Theta
    direction: Theta

    def at(self, m) -> Theta:
        return self.base + self.direction.scaled(m)

    def to_json(self) -> dict:
        return {"base": self.base.to_json()["values"], "direction": self.direction.to_json()["values"]}


def _as_theta(t) -> Theta:
    return t if isinstance(t, Theta) else Theta(tuple(t))


def _partial_system(g: GroupType, theta_left, theta_right):
    rows, rhs = [], []
    for side, target in ((Side.LEFT, _as_theta(theta_left)), (Side.RIGHT, _as_theta(theta_right))):
        n = child(g, side).r
        if len(target) != n:
            raise InvalidTheta(f"{side.value} parameter has {len(target)} values, expected {n}")
        for chi in range(n):
            rows.append([int(pushforward_character(g, side, rho) == chi) for rho in range(g.r)])
            rhs.append(target[chi])
    return rows, rhs


def solve_theta_partial(g: GroupType, theta_left, theta_right) -> Theta:
    """A parameter whose fibre sums over both pushforwards give the child parameters.

    Free variables of the linear system are set to zero.
    """
    return Theta(tuple(solve_rational_system(*_partial_system(g, theta_left, theta_right))))


def satisfies_partial_system(g: GroupType, theta_p, theta_left, theta_right) -> bool:
    """Whether ``theta_p`` has the prescribed fibre sums on both sides."""
    rows, rhs = _partial_system(g, theta_left, theta_right)
    return all(sum(c * Fraction(v) for c, v in zip(row, theta_p)) == b for row, b in zip(rows, rhs))


def concretize(sym: SymbolicTheta, bricks=None) -> Theta:
    """Fix m = 1 + ceil(sum |base|), enough since direction is integer valued.

    When ``bricks`` are given and direction vanishes on all their proper
    closed subsets, m = 1 suffices.
    """
    if bricks is not None and all(
        _direction_silent(b, sym.direction) for b in bricks
    ):
        return sym.at(1)
    return sym.at(1 + ceil(sum(abs(v) for v in sym.base)))


def _direction_silent(brick: GBrick, direction: Theta) -> bool:
    full = (1 << len(brick)) - 1
    return all(_mask_value(direction, mask) == 0 for mask in closed_masks(brick) if 0 < mask < full)


def _mask_value(theta, mask: int) -> Fraction:
    return sum((v for i, v in enumerate(theta) if mask >> i & 1), Fraction(0))


def kedzierski_theta(g: GroupType, seeds: dict | None = None) -> SymbolicTheta:
    """Recursive parameter stabilising every brick of the economic resolution.

    ``seeds`` may map child groups to fixed parameters that replace the
    recursive ones.
    """
    if g.trivial:
        raise InvalidTheta("no parameter recursion for the trivial group")
    return _kedzierski(g, tuple(sorted((k, _as_theta(v)) for k, v in (seeds or {}).items())))


@lru_cache(maxsize=None)
def _kedzierski(g: GroupType, seeds: tuple) -> SymbolicTheta:
    fixed = dict(seeds)
    kids = []
    for side in (Side.LEFT, Side.RIGHT):
        c = child(g, side)
        if c in fixed:
            kids.append(fixed[c])
        elif c.trivial:
            kids.append(Theta((0,)))
        else:
            kids.append(concretize(_kedzierski(c, seeds)))
    return SymbolicTheta(solve_theta_partial(g, *kids), Theta(vartheta(g)))


def theta_eval(theta, brick: GBrick, subset) -> Fraction:
    return sum((Fraction(theta[weight_of(brick.group, mono(m))]) for m in subset), Fraction(0))


@lru_cache(maxsize=4096)
def _mask_matrix(brick: GBrick):
    """Proper nonempty closed subsets as rows of a 0/1 matrix over weights."""
    r = len(brick)
    full = (1 << r) - 1
    masks = [m for m in closed_masks(brick) if 0 < m < full]
    arr = np.array(masks, dtype=np.int64).reshape(-1, 1)
    return (arr >> np.arange(r, dtype=np.int64)) & 1, masks


def is_stable(brick: GBrick, theta) -> bool:
    """theta is positive on every nonzero proper submodule, i.e. on closed subsets."""
    theta = _as_theta(theta)
    bits, masks = _mask_matrix(brick)
    if not masks:
        return True
    den = lcm(*(v.denominator for v in theta))
    ints = [int(v * den) for v in theta]
    if sum(abs(v) for v in ints) < 2 ** 62:
        return bool((bits @ np.array(ints, dtype=np.int64) > 0).all())
    return all(_mask_value(ints, m) > 0 for m in masks)


def unstable_witness(brick: GBrick, theta):
    """A closed subset violating stability, or None."""
    theta = _as_theta(theta)
    _, masks = _mask_matrix(brick)
    for m in masks:
        if _mask_value(theta, m) <= 0:
            return frozenset(brick.entries[w] for w in range(len(brick)) if m >> w & 1)
    return None
