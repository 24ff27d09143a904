"""G-prebricks and G-bricks.

A brick is stored as a tuple of r monomials indexed by weight, so
``brick.entries[rho]`` is the unique element of weight rho.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import gcd

import numpy as np

from .exactcore import cross, dot, rank
from .fan import Cone, chart_coordinates, positive_orthant, transport_cone
from .monomial import GENERATOR_NAMES, GENERATORS, ONE, Monomial, format_monomial, mono, weight_of
from .quotienttype import GroupType, Side, child
from .rounddown import fiber


class AxiomViolation(ValueError):
    """Raised with ``violations``: a list of (axiom, witness) pairs."""

    def __init__(self, violations):
        self.violations = violations
        super().__init__("; ".join(f"axiom {ax}: {w}" for ax, w in violations))


class NotFullDimensional(ValueError):
    pass


class NotSimplicial(ValueError):
    def __init__(self, rays):
        self.rays = rays
        super().__init__(f"dual cone has {len(rays)} extremal rays: {rays}")


class FiberSizeMismatch(AssertionError):
    pass


class TooLarge(ValueError):
    pass


class SearchExhausted(RuntimeError):
    pass


@dataclass(frozen=True)
class GBrick:
    group: GroupType
    entries: tuple

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __contains__(self, m):
        return mono(m) in self.monomials

    @property
    def monomials(self) -> frozenset:
        return frozenset(self.entries)

    def wt(self, m) -> Monomial:
        """The element of the brick with the same weight as ``m``."""
        return self.entries[weight_of(self.group, m)]

    def index(self, m) -> int:
        m = mono(m)
        w = weight_of(self.group, m)
        if self.entries[w] != m:
            raise KeyError(m)
        return w

    def to_json(self) -> dict:
        return {"r": self.group.r, "a": self.group.a,
                "entries": {str(w): list(m) for w, m in enumerate(self.entries)}}

    def __str__(self):
        return "{" + ", ".join(format_monomial(m) for m in sorted(self.entries, key=_display_key)) + "}"


def _display_key(m):
    return (sum(abs(e) for e in m), tuple(-e for e in m))


def prebrick_violations(g: GroupType, monomials) -> list:
    """Every failed prebrick axiom with a witness; empty for a valid prebrick."""
    mons = [mono(m) for m in monomials]
    s = set(mons)
    bad = []
    if ONE not in s:
        bad.append(("i", "1 is missing"))
    by_weight = {}
    for m in mons:
        by_weight.setdefault(weight_of(g, m), []).append(m)
    for w in range(g.r):
        got = by_weight.get(w, [])
        if len(got) != 1:
            bad.append(("ii", f"weight {w} has {len(got)} elements {[format_monomial(m) for m in got]}"))
    for m, m2 in product(s, s):
        q = m2 / m
        if m == m2 or not q.is_genuine:
            continue
        for n in product(*(range(e + 1) for e in q)):
            if m * n not in s:
                bad.append(("iii", f"{format_monomial(m * n)} lies between "
                                   f"{format_monomial(m)} and {format_monomial(m2)}"))
                break
    if s and ONE in s:
        seen, todo = {ONE}, [ONE]
        while todo:
            m = todo.pop()
            for f in GENERATORS:
                for n in (m * f, m / f):
                    if n in s and n not in seen:
                        seen.add(n)
                        todo.append(n)
        for m in sorted(s - seen):
            bad.append(("iv", f"{format_monomial(m)} is not connected to 1"))
    return bad


def validate_prebrick(g: GroupType, candidate) -> GBrick:
    """Check the four prebrick axioms; ``candidate`` is a weight map or an iterable of monomials."""
    if isinstance(candidate, dict):
        bad = [("ii", f"{format_monomial(mono(m))} filed under weight {w}")
               for w, m in candidate.items() if weight_of(g, m) != int(w) % g.r]
        monomials = list(candidate.values())
    else:
        bad = []
        monomials = list(candidate)
    bad += prebrick_violations(g, monomials)
    if bad:
        raise AxiomViolation(bad)
    entries = [None] * g.r
    for m in monomials:
        entries[weight_of(g, m)] = mono(m)
    return GBrick(g, tuple(entries))


def border_basis(brick: GBrick) -> set:
    s = brick.monomials
    return {m * f for m in s for f in GENERATORS} - s


def semigroup_generators(brick: GBrick) -> set:
    """Invariant monomials b / wt(b) over the border basis b."""
    return {b / brick.wt(b) for b in border_basis(brick)}


def _primitive_int(v):
    d = gcd(*v)
    return tuple(c // d for c in v)


def dual_extremal_rays(gens) -> list:
    """Primitive integer extremal rays of {u : <u, g> >= 0 for all g}."""
    gens = [tuple(g) for g in gens]
    rays = set()
    for g1, g2 in product(gens, gens):
        c = cross(g1, g2)
        if c == (0, 0, 0):
            continue
        for cand in (c, tuple(-x for x in c)):
            if all(dot(cand, g) >= 0 for g in gens):
                rays.add(_primitive_int(cand))
    return sorted(rays)


def sigma_cone(brick: GBrick) -> Cone:
    """The cone dual to S(brick), with primitive L-point rays."""
    g = brick.group
    rays = dual_extremal_rays(semigroup_generators(brick))
    if not rays or rank(rays) < 3:
        raise NotFullDimensional(f"sigma of {brick} is not 3-dimensional")
    if len(rays) > 3:
        raise NotSimplicial(rays)
    return Cone.make(g, rays)


def is_brick(brick: GBrick) -> bool:
    try:
        sigma_cone(brick)
    except NotFullDimensional:
        return False
    except NotSimplicial:
        return True
    return True


def monoid_contains(target, gens, grading, max_states: int = 200_000) -> bool:
    """Whether ``target`` is a nonnegative integer combination of ``gens``.

    ``grading`` must pair positively with every generator; partial
    remainders outside the cone of ``gens`` are pruned.
    """
    gens = [tuple(g) for g in gens]
    if any(dot(grading, g) <= 0 for g in gens):
        raise ValueError("grading must be positive on every generator")
    walls = dual_extremal_rays(gens)
    memo = {}

    def reach(t):
        if t == (0, 0, 0):
            return True
        if t in memo:
            return memo[t]
        if len(memo) > max_states:
            raise SearchExhausted(f"more than {max_states} states while decomposing {target}")
        memo[t] = False
        deg = dot(grading, t)
        for gen in gens:
            if dot(grading, gen) > deg:
                continue
            rest = tuple(a - b for a, b in zip(t, gen))
            if all(dot(w, rest) >= 0 for w in walls) and reach(rest):
                memo[t] = True
                break
        return memo[t]

    return reach(tuple(target))


def positive_grading(gens) -> tuple:
    """An integer vector pairing positively with all of ``gens`` (sum of dual rays)."""
    rays = dual_extremal_rays(gens)
    w = tuple(sum(c) for c in zip(*rays))
    if not rays or any(dot(w, g) <= 0 for g in gens):
        raise NotFullDimensional("generators do not span a pointed cone")
    return w


def same_monoid(gens_a, gens_b) -> bool:
    """Whether the two finite sets generate the same submonoid of Z^3."""
    gens_a, gens_b = [tuple(g) for g in gens_a], [tuple(g) for g in gens_b]
    try:
        wa, wb = positive_grading(gens_a), positive_grading(gens_b)
    except NotFullDimensional:
        return False
    return (all(monoid_contains(g, gens_a, wa) for g in gens_b)
            and all(monoid_contains(g, gens_b, wb) for g in gens_a))


def is_saturated(brick: GBrick) -> bool:
    """S(brick) equals sigma^vee cap M, checked in the dual basis of sigma."""
    g = brick.group
    cone = sigma_cone(brick)
    coords = chart_coordinates(g, cone)
    rays = cone.rays
    gens = semigroup_generators(brick)
    # exponents in the dual basis: <gen, ray_i>, rays are r-scaled
    frame = []
    for gen in gens:
        n = [dot(gen, ray) for ray in rays]
        if any(c % g.r for c in n):
            return False
        n = tuple(c // g.r for c in n)
        if any(c < 0 for c in n):
            return False
        frame.append(n)
    grading = (1, 1, 1)
    frame = [n for n in frame if n != (0, 0, 0)]
    for i in range(len(coords)):
        target = tuple(int(i == k) for k in range(3))
        if not monoid_contains(target, frame, grading):
            return False
    return True


def pullback_brick(g: GroupType, side: Side, child_brick: GBrick) -> GBrick:
    """All monomials whose round-down on ``side`` lands in ``child_brick``."""
    if child_brick.group != child(g, side):
        raise ValueError(f"brick of {child_brick.group} is not on the {side.value} of {g}")
    mons = [m for k in child_brick.entries for m in fiber(g, side, k)]
    if len(mons) != g.r or len(set(mons)) != g.r:
        raise FiberSizeMismatch(f"pullback has {len(mons)} monomials, expected {g.r}")
    return validate_prebrick(g, mons)


@lru_cache(maxsize=None)
def danilov_bricks(g: GroupType) -> tuple:
    """(cone, brick) for every maximal cone of the economic resolution."""
    if g.trivial:
        return ((positive_orthant(g), GBrick(g, (ONE,))),)
    out = []
    for side in (Side.CENTRAL, Side.LEFT, Side.RIGHT):
        for cone, b in danilov_bricks(child(g, side)):
            out.append((transport_cone(g, side, cone), pullback_brick(g, side, b)))
    return tuple(out)


def successor_masks(brick: GBrick) -> list:
    """Bit rho' is set in entry rho when f * m_rho = m_rho' for some f in x, y, z."""
    masks = []
    for m in brick.entries:
        bits = 0
        for f in GENERATORS:
            n = m * f
            if n in brick.monomials:
                bits |= 1 << weight_of(brick.group, n)
        masks.append(bits)
    return masks


BITMASK_LIMIT = 20
ENUMERATION_CAP = 2_000_000


def closed_masks(brick: GBrick) -> list:
    """Closed subsets as bitmasks over weights, in increasing order."""
    r = len(brick.entries)
    succ = successor_masks(brick)
    if r <= BITMASK_LIMIT:
        arr = np.arange(1 << r, dtype=np.int64)
        ok = np.ones(arr.shape, dtype=bool)
        for i, s in enumerate(succ):
            if s:
                ok &= ((arr >> i) & 1 == 0) | ((arr & s) == s)
        return [int(v) for v in arr[ok]]
    return sorted(_closed_masks_recursive(succ))


def _closed_masks_recursive(succ) -> list:
    r = len(succ)
    down = [0] * r  # descendants, inclusive
    up = [0] * r
    for i in range(r):
        seen, todo = 1 << i, [i]
        while todo:
            k = todo.pop()
            s = succ[k]
            for j in range(r):
                if s >> j & 1 and not seen >> j & 1:
                    seen |= 1 << j
                    todo.append(j)
        down[i] = seen
    for i in range(r):
        for j in range(r):
            if down[i] >> j & 1:
                up[j] |= 1 << i
    out = []

    def rec(inc, exc):
        if len(out) > ENUMERATION_CAP:
            raise TooLarge(f"more than {ENUMERATION_CAP} closed subsets")
        free = ~(inc | exc) & ((1 << r) - 1)
        if not free:
            out.append(inc)
            return
        i = (free & -free).bit_length() - 1
        rec(inc | down[i], exc)
        rec(inc, exc | up[i])

    rec(0, 0)
    return out


def closed_subsets(brick: GBrick) -> list:
    """Subsets A with f*m in A whenever m in A and f*m in the brick; these index submodules."""
    return [frozenset(brick.entries[w] for w in range(len(brick)) if mask >> w & 1)
            for mask in closed_masks(brick)]


def generated_closure(brick: GBrick, seeds) -> frozenset:
    """Smallest closed subset containing ``seeds``."""
    s = brick.monomials
    out = set(mono(m) for m in seeds)
    todo = list(out)
    while todo:
        m = todo.pop()
        for f in GENERATORS:
            n = m * f
            if n in s and n not in out:
                out.add(n)
                todo.append(n)
    return frozenset(out)


def action_table(brick: GBrick) -> list:
    """(f, rho, rho', s) with f*m_rho = s * m_rho' and s in S(brick)."""
    rows = []
    for name, f in zip(GENERATOR_NAMES, GENERATORS):
        for rho, m in enumerate(brick.entries):
            n = m * f
            rho2 = weight_of(brick.group, n)
            rows.append((name, rho, rho2, n / brick.entries[rho2]))
    return rows


def contains_x(brick: GBrick) -> bool:
    return GENERATORS[0] in brick.monomials
