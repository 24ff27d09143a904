"""Simple roots of A_{r-1} cutting out the chamber of the recursive parameter."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactcore import primitive_scale, rank, solve_rational_system
from .quotienttype import GroupType, Side, child, vartheta


class SingularBase(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Root:
    """eps_head - eps_tail."""

    head: int
    tail: int

    def __str__(self):
        return f"e{self.head}-e{self.tail}"


@dataclass(frozen=True)
class AlphaVector:
    """Coefficients on alpha_k = eps_k - eps_{k-a}; index 0 is always zero."""

    coefficients: tuple

    def pair(self, theta) -> Fraction:
        """theta(sum n_k alpha_k) = sum n_k theta(rho_k)."""
        return sum((n * Fraction(theta[k]) for k, n in enumerate(self.coefficients) if n), Fraction(0))

    def nonzero(self) -> dict:
        return {k: n for k, n in enumerate(self.coefficients) if n}

    def __neg__(self):
        return AlphaVector(tuple(-n for n in self.coefficients))

    def __str__(self):
        terms = [("-" if n < 0 else "+") + (str(abs(n)) if abs(n) != 1 else "") + f"a{k}"
                 for k, n in self.nonzero().items()]
        return "".join(terms).lstrip("+") or "0"


def _chain(g: GroupType, i: int, j: int) -> list[int]:
    heads = []
    k = i
    while k != j:
        heads.append(k)
        k = (k - g.a) % g.r
    return heads


def expand_in_alpha(g: GroupType, root: Root) -> AlphaVector:
    """Telescope eps_i - eps_j along steps of -a, in whichever direction avoids alpha_0."""
    i, j = root.head, root.tail
    if i == j or not (0 <= i < g.r and 0 <= j < g.r):
        raise ValueError(f"{root} is not a root for {g}")
    heads, sign = _chain(g, i, j), 1
    if 0 in heads:
        heads, sign = _chain(g, j, i), -1
    coeffs = [0] * g.r
    for h in heads:
        coeffs[h] += sign
    return AlphaVector(tuple(coeffs))


@lru_cache(maxsize=None)
def simple_roots(g: GroupType) -> tuple:
    """Left child's roots, then the added root, then the right child's roots."""
    if g.trivial:
        return ()
    r, a = g.r, g.a
    left_map = {i % a: i for i in range(r - a, r)}
    left = [Root(left_map[x.head], left_map[x.tail]) for x in simple_roots(child(g, Side.LEFT))]
    right = list(simple_roots(child(g, Side.RIGHT)))  # eps^R_k is eps_k for k < r-a
    added = Root(((r - 1) // a) * a, ((r - 1) // (r - a)) * (r - a) - a)
    return tuple(left + [added] + right)


def alpha_matrix(g: GroupType) -> list[list[int]]:
    return [list(expand_in_alpha(g, x).coefficients) for x in simple_roots(g)]


@lru_cache(maxsize=None)
def chamber_rays(g: GroupType) -> tuple:
    """One primitive integer ray per simple root, dual to the simple roots."""
    rows = alpha_matrix(g)
    n = len(rows)
    if rank(rows) != n:
        raise SingularBase(f"simple roots of {g} are linearly dependent")
    out = []
    for j in range(n):
        rhs = [int(k == j) for k in range(n)] + [0]
        theta = solve_rational_system(rows + [[1] * g.r], rhs)
        out.append(tuple(primitive_scale(theta)))
    return tuple(out)


def pairings(g: GroupType, theta) -> list[Fraction]:
    return [expand_in_alpha(g, x).pair(theta) for x in simple_roots(g)]


def in_chamber(g: GroupType, theta) -> bool:
    return all(p > 0 for p in pairings(g, theta))


def vartheta_ray_indices(g: GroupType) -> list[int]:
    """Rows of the ray matrix that are positive multiples of vartheta."""
    v = vartheta(g)
    return [k for k, ray in enumerate(chamber_rays(g)) if tuple(primitive_scale(v)) == ray]
