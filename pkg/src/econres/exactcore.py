"""Exact rational linear algebra on small dense matrices.

Scalars are :class:`fractions.Fraction`; Python ints are unbounded, so
nothing here overflows.  Matrices are plain lists of rows.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Sequence

Rational = Fraction
RatMatrix = list  # list[list[Fraction]]


class SingularMatrix(ValueError):
    pass


class Infeasible(ValueError):
    """The linear system has no solution."""


class ZeroVector(ValueError):
    pass


def as_matrix(rows) -> list[list[Fraction]]:
    m = [[Fraction(v) for v in row] for row in rows]
    if m and any(len(row) != len(m[0]) for row in m):
        raise ValueError("ragged matrix")
    return m


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def matmul(a, b) -> list[list[Fraction]]:
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def matvec(a, v) -> list[Fraction]:
    return [sum((Fraction(x) * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def det3(m) -> Fraction:
    (a, b, c), (d, e, f), (g, h, i) = m
    return Fraction(a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g))


def invert_matrix3(m) -> list[list[Fraction]]:
    """Inverse of a 3x3 rational matrix via the adjugate."""
    m = as_matrix(m)
    if len(m) != 3 or len(m[0]) != 3:
        raise ValueError("expected a 3x3 matrix")
    d = det3(m)
    if d == 0:
        raise SingularMatrix("determinant is zero")
    (a, b, c), (e, f, g), (h, i, j) = m
    adj = [
        [f * j - g * i, c * i - b * j, b * g - c * f],
        [g * h - e * j, a * j - c * h, c * e - a * g],
        [e * i - f * h, b * h - a * i, a * f - b * e],
    ]
    return [[x / d for x in row] for row in adj]


def rref(a, b=None):
    """Reduced row echelon form of ``[a | b]``.

    Returns ``(rows, pivot_columns)``; the augmented column (if any) is the
    last entry of each row.
    """
    rows = [list(r) + ([Fraction(b[k])] if b is not None else []) for k, r in enumerate(as_matrix(a))]
    ncols = len(rows[0]) - (1 if b is not None else 0) if rows else 0
    pivots = []
    prow = 0
    for col in range(ncols):
        pr = next((k for k in range(prow, len(rows)) if rows[k][col] != 0), None)
        if pr is None:
            continue
        rows[prow], rows[pr] = rows[pr], rows[prow]
        p = rows[prow][col]
        rows[prow] = [x / p for x in rows[prow]]
        for k in range(len(rows)):
            if k != prow and rows[k][col] != 0:
                f = rows[k][col]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[prow])]
        pivots.append(col)
        prow += 1
        if prow == len(rows):
            break
    return rows, pivots


def solve_rational_system(a, b) -> list[Fraction]:
    """One exact solution of ``a @ x = b``, free variables set to zero.

    Raises :class:`Infeasible` if the system is inconsistent.
    """
    if not len(a):
        raise ValueError("system needs at least one equation")
    ncols = len(a[0])
    rows, pivots = rref(a, b)
    for row in rows[len(pivots):]:
        if row[-1] != 0:
            raise Infeasible("inconsistent linear system")
    x = [Fraction(0)] * ncols
    for k, col in enumerate(pivots):
        x[col] = rows[k][-1]
    return x


def rank(a) -> int:
    return len(rref(a)[1]) if len(a) else 0


def nullspace(a) -> list[list[Fraction]]:
    """Basis of the right kernel, one vector per free column."""
    ncols = len(a[0])
    rows, pivots = rref(a)
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for k, col in enumerate(pivots):
            v[col] = -rows[k][free]
        basis.append(v)
    return basis


def primitive_scale(v: Sequence) -> list[int]:
    """The primitive integer vector on the ray spanned by ``v`` (direction kept)."""
    v = [Fraction(x) for x in v]
    if all(x == 0 for x in v):
        raise ZeroVector("cannot scale the zero vector")
    den = reduce(lcm, (x.denominator for x in v), 1)
    ints = [int(x * den) for x in v]
    g = reduce(gcd, ints, 0)
    return [x // g for x in ints]


def cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def dot(u, v):
    return sum(x * y for x, y in zip(u, v))
