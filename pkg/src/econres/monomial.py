"""Laurent monomials x^i y^j z^k as integer exponent triples.

A monomial does not know which group it belongs to: the same triple is read
in the eigencoordinates of whichever recursion level it lives in, so weights
always take an explicit :class:`GroupType`.
"""
from __future__ import annotations

import re
from typing import NamedTuple

from .quotienttype import GroupType


class Monomial(NamedTuple):
    x: int = 0
    y: int = 0
    z: int = 0

    def __mul__(self, other):
        return Monomial(self.x + other[0], self.y + other[1], self.z + other[2])

    def __truediv__(self, other):
        return Monomial(self.x - other[0], self.y - other[1], self.z - other[2])

    def __pow__(self, n: int):
        return Monomial(self.x * n, self.y * n, self.z * n)

    @property
    def is_genuine(self) -> bool:
        return self.x >= 0 and self.y >= 0 and self.z >= 0

    def __str__(self):
        return format_monomial(self)


ONE = Monomial(0, 0, 0)
X, Y, Z = Monomial(1, 0, 0), Monomial(0, 1, 0), Monomial(0, 0, 1)
GENERATORS = (X, Y, Z)
GENERATOR_NAMES = ("x", "y", "z")


def mono(m) -> Monomial:
    return m if isinstance(m, Monomial) else Monomial(*(int(v) for v in m))


def mul(m, n) -> Monomial:
    return mono(m) * n


def div(m, n) -> Monomial:
    return mono(m) / n


def is_genuine(m) -> bool:
    return all(e >= 0 for e in m)


def divides(m, n) -> bool:
    """True when n/m is a genuine monomial."""
    return is_genuine(div(n, m))


def weight_of(g: GroupType, m) -> int:
    """Character of ``m`` under 1/r(1, a, r-a); zero exactly on invariants."""
    return (m[0] + g.a * m[1] + (g.r - g.a) * m[2]) % g.r


def _fmt_side(m, names) -> str:
    out = []
    for name, e in zip(names, m):
        if e == 1:
            out.append(name)
        elif e > 1:
            out.append(f"{name}^{e}")
    return "".join(out)


def format_monomial(m, names=GENERATOR_NAMES) -> str:
    """Render as e.g. ``xz^5/y^2``; the identity is ``1``."""
    num = _fmt_side([max(e, 0) for e in m], names)
    den = _fmt_side([max(-e, 0) for e in m], names)
    if not den:
        return num or "1"
    return f"{num or '1'}/{den}"


_TOKEN = re.compile(r"([xyz])(?:\^\{?(-?\d+)\}?)?")


def _parse_side(s: str) -> list[int]:
    s = s.replace(" ", "").replace("*", "")
    e = [0, 0, 0]
    if s in ("", "1"):
        return e
    pos = 0
    while pos < len(s):
        tok = _TOKEN.match(s, pos)
        if not tok:
            raise ValueError(f"cannot parse monomial factor {s[pos:]!r}")
        e["xyz".index(tok.group(1))] += int(tok.group(2) or 1)
        pos = tok.end()
    return e


def parse_monomial(text: str) -> Monomial:
    """Inverse of :func:`format_monomial`; also accepts ``[1,-1,0]``."""
    text = text.strip()
    if text.startswith("["):
        return mono(int(v) for v in text.strip("[]").split(","))
    num, _, den = text.partition("/")
    n, d = _parse_side(num), _parse_side(den)
    return Monomial(n[0] - d[0], n[1] - d[1], n[2] - d[2])
