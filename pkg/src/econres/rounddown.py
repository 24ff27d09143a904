"""Round-down maps from the parent monomial lattice to a blowup chart's lattice."""
from __future__ import annotations

from .monomial import Monomial
from .quotienttype import GroupType, Side

# index of the exponent replaced by the floored v-pairing
_SLOT = {Side.CENTRAL: 0, Side.LEFT: 1, Side.RIGHT: 2}


def v_pairing_floor(g: GroupType, m) -> int:
    """floor(<m, v>) for v = (1, a, r-a)/r."""
    return (m[0] + g.a * m[1] + (g.r - g.a) * m[2]) // g.r


def round_down(g: GroupType, side: Side, m) -> Monomial:
    """Image of ``m`` in the chart's eigencoordinates (xi, eta, zeta)."""
    if g.r < 2:
        raise ValueError("round down needs a nontrivial group")
    out = list(m)
    out[_SLOT[side]] = v_pairing_floor(g, m)
    return Monomial(*out)


def fiber(g: GroupType, side: Side, target) -> list[Monomial]:
    """All monomials rounding down to ``target``, in increasing free exponent.

    Only the exponent in the replaced slot is free; it runs over the integer
    interval where r*t <= <fixed part> + c*e < r*(t+1), c being that slot's
    weight.
    """
    if g.r < 2:
        raise ValueError("round down needs a nontrivial group")
    slot = _SLOT[side]
    w = (1, g.a, g.r - g.a)
    t = target[slot]
    c = w[slot]
    rest = sum(wi * ti for k, (wi, ti) in enumerate(zip(w, target)) if k != slot)
    lo = -((rest - g.r * t) // c)  # ceil((r t - rest) / c)
    hi = (g.r * (t + 1) - 1 - rest) // c
    out = []
    for e in range(lo, hi + 1):
        m = list(target)
        m[slot] = e
        out.append(Monomial(*m))
    return out
