"""One-shot consistency report for a single group type."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil

from .brick import danilov_bricks, is_saturated, prebrick_violations, sigma_cone
from .chamber import chamber_rays, in_chamber, vartheta_ray_indices
from .fan import discrepancy, econ_fan, is_unimodular, unit, v_point
from .monomial import parse_monomial
from .quotienttype import GroupType
from .stability import (SymbolicTheta, Theta, concretize, kedzierski_theta, satisfies_partial_system,
                        theta_eval, unstable_witness)


@dataclass
class VerifyReport:
    group: GroupType
    checks: list = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = ""):
        self.checks.append((name, "pass" if ok else "fail", detail))

    @property
    def passed(self) -> int:
        return sum(1 for _, s, _ in self.checks if s == "pass")

    @property
    def failed(self) -> int:
        return len(self.checks) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {"r": self.group.r, "a": self.group.a,
                "checks": [{"name": n, "status": s, "detail": d} for n, s, d in self.checks],
                "passed": self.passed, "failed": self.failed}


# reference data for 1/7(1,3,4): child parameters, a hand-picked solution of the
# fibre-sum system, and the submodule {z, z/y, z^2/y} of the brick below
_SPOT_SEEDS = {GroupType(3, 2): (-2, 1, 1), GroupType(4, 3): (-3, 1, 1, 1)}
_SPOT_BASE = (-1, 3, 3, 1, -2, -2, -2)
_SPOT_BRICK = {parse_monomial(s) for s in ("1", "y", "y^2", "z", "z/y", "z^2/y", "z^2/y^2")}
_SPOT_SUBSET = [parse_monomial(s) for s in ("z", "z/y", "z^2/y")]


def submodule_spot_check(g: GroupType):
    """(value, m, ok) for the reference parameter on the reference submodule."""
    sym = kedzierski_theta(g, _SPOT_SEEDS)
    ok = satisfies_partial_system(g, _SPOT_BASE, *_SPOT_SEEDS.values())
    ref = SymbolicTheta(Theta(_SPOT_BASE), sym.direction)
    m = 1 + ceil(sum(abs(v) for v in ref.base))
    brick = next(b for _, b in danilov_bricks(g) if b.monomials == _SPOT_BRICK)
    val = theta_eval(concretize(ref), brick, _SPOT_SUBSET)
    return val, m, ok and val == m - 1


def verify(g: GroupType) -> VerifyReport:
    rep = VerifyReport(g)
    r = g.r
    fan = econ_fan(g)
    cones = fan.maximal_cones
    rep.add("fan_cone_count", len(cones) == 2 * r - 1, f"{len(cones)} maximal cones, expected {2 * r - 1}")
    e1 = unit(g, 0)
    n_e1 = sum(1 for c in cones if e1 in c.rays)
    rep.add("cones_through_e1", n_e1 == r, f"{n_e1} cones contain e1, expected {r}")
    singular = [c.rays for c in cones if not is_unimodular(g, c)]
    rep.add("smoothness", not singular, f"non-unimodular: {singular}" if singular else "all cones unimodular")

    interior = {v_point(g, i): i for i in range(1, r)}
    bad = []
    for p in sorted(fan.rays() - {unit(g, k) for k in range(3)}):
        i = interior.get(p)
        if i is None or discrepancy(g, [Fraction(c, r) for c in p]) != Fraction(i, r):
            bad.append(p)
    rep.add("discrepancies", not bad and len(fan.rays()) == r + 2,
            f"unexpected rays {bad}" if bad else f"exceptional rays v_1..v_{r - 1} have discrepancy i/{r}")

    pairs = danilov_bricks(g)
    axiom_fail = [(str(b), v) for _, b in pairs if (v := prebrick_violations(g, b.entries))]
    rep.add("brick_axioms", not axiom_fail, str(axiom_fail[:3]) if axiom_fail else f"{len(pairs)} bricks")
    sig_fail = [str(b) for c, b in pairs if sigma_cone(b) != c]
    rep.add("sigma_equals_cone", not sig_fail, ", ".join(sig_fail))
    sat_fail = [str(b) for _, b in pairs if not is_saturated(b)]
    rep.add("saturation", not sat_fail, ", ".join(sat_fail))

    if g.trivial:
        return rep

    theta = concretize(kedzierski_theta(g))
    unstable = [(str(b), sorted(map(str, w))) for _, b in pairs if (w := unstable_witness(b, theta)) is not None]
    rep.add("stability", not unstable, str(unstable[:3]) if unstable else f"theta = {theta}")
    rep.add("theta_in_chamber", in_chamber(g, theta), f"theta = {theta}")
    idx = vartheta_ray_indices(g)
    rep.add("vartheta_is_ray", len(idx) == 1, f"matching rows {idx}")

    rays = chamber_rays(g)
    inner = [sum(col) for col in zip(*rays)]
    s = min(g.a, r - g.a)
    wrong = [i for i, v in enumerate(inner) if (v < 0) != (i < s)]
    rep.add("sign_pattern", not wrong,
            f"sign mismatch at {wrong}" if wrong else f"negative exactly on weights below {s}")

    if (g.r, g.a) == (7, 3):
        val, m, ok = submodule_spot_check(g)
        rep.add("submodule_value_m_minus_1", ok, f"theta(F) = {val}, m = {m}")
    return rep


def format_report(rep: VerifyReport) -> str:
    lines = [f"verify {rep.group}"]
    for name, status, detail in rep.checks:
        lines.append(f"  [{status.upper()}] {name}: {detail}")
    lines.append(f"{rep.passed} passed, {rep.failed} failed")
    return "\n".join(lines)
