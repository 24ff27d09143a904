"""Command line interface: ``econres {fan,bricks,chamber,theta,stable,verify} R A``."""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .brick import danilov_bricks
from .chamber import chamber_rays, expand_in_alpha, simple_roots
from .fan import Cone, chart_coordinates, econ_fan
from .monomial import format_monomial
from .quotienttype import InvalidType, make_group
from .stability import (InvalidTheta, Theta, concretize, fraction_str, kedzierski_theta,
                        parse_theta, unstable_witness)
from .verify import format_report, verify

EXIT_OK, EXIT_FAIL, EXIT_INVALID = 0, 1, 2


def _ray_label(p, scale: int) -> str:
    if scale == 1 or sum(1 for c in p if c) == 1 and max(p) == scale:
        for k in range(3):
            if p[k] == scale and sum(p) == scale:
                return f"e{k + 1}"
    return "(" + ",".join(str(c) for c in p) + f")/{scale}"


def _cone_label(c: Cone) -> str:
    return " ".join(_ray_label(p, c.scale) for p in c.rays)


def _brick_text(b) -> str:
    return ",".join(format_monomial(m) for m in b.entries)


def _sorted_pairs(g):
    return sorted(danilov_bricks(g), key=lambda cb: cb[0].rays)


def cmd_fan(g, fmt):
    fan = econ_fan(g)
    cones = sorted(fan.maximal_cones, key=lambda c: c.rays)
    if fmt == "json":
        return {"r": g.r, "a": g.a, "maximal_cones": [c.to_json() for c in cones]}
    if fmt == "tsv":
        return ["cone\tray1\tray2\tray3"] + [
            f"{k}\t" + "\t".join(_ray_label(p, c.scale) for p in c.rays) for k, c in enumerate(cones)]
    return [f"economic fan of {g}: {len(cones)} maximal cones"] + [
        f"  Cone({_cone_label(c)})" for c in cones]


def cmd_bricks(g, fmt):
    rows = []
    for cone, b in _sorted_pairs(g):
        coords = chart_coordinates(g, cone)
        rows.append((cone, b, coords))
    if fmt == "json":
        return [{"cone": c.to_json(), "brick": b.to_json(), "chart_coordinates": [list(m) for m in co]}
                for c, b, co in rows]
    if fmt == "tsv":
        return ["generators\tbrick\tcoordinates"] + [
            f"{_cone_label(c)}\t{_brick_text(b)}\t{','.join(format_monomial(m) for m in co)}"
            for c, b, co in rows]
    out = [f"Danilov bricks of {g}: {len(rows)}"]
    for c, b, co in rows:
        out.append(f"  Cone({_cone_label(c)})")
        out.append(f"    brick        {b}")
        out.append(f"    coordinates  {', '.join(format_monomial(m) for m in co)}")
    return out


def cmd_chamber(g, fmt):
    roots = simple_roots(g)
    rays = chamber_rays(g)
    if fmt == "json":
        return {"r": g.r, "a": g.a,
                "simple_roots": [{"head": x.head, "tail": x.tail,
                                  "alpha": list(expand_in_alpha(g, x).coefficients)} for x in roots],
                "rays": [list(row) for row in rays]}
    if fmt == "tsv":
        return (["root\talpha"] + [f"{x}\t{expand_in_alpha(g, x)}" for x in roots] + [""]
                + ["\t".join(str(c) for c in row) for row in rays])
    width = max(len(str(c)) for row in rays for c in row)
    return ([f"simple roots of {g}:"] + [f"  {x}  =  {expand_in_alpha(g, x)}" for x in roots]
            + ["chamber rays:"] + ["  " + " ".join(str(c).rjust(width) for c in row) for row in rays])


def cmd_theta(g, fmt):
    sym = kedzierski_theta(g)
    theta = concretize(sym)
    k = next(i for i, d in enumerate(sym.direction) if d)
    m = (theta[k] - sym.base[k]) / sym.direction[k]
    if fmt == "json":
        return {"r": g.r, "a": g.a, **sym.to_json(), "m": fraction_str(m), "theta": theta.to_json()["values"]}
    if fmt == "tsv":
        return ["field\tvalues", f"base\t{','.join(map(fraction_str, sym.base))}",
                f"direction\t{','.join(map(fraction_str, sym.direction))}", f"m\t{fraction_str(m)}",
                f"theta\t{','.join(map(fraction_str, theta))}"]
    return [f"parameter for {g}", f"  base       {sym.base}", f"  direction  {sym.direction}",
            f"  m          {fraction_str(m)}", f"  theta      {theta}"]


def _load_theta(text: str) -> Theta:
    if os.path.isfile(text):
        with open(text) as fh:
            text = fh.read()
        stripped = text.strip()
        if stripped.startswith("{"):
            data = json.loads(stripped)
            return Theta(tuple(Fraction(str(v)) for v in data["values"]))
    return parse_theta(text)


def cmd_stable(g, fmt, theta):
    if len(theta) != g.r:
        raise InvalidTheta(f"parameter has {len(theta)} values, group has {g.r} characters")
    results = []
    for cone, b in _sorted_pairs(g):
        w = unstable_witness(b, theta)
        results.append((cone, b, w))
    if fmt == "json":
        return {"r": g.r, "a": g.a, "theta": theta.to_json()["values"],
                "all_stable": all(w is None for *_, w in results),
                "bricks": [{"cone": c.to_json(), "brick": b.to_json(), "stable": w is None,
                            "witness": None if w is None else sorted(list(m) for m in w)}
                           for c, b, w in results]}
    if fmt == "tsv":
        return ["generators\tbrick\tstable\twitness"] + [
            f"{_cone_label(c)}\t{_brick_text(b)}\t{str(w is None).lower()}\t"
            + ("" if w is None else ",".join(sorted(map(format_monomial, w)))) for c, b, w in results]
    n = sum(1 for *_, w in results if w is None)
    out = [f"theta = {theta}: {n} of {len(results)} bricks stable"]
    for c, b, w in results:
        tag = "stable" if w is None else "unstable via {" + ", ".join(sorted(map(format_monomial, w))) + "}"
        out.append(f"  {b}  {tag}")
    return out


def _emit(result, fmt):
    if fmt == "json":
        sys.stdout.write(json.dumps(result, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(result) + "\n")


def build_parser() -> argparse.ArgumentParser:
    fmt_parent = argparse.ArgumentParser(add_help=False)
    fmt_parent.add_argument("--format", choices=("json", "tsv", "pretty"), default=argparse.SUPPRESS)
    parser = argparse.ArgumentParser(prog="econres", parents=[fmt_parent],
                                     description="Economic resolutions of 1/r(1,a,r-a) and their bricks.")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "fan": "maximal cones of the economic resolution",
        "bricks": "Danilov brick and chart coordinates of every cone",
        "chamber": "simple roots and ray matrix of the chamber",
        "theta": "recursive stability parameter",
        "stable": "test every brick against a given parameter",
        "verify": "run all consistency checks",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text, parents=[fmt_parent])
        p.add_argument("r", type=int)
        p.add_argument("a", type=int)
        if name == "stable":
            p.add_argument("--theta", required=True,
                           help="comma separated fractions, or a file holding them or {\"values\": [...]}")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    args.format = getattr(args, "format", "pretty")
    try:
        g = make_group(args.r, args.a)
        if args.command == "stable":
            result = cmd_stable(g, args.format, _load_theta(args.theta))
        elif args.command == "verify":
            rep = verify(g)
            _emit(rep.to_json() if args.format == "json" else format_report(rep).splitlines(), args.format)
            return EXIT_OK if rep.ok else EXIT_FAIL
        else:
            if args.command in ("chamber", "theta") and g.trivial:
                raise InvalidType(f"{args.command} needs r >= 2")
            result = {"fan": cmd_fan, "bricks": cmd_bricks, "chamber": cmd_chamber,
                      "theta": cmd_theta}[args.command](g, args.format)
    except (InvalidType, InvalidTheta, OSError, json.JSONDecodeError, KeyError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INVALID
    _emit(result, args.format)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
