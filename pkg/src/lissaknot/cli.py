"""``lissaknot`` command line.

Every command prints tab-separated ``key<TAB>value`` lines (tables get a
header row) or, with ``--json``, a single JSON document.  Exit status is 0 on
success, 1 when a verification fails and 2 for invalid input.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Optional

from . import plotting
from .angles import ExactAngle, parse_phase
from .braids import (
    lissajous_projection_word,
    torus_pipeline,
    torus_rewrite,
    torus_seed,
    two_bridge_pipeline,
)
from .curves import (
    LissajousParams,
    build_crossings,
    double_points,
    family_claims,
    family_params,
    family_phase_intervals,
    family_singular_phases,
    symmetry_check,
    validate_params,
)
from .diagram import Diagram, PlatSpec, assign_twist_crossings, diagram_from_crossings, diagram_from_plat
from .errors import LissaknotError, NoAssignmentFound
from .invariants import (
    alexander,
    arf,
    identify,
    is_perfect_square,
    is_square_mod2,
    torus_alexander,
    twist_alexander,
)
from .words import parse_word

EXIT_OK, EXIT_FAILED, EXIT_INVALID = 0, 1, 2


class InvalidInput(Exception):
    pass


# ---------------------------------------------------------------------------
# output helpers
# ---------------------------------------------------------------------------

def _poly_json(delta):
    return {"min_deg": 0, "coeffs": list(delta.coeff_list), "text": str(delta)}


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.12g}"
    if isinstance(value, (list, tuple)):
        if value and all(isinstance(v, dict) for v in value):
            return " | ".join(_fmt(v) for v in value)
        if value and all(isinstance(v, (list, tuple)) for v in value):
            return " ".join("(" + ",".join(_fmt(x) for x in v) + ")" for v in value)
        return ",".join(_fmt(v) for v in value)
    if isinstance(value, dict) and "text" in value:
        return value["text"]
    if isinstance(value, dict):
        return ";".join(f"{k}={_fmt(v)}" for k, v in value.items())
    return str(value)


def _emit(report: dict, as_json: bool, out, table: Optional[str] = None):
    if as_json:
        out.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
        return
    for key, value in report.items():
        if key == table:
            continue
        out.write(f"{key}\t{_fmt(value)}\n")
    if table and report.get(table):
        rows = report[table]
        cols = list(rows[0].keys())
        out.write("\t".join(cols) + "\n")
        for row in rows:
            out.write("\t".join(_fmt(row[c]) for c in cols) + "\n")


def _phase(text: str) -> ExactAngle:
    return parse_phase(text)


def _knot_summary(p: LissajousParams) -> tuple[dict, object, list]:
    status = validate_params(p)
    if not status:
        raise InvalidInput(status.reason)
    visits = build_crossings(p)
    diagram = diagram_from_crossings(visits) if visits else Diagram.unknot()
    delta = alexander(diagram)
    report = {
        "crossings": diagram.crossing_count,
        "gauss": diagram.to_json()["gauss"],
        "pd": diagram.to_json()["pd"],
        "alexander": _poly_json(delta),
        "determinant": abs(delta.evaluate(-1)),
        "arf": arf(delta),
        "perfect_square": is_perfect_square(delta),
        "square_mod2": is_square_mod2(delta),
        "candidates": [str(k) for k in identify(delta)],
    }
    return report, delta, visits


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_analyze(args, out) -> int:
    p = LissajousParams(args.nx, args.ny, args.nz, _phase(args.phx), _phase(args.phy), _phase(args.phz))
    summary, _, visits = _knot_summary(p)
    report = {"command": "analyze", "params": p.to_json(), **summary}
    report["symmetry"] = symmetry_check(p).to_json()
    if args.figure:
        plotting.render_diagram(p, visits, args.figure)
        report["figure"] = args.figure
    _emit(report, args.json, out)
    return EXIT_OK


def cmd_twist(args, out) -> int:
    if args.m < 0:
        raise InvalidInput("m must be non-negative")
    phz = _phase(args.phz) if args.phz is not None else None
    p = family_params(args.m, args.nz, phz)
    summary, delta, visits = _knot_summary(p)
    m = args.m
    expected = twist_alexander(m) if m % 2 == 0 else twist_alexander(-(m + 1))
    claims = family_claims(m, p.nz, p.phz)
    checks = {
        "crossings": summary["crossings"] == 6 * m + 1,
        "alexander": delta == expected,
        "arf": summary["arf"] == 0,
        **{f"claim_{k}": v for k, v in claims.items()},
    }
    report = {
        "command": "twist",
        "m": m,
        "params": p.to_json(),
        **summary,
        "expected_alexander": _poly_json(expected),
        "knot": f"Twist({2 * m if m % 2 == 0 else -2 * (m + 1)})",
        "checks": checks,
        "verified": all(checks.values()),
    }
    if args.figure:
        plotting.render_diagram(p, visits, args.figure, title=f"m = {m}")
        report["figure"] = args.figure
    _emit(report, args.json, out)
    return EXIT_OK if report["verified"] else EXIT_FAILED


def cmd_family(args, out) -> int:
    phases = family_singular_phases(args.m, args.nz)
    rows = []
    for index, interval in enumerate(family_phase_intervals(args.m, args.nz)):
        phz = interval.representative
        p = family_params(args.m, args.nz, phz)
        summary, delta, _ = _knot_summary(p)
        rows.append({
            "interval": index,
            "lo": str(interval.lo),
            "hi": str(interval.hi),
            "phz": str(phz),
            "crossings": summary["crossings"],
            "alexander": summary["alexander"],
            "arf": summary["arf"],
            "candidates": summary["candidates"],
            "gauss": " ".join(f"{f}{c}{'+' if s > 0 else '-'}" for c, f, s in summary["gauss"]),
        })
    report = {
        "command": "family",
        "m": args.m,
        "nz": args.nz,
        "singular_phases": [str(v) for v in phases.values],
        "intervals": len(rows),
        "rows": rows,
    }
    _emit(report, args.json, out, table="rows")
    return EXIT_OK


def cmd_construct(args, out) -> int:
    if args.kind == "two-bridge":
        return _construct_two_bridge(args, out)
    return _construct_torus(args, out)


def _construct_two_bridge(args, out) -> int:
    try:
        word = parse_word(args.word, 3)
    except ValueError as exc:
        raise InvalidInput(f"bad braid word {args.word!r}: {exc}") from exc
    result = two_bridge_pipeline(word)
    target = alexander(diagram_from_plat(PlatSpec(word.with_strands(4))))
    report = {
        "command": "construct",
        "kind": "two-bridge",
        "word": word.to_json(),
        "alternated": result.alternated.to_json(),
        "reduced": result.reduced.to_json(),
        "k": result.k,
        "frequencies": [result.nx, result.ny],
        "projection": result.reduced.projection().to_json(),
        "quad_crossings": 4 * len(result.shadow.quad_sites),
        "twist_slots": len(result.shadow.twist_slots),
        "shadow_crossings": result.shadow.total,
        "target_alexander": _poly_json(target),
    }
    try:
        diagram = assign_twist_crossings(result.shadow, result.arc_signs, target)
    except NoAssignmentFound as exc:
        report.update({"verified": False, "reason": str(exc)})
        _emit(report, args.json, out)
        return EXIT_FAILED
    found = alexander(diagram)
    report.update({
        "alexander": _poly_json(found),
        "gauss": diagram.to_json()["gauss"],
        "verified": found == target and diagram.crossing_count == 2 * result.nx * result.ny - result.nx - result.ny,
    })
    _emit(report, args.json, out)
    return EXIT_OK if report["verified"] else EXIT_FAILED


def _construct_torus(args, out) -> int:
    q = args.q
    result = torus_pipeline(q)
    f, ny = result.frequencies
    expected_f = 10 * ((q - 1) // 3) + 7 if q % 3 == 1 else 10 * ((q - 2) // 3) + 4
    checks = {
        "frequency_formula": f == expected_f,
        "coprime": math.gcd(f, ny) == 1,
        "arc_word": result.word.letters == lissajous_projection_word(f, ny).letters,
    }
    report = {
        "command": "construct",
        "kind": "torus",
        "q": q,
        "frequencies": [f, ny],
        "start": result.start.to_json(),
        "steps": [{"rule": name, "word": w.to_json()} for name, w in result.steps],
        "word": result.word.to_json(),
        "closure_modified": result.closure_modified,
    }
    if q in (2, 4, 5):
        seed = alexander(diagram_from_plat(PlatSpec(torus_seed(q))))
        rewritten = alexander(diagram_from_plat(PlatSpec(torus_rewrite(q))))
        torus = torus_alexander(3, q)
        report["plat_check"] = {
            "seed": _poly_json(seed),
            "rewritten": _poly_json(rewritten),
            "torus": _poly_json(torus),
        }
        checks["plat_alexander"] = seed == rewritten == torus
    report["checks"] = checks
    report["verified"] = all(checks.values())
    _emit(report, args.json, out)
    return EXIT_OK if report["verified"] else EXIT_FAILED


def cmd_render(args, out) -> int:
    phx, phy = _phase(args.phx), _phase(args.phy)
    z2 = None
    if args.z2:
        parts = args.z2.split(",")
        if len(parts) != 4:
            raise InvalidInput("--z2 expects n3,phi3,n4,phi4")
        z2 = (int(parts[0]), _phase(parts[1]), int(parts[2]), _phase(parts[3]))
    try:
        if args.csv:
            target = args.csv
            plotting.write_csv(args.nx, args.ny, phx, phy, target, args.nz, _phase(args.phz), z2)
            mode = "csv"
            count = plotting.sample_count(args.nx, args.ny)
        else:
            target = args.svg
            if args.arc:
                plotting.render_shadow(args.nx, args.ny, 0, 0, target, arc=True)
                mode, count = "arc", len(lissajous_projection_word(args.nx, args.ny)) if args.ny > 1 else 0
            elif args.nz is not None and z2 is None:
                p = LissajousParams(args.nx, args.ny, args.nz, phx, phy, _phase(args.phz))
                summary, _, visits = _knot_summary(p)
                plotting.render_diagram(p, visits, target)
                mode, count = "diagram", summary["crossings"]
            else:
                plotting.render_shadow(args.nx, args.ny, phx, phy, target)
                mode, count = "projection", len(double_points(args.nx, args.ny, phx, phy))
    except OSError as exc:
        raise InvalidInput(f"cannot write {exc.filename}: {exc.strerror}") from exc
    report = {"command": "render", "mode": mode, "path": target, "crossings" if mode != "csv" else "rows": count}
    _emit(report, args.json, out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lissaknot", description="Lissajous knot diagrams and invariants.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="print one JSON document")

    a = sub.add_parser("analyze", help="diagram and invariants of one Lissajous knot")
    a.add_argument("--nx", type=int, required=True)
    a.add_argument("--ny", type=int, required=True)
    a.add_argument("--nz", type=int, required=True)
    a.add_argument("--phx", default="0")
    a.add_argument("--phy", default="0")
    a.add_argument("--phz", default="0")
    a.add_argument("--figure", metavar="PATH", help="also draw the diagram (svg or png)")
    common(a)
    a.set_defaults(func=cmd_analyze)

    t = sub.add_parser("twist", help="the n_x = 2 twist-knot family member with m diamonds")
    t.add_argument("--m", type=int, required=True)
    t.add_argument("--nz", type=int)
    t.add_argument("--phz")
    t.add_argument("--figure", metavar="PATH")
    common(t)
    t.set_defaults(func=cmd_twist)

    f = sub.add_parser("family", help="knot types over the safe z-phase intervals")
    f.add_argument("--m", type=int, required=True)
    f.add_argument("--nz", type=int, required=True)
    common(f)
    f.set_defaults(func=cmd_family)

    c = sub.add_parser("construct", help="Lissajous projections for 2-bridge and (3,q) torus knots")
    csub = c.add_subparsers(dest="kind", required=True)
    tb = csub.add_parser("two-bridge")
    tb.add_argument("--word", required=True, help="3-strand braid, e.g. 2,2,2 or 2,2,-1,2")
    common(tb)
    to = csub.add_parser("torus")
    to.add_argument("--q", type=int, required=True)
    common(to)
    c.set_defaults(func=cmd_construct)

    r = sub.add_parser("render", help="draw a projection or write samples")
    dest = r.add_mutually_exclusive_group(required=True)
    dest.add_argument("--svg", metavar="PATH")
    dest.add_argument("--csv", metavar="PATH")
    r.add_argument("--nx", type=int, required=True)
    r.add_argument("--ny", type=int, required=True)
    r.add_argument("--nz", type=int)
    r.add_argument("--phx", default="0")
    r.add_argument("--phy", default="0")
    r.add_argument("--phz", default="0")
    r.add_argument("--arc", action="store_true", help="draw the zero-phase arc for t in [0, pi]")
    r.add_argument("--z2", help="height cos(n3 t+phi3)+cos(n4 t+phi4) as n3,phi3,n4,phi4")
    common(r)
    r.set_defaults(func=cmd_render)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    if args.command == "render" and args.csv and args.nz is None and not args.z2:
        print("error: --csv needs --nz or --z2", file=sys.stderr)
        return EXIT_INVALID
    try:
        return args.func(args, out)
    except (InvalidInput, LissaknotError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
