"""Command-line front end.

Exit codes: 0 ok, 1 a computed result contradicts a known result,
2 usage or parse error, 3 bad input (including singular matrices),
4 inadmissible expansion query.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .field import FieldMode, NotRepresentable, format_element
from .geometry import DimensionMismatch, RelationId
from .groups import GroupId, Witness, classify, decompose_similarity, witness
from .lattice import (GeometryId, InadmissiblePair, build_report, check_leiras2,
                      contradictions, emit_dot, expected_leiras2, render_table)
from .linalg import SingularMatrix
from .transform import AffineMap, respects_exact

OK, CONTRADICTION, USAGE, BAD_INPUT, INADMISSIBLE = range(5)

# defining relations of the geometry whose automorphism group each group is
_DEFINING = {
    GroupId.EuclSim: (RelationId.CongE,),
    GroupId.PoiSim: (RelationId.Lambda,),
    GroupId.GalSim: (RelationId.CongS,),
    GroupId.TrivGalSim: (RelationId.CongS, RelationId.Rest),
    GroupId.TrivEuclSim: (RelationId.CongS, RelationId.Lambda),
}


class UsageError(Exception):
    pass


def _dim(text: str) -> int:
    d = int(text)
    if d < 2:
        raise argparse.ArgumentTypeError("dimension must be >= 2")
    return d


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def _field(text: str) -> FieldMode:
    try:
        return FieldMode.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _write(path, text: str) -> None:
    if str(path) == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


# -- subcommands -------------------------------------------------------------

def cmd_classify(args) -> int:
    try:
        raw = sys.stdin.read() if args.input == "-" else Path(args.input).read_text(encoding="utf-8")
        obj = json.loads(raw)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read affine map: {exc}") from exc
    a = AffineMap.from_json(obj, args.field)

    out: dict = {"field": args.field.name, "d": a.d}
    alarms = []
    for g in GroupId:
        verdict = classify(a, g)
        out[g.value] = verdict.to_json()
        if verdict.member != all(respects_exact(a, r) for r in _DEFINING[g]):
            alarms.append(g.value)
    out["respects"] = {r.value: respects_exact(a, r) for r in RelationId}

    decomp = {}
    for g in (GroupId.EuclSim, GroupId.GalSim):
        if out[g.value]["member"]:
            try:
                dec = decompose_similarity(a, g, args.field)
                decomp[g.value] = {"scale": format_element(dec.scale),
                                   "transformation": dec.transformation.to_json()}
            except NotRepresentable:
                decomp[g.value] = "not_representable"
    if decomp:
        out["decomposition"] = decomp
    sys.stdout.write(_dump(out))
    if alarms:
        print(f"contradiction: group membership disagrees with relation respect for {alarms}",
              file=sys.stderr)
        return CONTRADICTION
    return OK


def _csv_rows(report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["d", "relation", "geometry", "verdict", "evidence", "witness", "trials", "seed"])
    for d, section in sorted(report.sections.items()):
        for (rel, g), cell in section.cells.items():
            ev = cell.evidence
            w.writerow([d, rel.value, g.value, "in" if cell.member else "not_in", ev.kind,
                        ev.name or "", ev.trials if ev.kind == "sampled" else "", report.seed])
    return buf.getvalue()


def _alarm(report) -> int:
    problems = [p for s in report.sections.values() for p in contradictions(s)]
    for p in problems:
        print(f"contradiction: {p}", file=sys.stderr)
    return CONTRADICTION if problems else OK


def _figure_path(base: str, d: int, many: bool) -> Path:
    p = Path(base)
    return p.with_name(f"{p.stem}_d{d}{p.suffix}") if many else p


def cmd_table(args) -> int:
    report = build_report(args.dim, args.trials, args.seed)
    print(f"# seed={args.seed} trials={args.trials} field={args.field.name}")
    for d, section in sorted(report.sections.items()):
        print(f"# d={d}")
        sys.stdout.write(render_table(section))
    if args.json:
        payload = {"field": args.field.name, **report.to_json()}
        _write(args.json, _dump(payload))
    if args.csv:
        _write(args.csv, _csv_rows(report))
    if args.figure:
        from .plotting import plot_table
        for d, section in sorted(report.sections.items()):
            plot_table(section, _figure_path(args.figure, d, len(report.sections) > 1))
    return _alarm(report)


def cmd_hasse(args) -> int:
    report = build_report([args.dim], args.trials, args.seed)
    section = report.sections[args.dim]
    header = f"// seed={args.seed} trials={args.trials} d={args.dim} field={args.field.name}\n"
    _write(args.out, header + emit_dot(section))
    if args.figure:
        from .plotting import plot_hasse
        plot_hasse(section, args.figure)
    return _alarm(report)


def cmd_leiras2(args) -> int:
    try:
        g = GeometryId.parse(args.geometry)
        rel = RelationId.parse(args.relation)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    result = check_leiras2(g, rel, args.dim, args.trials, args.seed)
    out = {"field": args.field.name, "seed": args.seed, "trials": args.trials, **result.to_json()}
    expected = expected_leiras2(g, rel, args.dim)
    out["expected"] = expected.value if expected else None
    sys.stdout.write(_dump(out))
    if expected is not None and expected is not result.verdict:
        print(f"contradiction: expected {expected.value}, computed {result.verdict.value}",
              file=sys.stderr)
        return CONTRADICTION
    return OK


def cmd_witness(args) -> int:
    try:
        name = Witness.parse(args.name)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    a = witness(name, args.dim)
    if args.field.k is not None:
        a = a.in_field(args.field)
    sys.stdout.write(_dump(a.to_json()))
    return OK


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field, default=FieldMode(),
                        help="coordinate field: rational (default) or quadext:K for Q(sqrt K)")
    sampling = argparse.ArgumentParser(add_help=False)
    sampling.add_argument("--trials", type=_positive, default=1000)
    sampling.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="spacetime-lattice",
                                     description="Exact similarity groups and spacetime concept lattices.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="classify an affine map given as JSON")
    p.add_argument("--in", dest="input", required=True, help="JSON file, or - for stdin")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("table", parents=[common, sampling], help="rebuild the concept table")
    p.add_argument("--dim", type=_dim, nargs="+", required=True)
    p.add_argument("--json", help="write the full report as JSON")
    p.add_argument("--csv", help="write one delimited row per cell")
    p.add_argument("--figure", help="render the concept grid (PNG/SVG/PDF by extension)")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("hasse", parents=[common, sampling], help="emit the inclusion diagram as DOT")
    p.add_argument("--dim", type=_dim, required=True)
    p.add_argument("--out", required=True, help="DOT output file, or - for stdout")
    p.add_argument("--figure", help="also render the diagram with matplotlib")
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("leiras2", parents=[common, sampling],
                       help="check an expansion <G,R> against LClass")
    p.add_argument("--geometry", required=True)
    p.add_argument("--relation", required=True)
    p.add_argument("--dim", type=_dim, required=True)
    p.set_defaults(func=cmd_leiras2)

    p = sub.add_parser("witness", parents=[common], help="print a catalog map as JSON")
    p.add_argument("--name", required=True, choices=[w.value for w in Witness] + ["Swap"])
    p.add_argument("--dim", type=_dim, required=True)
    p.set_defaults(func=cmd_witness)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with 2 on usage errors
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except InadmissiblePair as exc:
        print(f"inadmissible: {exc}", file=sys.stderr)
        return INADMISSIBLE
    except (SingularMatrix, DimensionMismatch) as exc:
        print(f"bad input: {exc}", file=sys.stderr)
        return BAD_INPUT
    except ValueError as exc:
        print(f"bad input: {exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
