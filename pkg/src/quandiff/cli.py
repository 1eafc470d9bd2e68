"""Command-line front end.

Exit status is 0 on success, 1 for invalid codes or quandles (one-line
diagnostic on stderr) and 2 for usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import gauss
from .census import CensusConfig, export_csv, export_json, run_census
from .gauss import (EnumerationConfig, GaussCodeError, flip, is_evenly_intersticed,
                    is_r1_reducible, is_r2_reducible, parse_code, to_text, to_vector)
from .homcount import invariant_report
from .presentation import (GfixError, presentation_matrix, relations_for)
from .quandle import (BUILTIN_NAMES, MalformedTableError, UnknownQuandleError, builtin,
                      check_axioms, is_connected, load_quandle, parse_quandle,
                      serialize_table)


class DomainError(Exception):
    pass


def _read_arg(value: str) -> str:
    if value.startswith("@"):
        try:
            with open(value[1:]) as fh:
                return fh.read().strip()
        except OSError as e:
            raise DomainError(f"cannot read {value[1:]}: {e.strerror}") from None
    return value


def _code(value: str):
    return parse_code(_read_arg(value))


def _quandle(value: str):
    try:
        q = load_quandle(value)
    except UnknownQuandleError:
        raise DomainError(f"unknown quandle {value!r}") from None
    report = check_axioms(q)
    if not report.ok:
        raise DomainError(f"{value} is not a quandle: {'; '.join(report.failures())}")
    return q


def _emit(args, text: str, payload: dict) -> None:
    print(json.dumps(payload) if getattr(args, "json", False) else text)


def cmd_quandle_verify(args):
    try:
        with open(args.file) as fh:
            q = parse_quandle(fh.read())
    except OSError as e:
        raise DomainError(f"cannot read {args.file}: {e.strerror}") from None
    report = check_axioms(q)
    if not report.ok:
        raise DomainError("invalid: " + "; ".join(report.failures()))
    conn = is_connected(q)
    _emit(args, "valid, connected" if conn else "valid, not connected",
          {"valid": True, "connected": conn, "order": q.order})


def cmd_quandle_show(args):
    try:
        q = builtin(args.name)
    except UnknownQuandleError:
        raise DomainError(f"unknown quandle {args.name!r}") from None
    print(serialize_table(q))


def cmd_quandle_list(args):
    for name in BUILTIN_NAMES:
        print(f"{name} order={builtin(name).order}")


def cmd_code_parse(args):
    c = _code(args.code)
    _emit(args, f"text={to_text(c)} vector={to_vector(c)}",
          {"text": to_text(c), "vector": to_vector(c),
           "crossings": c.crossings, "components": len(c.components)})


def cmd_code_flip(args):
    c = flip(_code(args.code))
    print(to_vector(c) if args.vector else to_text(c))


def cmd_code_check(args):
    c = _code(args.code)
    even = is_evenly_intersticed(c)
    r1 = is_r1_reducible(c, cyclic=True)
    r2 = is_r2_reducible(c, cyclic=True)
    text = "valid; {}evenly intersticed; r1:{}; r2:{}".format(
        "" if even else "not ", "yes" if r1 else "no", "yes" if r2 else "no")
    _emit(args, text,
          {"valid": True, "evenlyIntersticed": even, "r1": r1, "r2": r2})


def cmd_code_presentation(args):
    c = _code(args.code)
    if args.matrix:
        print(presentation_matrix(c, args.side))
    else:
        print(relations_for(c, args.side))


def cmd_invariant(args):
    rep = invariant_report(_code(args.code), _quandle(args.quandle))
    d = rep.as_dict()
    _emit(args, f"upper={d['upper']} lower={d['lower']} qd={d['qd']}", d)


def _census_config(args, crossings):
    quandles = tuple(q for q in args.quandles.split(",") if q)
    for q in quandles:
        _quandle(q)
    return CensusConfig(
        crossings=crossings, quandles=quandles, jobs=args.jobs,
        labeling=args.labeling, cyclic_canonical=args.cyclic_canonical,
        require_non_even=args.require_non_even, r1_cyclic=not args.linear_r1,
        r2_cyclic=not args.linear_r2, r2_nested=not args.no_r2_nested,
        r2_interleaved=not args.no_r2_interleaved)


def _report(args, result):
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(export_csv(result))
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(export_json(result) + "\n")
    print(f"crossings={result.crossings} total={result.total_codes}")
    for q in result.quandles:
        print(f"{q} detected={result.per_quandle.get(q, 0)}")
    print(f"nontrivial={result.nontrivial_codes} "
          f"detected_among_nontrivial={result.detected_among_nontrivial} "
          f"percent={result.percent_detected:.0f}%")


def cmd_census(args):
    try:
        cfg = _census_config(args, args.crossings)
    except ValueError as e:
        raise DomainError(str(e)) from None
    _report(args, run_census(cfg))


def cmd_table1(args):
    args.quandles = ",".join(BUILTIN_NAMES)
    _report(args, run_census(_census_config(args, 4)))


def _census_flags(p):
    d = EnumerationConfig()
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--csv", metavar="FILE")
    p.add_argument("--json", metavar="FILE")
    p.add_argument("--labeling", choices=[gauss.FREE, gauss.FIRST_OCCURRENCE],
                   default=d.labeling)
    p.add_argument("--cyclic-canonical", action="store_true")
    p.add_argument("--require-non-even", action="store_true",
                   help="drop evenly intersticed codes")
    p.add_argument("--linear-r1", action="store_true",
                   help="R1 adjacency does not wrap around")
    p.add_argument("--linear-r2", action="store_true",
                   help="R2 adjacency does not wrap around")
    p.add_argument("--no-r2-nested", action="store_true")
    p.add_argument("--no-r2-interleaved", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quandiff",
        description="Quandle counting and difference invariants of virtual knots.")
    sub = parser.add_subparsers(dest="command", required=True)

    qp = sub.add_parser("quandle", help="finite quandle tables")
    qsub = qp.add_subparsers(dest="action", required=True)
    p = qsub.add_parser("verify")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_quandle_verify)
    p = qsub.add_parser("show")
    p.add_argument("name")
    p.set_defaults(func=cmd_quandle_show)
    p = qsub.add_parser("list")
    p.set_defaults(func=cmd_quandle_list)

    cp = sub.add_parser("code", help="Gauss code utilities")
    csub = cp.add_subparsers(dest="action", required=True)
    p = csub.add_parser("parse")
    p.add_argument("code")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_code_parse)
    p = csub.add_parser("flip")
    p.add_argument("code")
    p.add_argument("--vector", action="store_true")
    p.set_defaults(func=cmd_code_flip)
    p = csub.add_parser("check")
    p.add_argument("code")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_code_check)
    p = csub.add_parser("presentation")
    p.add_argument("code")
    p.add_argument("--side", choices=["upper", "lower"], default="upper")
    p.add_argument("--matrix", action="store_true")
    p.set_defaults(func=cmd_code_presentation)

    p = sub.add_parser("invariant", help="Q2 pair and difference invariant")
    p.add_argument("--code", required=True)
    p.add_argument("--quandle", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("census", help="detection statistics over enumerated codes")
    p.add_argument("--crossings", type=int, required=True)
    p.add_argument("--quandles", default=",".join(BUILTIN_NAMES))
    _census_flags(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("table1", help="4-crossing census with the six built-ins")
    _census_flags(p)
    p.set_defaults(func=cmd_table1)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        args.func(args)
    except (DomainError, GaussCodeError, MalformedTableError, GfixError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
