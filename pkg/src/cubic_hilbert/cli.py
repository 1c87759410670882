"""Command-line interface.

Subcommands:

  reduce       reduce a class to the standard chamber, recording the word
  classify     one family report, or every report for a (degree, genus)
  cohomology   fixed/mobile decomposition and (h0, h1, h2)
  h1-ideal     h1 of the ideal-sheaf twist for a family key
  verify-core  lattice hypotheses behind the non-reduced verdict
  quadric      bidegree family on the smooth quadric
  enumerate    all family keys with a given degree and genus
  sweep        classify a degree window; table, CSV, JSON and figure output
  verify       re-run a saved JSON envelope and compare results
  selftest     run the consistency suite

Every command wraps its payload in the envelope {schema_version,
command, input, result, warnings}.  JSON output is canonical: keys
sorted, integers plain, never a float.  Exit codes: 0 success, 1
internal inconsistency, 2 usage or domain error.  The coordinate bound
for parsed input (default 10^6) can be overridden through the
CUBIC_HILBERT_MAX_COORD environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import checks, classifier, picard, quadric, report, weyl
from .classifier import FamilyKey
from .cohomology import SystemAnalysis, decompose
from .errors import DomainError, InternalError
from .picard import DivisorClass

SCHEMA_VERSION = "1"
ENV_MAX_COORD = "CUBIC_HILBERT_MAX_COORD"


def _max_coord() -> int:
    raw = os.environ.get(ENV_MAX_COORD)
    if raw is None:
        return picard.DEFAULT_MAX_COORD
    try:
        bound = int(raw)
    except ValueError as exc:
        raise DomainError(f"{ENV_MAX_COORD} must be an integer, got {raw!r}") from exc
    if bound <= 0:
        raise DomainError(f"{ENV_MAX_COORD} must be positive, got {bound}")
    return bound


def _check_bound(value: int, what: str) -> int:
    bound = _max_coord()
    if abs(value) > bound:
        raise DomainError(f"{what} {value} exceeds the bound {bound}")
    return value


def _class_from_list(values) -> DivisorClass:
    if not isinstance(values, (list, tuple)) or len(values) != 7:
        raise DomainError(f"a class needs 7 integer coordinates, got {values!r}")
    coords = []
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int):
            raise DomainError(f"non-integer coordinate {v!r}")
        coords.append(_check_bound(v, "coordinate"))
    return DivisorClass.make(coords[0], coords[1:])


# ---------------------------------------------------------------- encoders

def _class_json(d: DivisorClass) -> list:
    return [d.a, *d.b]


def _word_json(word) -> list:
    out = []
    for r in word:
        if r.kind == "swap":
            out.append({"kind": "swap", "i": r.i, "j": r.j})
        else:
            out.append({"kind": "cremona"})
    return out


def _analysis_json(d: DivisorClass, a: SystemAnalysis) -> dict:
    return {
        "class": _class_json(d),
        "effective": a.effective,
        "fixed_part": [{"line": _class_json(line), "multiplicity": m}
                       for line, m in a.fixed_part],
        "mobile": _class_json(a.mobile),
        "mobile_kind": {"kind": a.mobile_kind.kind,
                        "conics": a.mobile_kind.conics},
        "peel_iterations": a.peel_iterations,
        "h0": a.h0, "h1": a.h1, "h2": a.h2,
        "chi": picard.euler_characteristic(d),
    }


def _core_json(c: classifier.CoreCheck) -> dict:
    return {
        "fixed_part_is_single_line": c.fixed_part_is_single_line,
        "d_minus_4h_effective": c.d_minus_4h_effective,
        "ce_is_2": c.ce_is_2,
        "c3he_nef_big": c.c3he_nef_big,
        "delta_effective": c.delta_effective,
        "delta_disjoint_e": c.delta_disjoint_e,
        "injectivity_inequality": c.injectivity_inequality,
        "h1_is_1": c.h1_is_1,
        "line": _class_json(c.line),
        "delta": _class_json(c.delta),
        "hypotheses_hold": c.hypotheses_hold,
        "consequences_hold": c.consequences_hold,
    }


def _report_json(r: classifier.FamilyReport) -> dict:
    return {
        "key": [r.key.a, *r.key.b],
        "d": r.d, "g": r.g, "in_omega": r.in_omega,
        "dim_w": r.dim_w, "chi_n": r.chi_n,
        "h1_ideal_3": r.h1_ideal_3, "h1_ideal_1": r.h1_ideal_1,
        "h1_oc3": r.h1_oc3, "h0_normal": r.h0_normal,
        "verdict": r.verdict.value,
        "kleppe_ellia_applies": r.kleppe_ellia_applies,
        "literature_flags": sorted(r.literature_flags),
        "core": _core_json(r.core) if r.core is not None else None,
    }


def _quadric_json(f: quadric.QuadricFamily) -> dict:
    return {
        "a": f.a, "b": f.b, "d": f.d, "g": f.g,
        "dim_w": f.dim_w, "h1_ideal_2": f.h1_ideal_2,
        "verdict": f.verdict, "codim": f.codim,
        "generically_smooth": f.generically_smooth,
    }


# ----------------------------------------------------------------- runners
# Runners map an input echo to a result dict; `verify` replays them.

def run_reduce(inp: dict, warnings: list) -> dict:
    d = _class_from_list(inp["class"])
    sf = weyl.standardize(d)
    return {
        "standard_class": _class_json(sf.standard),
        "word": _word_json(sf.word),
        "word_length": len(sf.word),
        "invariants": {
            "degree": picard.degree(d),
            "self_intersection": picard.self_intersection(d),
            "genus": picard.genus(d),
        },
    }


def run_classify(inp: dict, warnings: list) -> dict:
    if "class" in inp:
        key = FamilyKey.from_class(_class_from_list(inp["class"]))
        return {"report": _report_json(classifier.classify(key))}
    d = _check_bound(inp["degree"], "degree")
    g = _check_bound(inp["genus"], "genus")
    reports = [classifier.classify(k) for k in classifier.enumerate_keys(d, g)]
    return {"reports": [_report_json(r) for r in reports],
            "count": len(reports)}


def run_cohomology(inp: dict, warnings: list) -> dict:
    d = _class_from_list(inp["class"])
    return _analysis_json(d, decompose(d))


def run_h1_ideal(inp: dict, warnings: list) -> dict:
    key = FamilyKey.from_class(_class_from_list(inp["class"]))
    n = inp["n"]
    if isinstance(n, bool) or not isinstance(n, int):
        raise DomainError(f"twist must be an integer, got {n!r}")
    return {"h1": classifier.h1_ideal(key, n), "n": n}


def run_verify_core(inp: dict, warnings: list) -> dict:
    key = FamilyKey.from_class(_class_from_list(inp["class"]))
    return _core_json(classifier.verify_core(key))


def run_quadric(inp: dict, warnings: list) -> dict:
    a = _check_bound(inp["a"], "bidegree entry")
    b = _check_bound(inp["b"], "bidegree entry")
    return _quadric_json(quadric.classify_quadric(a, b))


def run_enumerate(inp: dict, warnings: list) -> dict:
    d = _check_bound(inp["degree"], "degree")
    g = _check_bound(inp["genus"], "genus")
    keys = classifier.enumerate_keys(d, g)
    paranoid_verified = None
    if inp.get("paranoid"):
        if d <= 16:
            brute = classifier.enumerate_keys_brute(d, g)
            if brute != keys:
                raise InternalError(
                    f"enumeration mismatch at (d,g)=({d},{g}): "
                    f"{len(keys)} bounded vs {len(brute)} brute keys")
            paranoid_verified = True
        else:
            warnings.append("paranoid cross-check skipped: degree above 16")
            paranoid_verified = False
    return {"keys": [[k.a, *k.b] for k in keys], "count": len(keys),
            "paranoid_verified": paranoid_verified}


def _sweep_reports(inp: dict) -> list:
    d_min = _check_bound(inp["d_min"], "degree")
    d_max = _check_bound(inp["d_max"], "degree")
    omega_only = inp["genus_mode"] == "omega_only"
    return list(classifier.sweep(d_min, d_max, omega_only))


def run_sweep(inp: dict, warnings: list) -> dict:
    reports = _sweep_reports(inp)
    return {"reports": [_report_json(r) for r in reports],
            "count": len(reports)}


RUNNERS = {
    "reduce": run_reduce,
    "classify": run_classify,
    "cohomology": run_cohomology,
    "h1-ideal": run_h1_ideal,
    "verify-core": run_verify_core,
    "quadric": run_quadric,
    "enumerate": run_enumerate,
    "sweep": run_sweep,
}


# ------------------------------------------------------------- presentation

def _envelope(command: str, inp: dict, result: dict, warnings: list) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command,
            "input": inp, "result": result, "warnings": warnings}


def _render_json(env: dict) -> str:
    return json.dumps(env, sort_keys=True, separators=(",", ":")) + "\n"


def _table_lines(value, indent: str = "") -> list:
    lines = []
    if isinstance(value, dict):
        width = max((len(str(k)) for k in value), default=0)
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v and not _is_flat(v):
                lines.append(f"{indent}{k}:")
                lines.extend(_table_lines(v, indent + "  "))
            else:
                lines.append(f"{indent}{str(k).ljust(width)}  {_scalar(v)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                lines.append(f"{indent}-")
                lines.extend(_table_lines(item, indent + "  "))
            else:
                lines.append(f"{indent}- {_scalar(item)}")
    else:
        lines.append(f"{indent}{_scalar(value)}")
    return lines


def _is_flat(v) -> bool:
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) for x in v)
    return False


def _scalar(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    if isinstance(v, list):
        return "[" + ",".join(str(x) for x in v) + "]"
    return str(v)


def _sweep_table(reports: list) -> str:
    rows = [report.csv_row(r) for r in reports]
    cols = report.CSV_COLUMNS
    widths = {c: max([len(c)] + [len(str(row[c])) for row in rows]) for c in cols}
    out = ["  ".join(c.rjust(widths[c]) for c in cols)]
    for row in rows:
        out.append("  ".join(str(row[c]).rjust(widths[c]) for c in cols))
    return "\n".join(out) + "\n"


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fp:
            fp.write(text)
    else:
        sys.stdout.write(text)


def _finish(command: str, inp: dict, args: argparse.Namespace) -> int:
    warnings: list = []
    result = RUNNERS[command](inp, warnings)
    env = _envelope(command, inp, result, warnings)
    if args.format == "json":
        text = _render_json(env)
    else:
        lines = _table_lines(result)
        for w in warnings:
            lines.append(f"warning: {w}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


# ----------------------------------------------------------------- commands

def cmd_reduce(args) -> int:
    return _finish("reduce", {"class": _parsed_class(args)}, args)


def cmd_classify(args) -> int:
    if args.cls is not None:
        if args.degree is not None or args.genus is not None or args.all:
            raise DomainError("use either --class or --degree/--genus --all")
        inp = {"class": _parsed_class(args)}
    else:
        if args.degree is None or args.genus is None:
            raise DomainError("need --class, or --degree and --genus with --all")
        if not args.all:
            raise DomainError("--degree/--genus classification requires --all")
        inp = {"degree": args.degree, "genus": args.genus, "all": True}
    return _finish("classify", inp, args)


def cmd_cohomology(args) -> int:
    return _finish("cohomology", {"class": _parsed_class(args)}, args)


def cmd_h1_ideal(args) -> int:
    return _finish("h1-ideal", {"class": _parsed_class(args), "n": args.n}, args)


def cmd_verify_core(args) -> int:
    return _finish("verify-core", {"class": _parsed_class(args)}, args)


def cmd_quadric(args) -> int:
    parts = args.bidegree.split(",")
    if len(parts) != 2:
        raise DomainError(f"bidegree must be 'a,b', got {args.bidegree!r}")
    try:
        a, b = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise DomainError(f"non-integer bidegree {args.bidegree!r}") from exc
    return _finish("quadric", {"a": a, "b": b}, args)


def cmd_enumerate(args) -> int:
    inp = {"degree": args.degree, "genus": args.genus,
           "paranoid": bool(args.paranoid)}
    return _finish("enumerate", inp, args)


def cmd_sweep(args) -> int:
    d_min, d_max = _parse_range(args.degrees)
    inp = {"d_min": d_min, "d_max": d_max, "genus_mode": args.genus_mode}
    warnings: list = []
    reports = _sweep_reports(inp)
    result = {"reports": [_report_json(r) for r in reports],
              "count": len(reports)}
    env = _envelope("sweep", inp, result, warnings)
    if args.format == "json":
        text = _render_json(env)
    elif args.format == "csv":
        import io
        buf = io.StringIO()
        report.write_csv(reports, buf)
        text = buf.getvalue()
    else:
        text = _sweep_table(reports)
    _emit(text, args.out)
    if args.figure:
        report.save_verdict_figure(reports, args.figure)
    return 0


def cmd_verify(args) -> int:
    try:
        with open(args.file) as fp:
            env = json.load(fp)
    except (OSError, json.JSONDecodeError) as exc:
        raise DomainError(f"cannot read envelope: {exc}") from exc
    for field in ("schema_version", "command", "input", "result"):
        if field not in env:
            raise DomainError(f"envelope is missing {field!r}")
    if env["schema_version"] != SCHEMA_VERSION:
        raise DomainError(f"unsupported schema version {env['schema_version']!r}")
    command = env["command"]
    if command not in RUNNERS:
        raise DomainError(f"unknown command {command!r} in envelope")
    warnings: list = []
    result = RUNNERS[command](env["input"], warnings)
    if result != env["result"]:
        sys.stderr.write(f"verify: result mismatch for {command}\n")
        return 1
    sys.stdout.write(f"verified: {args.file}\n")
    return 0


def cmd_selftest(args) -> int:
    results = checks.run_all(fast=args.fast)
    failed = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        line = f"{status} {r.name} (checked {r.checked})"
        if not r.passed:
            line += f": {r.detail}"
            failed += 1
        sys.stdout.write(line + "\n")
    sys.stdout.write(f"{len(results) - failed}/{len(results)} checks passed\n")
    return 0 if failed == 0 else 1


# ------------------------------------------------------------------ parsing

def _parsed_class(args) -> list:
    d = picard.parse_class(args.cls, _max_coord())
    return _class_json(d)


def _parse_range(text: str) -> tuple:
    parts = text.split(":")
    try:
        if len(parts) == 1:
            lo = hi = int(parts[0])
        elif len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
        else:
            raise ValueError(text)
    except ValueError as exc:
        raise DomainError(f"degree range must be 'min:max' or 'd', got {text!r}") from exc
    return lo, hi


def _add_common(p: argparse.ArgumentParser, formats=("table", "json")) -> None:
    p.add_argument("--format", choices=formats, default="table",
                   help="output format (default table)")
    p.add_argument("--out", metavar="FILE", default=None,
                   help="write output to FILE instead of stdout")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubic-hilbert",
        description="Divisor-class invariants and Hilbert-scheme family "
                    "verdicts for curves on smooth cubic surfaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="reduce a class to the standard chamber")
    p.add_argument("--class", dest="cls", required=True, metavar="A,B1..B6")
    _add_common(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("classify", help="family report(s)")
    p.add_argument("--class", dest="cls", metavar="A,B1..B6")
    p.add_argument("--degree", type=int)
    p.add_argument("--genus", type=int)
    p.add_argument("--all", action="store_true",
                   help="classify every key with the given degree and genus")
    _add_common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("cohomology", help="decomposition and (h0, h1, h2)")
    p.add_argument("--class", dest="cls", required=True, metavar="A,B1..B6")
    _add_common(p)
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("h1-ideal", help="h1 of the ideal-sheaf twist")
    p.add_argument("--class", dest="cls", required=True, metavar="A,B1..B6")
    p.add_argument("--n", type=int, required=True, help="twist degree n >= 0")
    _add_common(p)
    p.set_defaults(func=cmd_h1_ideal)

    p = sub.add_parser("verify-core", help="non-reduced verdict hypotheses")
    p.add_argument("--class", dest="cls", required=True, metavar="A,B1..B6")
    _add_common(p)
    p.set_defaults(func=cmd_verify_core)

    p = sub.add_parser("quadric", help="bidegree family on the quadric")
    p.add_argument("--bidegree", required=True, metavar="A,B")
    _add_common(p)
    p.set_defaults(func=cmd_quadric)

    p = sub.add_parser("enumerate", help="keys with given degree and genus")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--paranoid", action="store_true",
                   help="re-verify completeness by brute force (d <= 16)")
    _add_common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("sweep", help="classify a whole degree window")
    p.add_argument("--degrees", required=True, metavar="MIN:MAX")
    p.add_argument("--genus-mode", choices=("omega_only", "all"),
                   default="omega_only")
    p.add_argument("--figure", metavar="FILE", default=None,
                   help="also render a (d, g) verdict figure to FILE")
    _add_common(p, formats=("table", "csv", "json"))
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="re-run a saved JSON envelope")
    p.add_argument("file", metavar="FILE")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("selftest", help="run the consistency suite")
    p.add_argument("--fast", action="store_true",
                   help="smaller ranges, for a quick smoke pass")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except InternalError as exc:
        sys.stderr.write(f"internal error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
