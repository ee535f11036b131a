"""Command-line interface: check, construct, search-rb, example, fmt.

Exit codes: 0 all checks passed / operation succeeded, 1 a checker
reported violations, 2 usage, parse or resolution error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .checkers import DEFAULT_WITNESS_CAP, check_instance
from .constructions import CONSTRUCTIONS
from .dsl import (Workspace, parse_workspace, serialize_workspace,
                  workspace_for_instance)
from .errors import (BihomegaError, ConditionViolated, ParseError,
                     PostconditionCheckFailed, PreconditionCheckFailed,
                     ResolutionError)
from .forge import (SearchConfig, brute_force_rb_search, two_dim_params,
                    two_dim_reading_report)
from .reports import REPORT_FORMAT_VERSION
from .semigroup import SemigroupTable, validate_semigroup

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_USAGE = 2


class _CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _read_workspace(path: str) -> Workspace:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_workspace(fh.read())
    except OSError as exc:
        raise _CliError(f"cannot read {path}: {exc}")


def _write_text(path: str | None, text: str):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _pick_algebra(ws: Workspace, name: str | None) -> tuple[str, object]:
    if name is not None:
        if name not in ws.algebras:
            raise _CliError(f"no algebra named {name!r} in the workspace")
        return name, ws.algebras[name]
    if len(ws.algebras) == 1:
        return next(iter(ws.algebras.items()))
    raise _CliError("workspace holds several algebras; pass --algebra NAME")


def _cmd_check(args) -> int:
    ws = _read_workspace(args.workspace)
    reports = []
    for name in sorted(ws.semigroups):
        report = validate_semigroup(ws.semigroups[name],
                                    max_witnesses=args.max_witnesses)
        reports.append((f"semigroup {name}", report))
    for name in sorted(ws.algebras):
        report = check_instance(ws.algebras[name],
                                max_witnesses=args.max_witnesses)
        reports.append((f"algebra {name}", report))
    if args.axiom is not None:
        filtered = []
        for label, report in reports:
            if args.axiom in report.axiom_names():
                filtered.append((label, report.restrict(args.axiom)))
        if not filtered:
            raise _CliError(f"no checked object has an axiom named {args.axiom!r}")
        reports = filtered
    if args.json:
        records = []
        for label, report in reports:
            record = report.to_dict()
            record["label"] = label
            records.append(record)
        doc = {
            "format_version": REPORT_FORMAT_VERSION,
            "tool_version": __version__,
            "reports": records,
        }
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for label, report in reports:
            for result in report.results:
                status = "PASS" if result.passed else "FAIL"
                suffix = ("" if result.passed
                          else f" ({result.total_violations} violations)")
                print(f"{status} {label} {result.axiom}{suffix}")
                for w in result.witnesses:
                    print(f"    witness {w.describe()}")
    return EXIT_OK if all(r.passed for _, r in reports) else EXIT_VIOLATIONS


def _resolve_named(ws: Workspace, namespace: str, ref: str):
    """Find a family by name in the workspace, or by NAME inside a
    second workspace file given as FILE:NAME or as a one-family FILE."""
    table = ws.rota_baxter if namespace == "rota_baxter" else ws.linear_maps
    if ref in table:
        return table[ref]
    path, _, name = ref.partition(":")
    if os.path.exists(path):
        other = _read_workspace(path)
        table = (other.rota_baxter if namespace == "rota_baxter"
                 else other.linear_maps)
        if name:
            if name not in table:
                raise _CliError(f"no {namespace} family named {name!r} in {path}")
            return table[name]
        if len(table) == 1:
            return next(iter(table.values()))
        raise _CliError(f"{path} holds {len(table)} {namespace} families; "
                        "use FILE:NAME")
    raise _CliError(f"no {namespace} family named {ref!r}")


def _cmd_construct(args) -> int:
    if args.name not in CONSTRUCTIONS:
        raise _CliError(f"unknown construction {args.name!r}; choose from "
                        + ", ".join(sorted(CONSTRUCTIONS)))
    ws = _read_workspace(args.input)
    alg_name, inst = _pick_algebra(ws, args.algebra)
    fn = CONSTRUCTIONS[args.name]
    kwargs = {"unchecked": args.unchecked}
    pos = [inst]
    if args.name in ("rb_star_associative", "rb_split_dendriform",
                     "rb_bracket_lie", "rb_lie_to_prelie", "lie_rb_to_postlie"):
        if args.rb is None:
            raise _CliError(f"construction {args.name!r} needs --rb NAME")
        pos.append(_resolve_named(ws, "rota_baxter", args.rb))
    elif args.name == "yau_twist":
        for flag, value in (("--p2", args.p2), ("--q2", args.q2)):
            if value is None:
                raise _CliError("yau_twist needs --p2 NAME and --q2 NAME")
        pos.append(_resolve_named(ws, "maps", args.p2))
        pos.append(_resolve_named(ws, "maps", args.q2))
    out = fn(*pos, **kwargs)
    omega_name = ws.semigroup_name(inst.omega)
    out_name = args.as_name or f"{alg_name}_{args.name}"
    out_ws = workspace_for_instance(out_name, omega_name, out)
    comments = [f"construction: {args.name}",
                f"input: {alg_name} (digest {inst.digest()})"]
    if out.provenance is not None:
        for key, value in out.provenance.parameters:
            comments.append(f"parameter {key}: {value}")
    _write_text(args.out, serialize_workspace(out_ws, tuple(comments)))
    return EXIT_OK


def _cmd_search_rb(args) -> int:
    ws = _read_workspace(args.algebra)
    alg_name, inst = _pick_algebra(ws, args.name)
    try:
        entries = tuple(Fraction(v) for v in args.entries.split(","))
        weight = Fraction(args.weight)
    except (ValueError, ZeroDivisionError) as exc:
        raise _CliError(f"bad rational: {exc}")
    cfg = SearchConfig(entries=entries, weight=weight,
                       target_count=args.limit)
    found = brute_force_rb_search(inst, cfg)
    omega_name = ws.semigroup_name(inst.omega)
    out_ws = Workspace()
    out_ws.semigroups[omega_name] = inst.omega
    for idx, rb in enumerate(found):
        name = f"rb{idx:03d}"
        out_ws.rota_baxter[name] = rb
        out_ws.omega_of[("rb", name)] = omega_name
    comments = (f"search-rb over {alg_name}: entries {args.entries}, "
                f"weight {weight}, found {len(found)}",)
    _write_text(args.out, serialize_workspace(out_ws, comments))
    print(f"found {len(found)} operator families", file=sys.stderr)
    return EXIT_OK


def _load_two_dim_params(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise _CliError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise _CliError(f"bad JSON in {path}: {exc}")
    try:
        om = doc["omega"]
        omega = SemigroupTable(tuple(om["elements"]),
                               tuple(tuple(row) for row in om["table"]),
                               bool(om.get("commutative", False)))
        c = [[Fraction(v) for v in row] for row in doc["c"]]
        rthree = [Fraction(v) for v in doc["rthree"]]
        lthree = [Fraction(v) for v in doc["lthree"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise _CliError(f"bad parameter document: {exc}")
    return two_dim_params(omega, c, rthree, lthree)


def _cmd_example(args) -> int:
    if args.which != "two-dim":
        raise _CliError(f"unknown example {args.which!r}; only 'two-dim' exists")
    params = _load_two_dim_params(args.params)
    bad = params.violations()
    if bad:
        for condition, indices in bad:
            print(f"FAIL side-condition {condition} at ({', '.join(indices)})")
        return EXIT_VIOLATIONS
    report = two_dim_reading_report(params)
    all_pass = True
    out_ws = Workspace()
    out_ws.semigroups["W"] = params.omega
    for reading, (inst, check) in report.items():
        verdict = "PASS" if check.passed else "FAIL"
        all_pass = all_pass and check.passed
        print(f"{verdict} two-dim reading={reading} "
              f"(q maps e2 to a multiple of {reading})")
        name = f"two_dim_{reading}"
        out_ws.algebras[name] = inst
        out_ws.omega_of[("algebra", name)] = "W"
    if args.out is not None:
        _write_text(args.out, serialize_workspace(
            out_ws, ("example: two-dim, both readings of the second "
                     "structure map",)))
    return EXIT_OK if all_pass else EXIT_VIOLATIONS


def _cmd_fmt(args) -> int:
    ws = _read_workspace(args.workspace)
    _write_text(args.out, serialize_workspace(ws))
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bihomega",
        description="Exact checkers and constructions for semigroup-indexed "
                    "twisted algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="run every axiom checker")
    p_check.add_argument("workspace")
    p_check.add_argument("--axiom", default=None)
    p_check.add_argument("--max-witnesses", type=int,
                         default=DEFAULT_WITNESS_CAP)
    p_check.add_argument("--json", action="store_true")
    p_check.set_defaults(fn=_cmd_check)

    p_con = sub.add_parser("construct", help="run a checked transform")
    p_con.add_argument("name")
    p_con.add_argument("--input", required=True)
    p_con.add_argument("--algebra", default=None)
    p_con.add_argument("--rb", default=None)
    p_con.add_argument("--p2", default=None)
    p_con.add_argument("--q2", default=None)
    p_con.add_argument("--as-name", default=None)
    p_con.add_argument("--out", default=None)
    p_con.add_argument("--unchecked", action="store_true")
    p_con.set_defaults(fn=_cmd_construct)

    p_search = sub.add_parser("search-rb",
                              help="brute-force operator family search")
    p_search.add_argument("--algebra", required=True)
    p_search.add_argument("--name", default=None)
    p_search.add_argument("--entries", default="-1,0,1")
    p_search.add_argument("--weight", default="0")
    p_search.add_argument("--limit", type=int, default=None)
    p_search.add_argument("--out", default=None)
    p_search.set_defaults(fn=_cmd_search_rb)

    p_ex = sub.add_parser("example", help="build a worked example")
    p_ex.add_argument("which")
    p_ex.add_argument("--params", required=True)
    p_ex.add_argument("--out", default=None)
    p_ex.set_defaults(fn=_cmd_example)

    p_fmt = sub.add_parser("fmt", help="rewrite a workspace canonically")
    p_fmt.add_argument("workspace")
    p_fmt.add_argument("--out", default=None)
    p_fmt.set_defaults(fn=_cmd_fmt)
    return parser


def _thread_cap() -> int:
    raw = os.environ.get("BIHOMEGA_THREADS")
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise _CliError(f"BIHOMEGA_THREADS must be an integer, got {raw!r}")
    if value < 1:
        raise _CliError("BIHOMEGA_THREADS must be positive")
    return value


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        _thread_cap()  # sequential execution always respects the cap
        return args.fn(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (ParseError, ResolutionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionCheckFailed, PostconditionCheckFailed) as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.report is not None:
            print(exc.report.summary(), file=sys.stderr)
        return EXIT_VIOLATIONS
    except ConditionViolated as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VIOLATIONS
    except BihomegaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
