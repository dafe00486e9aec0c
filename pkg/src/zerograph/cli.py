"""Command-line front end.

Exit status: 0 when every requested check passes, 1 when a check fails or a
computation errors, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import theorems
from .graphs import KINDS, build_graph, export_dot, graph_report, values_csv
from .metrics import partitions_csv, verify_theorem_6_1
from .symchar import ResourceLimitError
from .tableio import (
    CharTable,
    TableError,
    TableValidationError,
    VerificationReport,
    cache_dir,
    dumps,
    ingest,
    iter_fixtures,
    load_fixture,
)

CHECKS = (
    "thm-a",
    "nk",
    "connectivity",
    "lemma-3-5",
    "van-rigidity",
    "metrics",
    "coprime",
    "min-degree",
    "mod2",
    "signature-pairs",
    "small-alternating",
    "fixtures",
    "all",
)


class UsageError(Exception):
    pass


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def resolve_group(spec: str, tables: theorems.TableProvider) -> CharTable:
    """``sn:N``, ``an:N``, ``file:PATH`` or ``fixture:NAME``."""
    kind, sep, arg = spec.partition(":")
    if not sep or not arg:
        raise UsageError(f"bad group specifier {spec!r}; expected sn:N, an:N, file:PATH or fixture:NAME")
    if kind in ("sn", "an"):
        try:
            n = int(arg)
        except ValueError:
            raise UsageError(f"bad group size in {spec!r}") from None
        return tables.sn(n).table if kind == "sn" else tables.an(n)
    if kind == "file":
        return ingest(arg)
    if kind == "fixture":
        return load_fixture(arg)
    raise UsageError(f"unknown group kind {kind!r}")


def _report_out(reports: list[VerificationReport], json_path: str | None) -> int:
    for r in reports:
        print(r.summary())
    ok = all(r.passed for r in reports)
    if json_path:
        bundle = {"status": "pass" if ok else "fail", "reports": [r.to_dict() for r in reports]}
        _write(json_path, _json_text(bundle))
    return 0 if ok else 1


def _ns(args, fn, lo: int, hi: int, tables) -> list[VerificationReport]:
    if args.n is not None:
        return [fn(args.n, tables)]
    return [fn(n, tables) for n in range(lo, min(hi, args.max_n) + 1)]


def cmd_table(args, tables) -> int:
    t = tables.sn(args.n).table if args.kind == "sn" else tables.an(args.n)
    _write(args.out, dumps(t))
    if args.csv:
        _write(args.csv, values_csv(t))
    return 0


def cmd_graph(args, tables) -> int:
    t = resolve_group(args.group, tables)
    g = build_graph(t, args.kind)
    comps = g.components()
    print(f"{args.kind}({t.name}): {len(g.vertices)} vertices, {len(g.witnesses)} edges, {len(comps)} components")
    for c in comps:
        print(f"  diameter {c.diameter}: " + " ".join(g.labels[x] for x in c.vertices))
    if args.dot:
        _write(args.dot, export_dot(g))
    if args.json:
        _write(args.json, _json_text(graph_report(g)))
    return 0


def cmd_verify(args, tables) -> int:
    check = args.check
    ranges = theorems.DEFAULT_RANGES
    if check == "all":
        reports = theorems.run_all(args.max_n, tables)
    elif check == "fixtures":
        reports = [theorems.verify_fixtures()]
    elif check == "small-alternating":
        reports = [theorems.verify_small_alternating(tables)]
    elif check == "coprime":
        if args.group:
            reports = [theorems.verify_coprime_noncontainment(resolve_group(args.group, tables))]
        else:
            top = args.n if args.n is not None else args.max_n
            reports = []
            for n in range(2, top + 1):
                reports.append(theorems.verify_coprime_noncontainment(tables.sn(n).table))
                if n >= 3:
                    reports.append(theorems.verify_coprime_noncontainment(tables.an(n)))
            reports += [theorems.verify_coprime_noncontainment(t) for t in iter_fixtures()]
    elif check == "nk":
        if args.n is not None:
            reports = [theorems.verify_nk_lists(args.n, tables)]
        else:
            reports = [theorems.verify_nk_lists(n, tables) for n in theorems.NK_DEFAULT if n <= args.max_n]
    else:
        fn = {
            "thm-a": theorems.verify_theorem_a,
            "connectivity": theorems.verify_connectivity,
            "lemma-3-5": theorems.verify_lemma_3_5,
            "van-rigidity": theorems.verify_van_rigidity,
            "metrics": verify_theorem_6_1,
            "min-degree": theorems.verify_min_degree,
            "mod2": theorems.verify_mod2,
            "signature-pairs": theorems.verify_signature_pairs,
        }[check]
        reports = _ns(args, fn, *ranges[check], tables)
        if check == "connectivity" and args.n is None:
            reports.append(theorems.verify_small_alternating(tables))
    return _report_out(reports, args.json)


def cmd_ingest(args, tables) -> int:
    try:
        t = ingest(args.path)
    except TableValidationError as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        if args.json:
            _write(args.json, _json_text(exc.report.to_dict()))
        return 1
    print(f"ok {t.name}: order {t.order}, {len(t.classes)} classes")
    if args.out:
        _write(args.out, dumps(t))
    return 0


def cmd_metrics(args, tables) -> int:
    report = verify_theorem_6_1(args.n, tables)
    if args.csv:
        _write(args.csv, partitions_csv(tables.sn(args.n).table))
    return _report_out([report], args.json)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS, help="worker cap (default: all cores)")
    common.add_argument("--no-cache", action="store_true", default=argparse.SUPPRESS, help="ignore the table cache")
    common.add_argument("--cache-dir", default=argparse.SUPPRESS, help="cache directory (default: $ZEROGRAPH_CACHE_DIR)")

    p = argparse.ArgumentParser(prog="zerograph", description="Common-zero graphs of character tables.", parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", parents=[common], help="compute and serialize a character table")
    t.add_argument("kind", choices=("sn", "an"))
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--out", help="JSON output path (default: stdout)")
    t.add_argument("--csv", help="also write the values as CSV")
    t.set_defaults(func=cmd_table)

    g = sub.add_parser("graph", parents=[common], help="build a graph and report components")
    g.add_argument("kind", choices=KINDS)
    g.add_argument("--group", required=True, help="sn:N, an:N, file:PATH or fixture:NAME")
    g.add_argument("--dot", help="write DOT here")
    g.add_argument("--json", help="write a JSON report here")
    g.set_defaults(func=cmd_graph)

    v = sub.add_parser("verify", parents=[common], help="run a named check")
    v.add_argument("check", choices=CHECKS)
    v.add_argument("--n", type=int, help="a single n (default: the check's standard range)")
    v.add_argument("--max-n", type=int, default=12, help="cap on the standard range (default 12)")
    v.add_argument("--group", help="table for the coprime check")
    v.add_argument("--json", help="write the report bundle here")
    v.set_defaults(func=cmd_verify)

    i = sub.add_parser("ingest", parents=[common], help="validate a table file")
    i.add_argument("path")
    i.add_argument("--out", help="write the normalized table here")
    i.add_argument("--json", help="write the validation report here on failure")
    i.set_defaults(func=cmd_ingest)

    m = sub.add_parser("metrics", parents=[common], help="metric partitions")
    msub = m.add_subparsers(dest="metrics_command", required=True)
    pe = msub.add_parser("pequiv", parents=[common], help="pairwise non-equivalence of faithful metrics of S_n")
    pe.add_argument("--n", type=int, required=True)
    pe.add_argument("--csv", help="dump every faithful character's partition as CSV")
    pe.add_argument("--json", help="write the report here")
    pe.set_defaults(func=cmd_metrics)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    threads = getattr(args, "threads", None)
    if threads is not None and threads < 1:
        parser.print_usage(sys.stderr)
        print("zerograph: error: --threads must be positive", file=sys.stderr)
        return 2
    cache = None if getattr(args, "no_cache", False) else cache_dir(getattr(args, "cache_dir", None))
    tables = theorems.TableProvider(threads=threads, cache=cache)
    try:
        return args.func(args, tables)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"zerograph: error: {exc}", file=sys.stderr)
        return 2
    except (TableError, ResourceLimitError, ValueError, OSError, ArithmeticError) as exc:
        print(f"zerograph: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
