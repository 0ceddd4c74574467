"""Command-line interface.

Commands:
  analyze <file>          classification, graph, and all checks as JSON
  corpus <dir>            analyze every group file; reports + CSV summary
  witness <name>          rebuild a registered witness group and emit it
  graph <file>            export the commuting graph (dot or json)

Exit codes: 0 ok, 1 input error, 2 check failure, 3 fingerprint defect.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .errors import AgcError
from .graph import CommutingGraph
from .groupfile import group_to_file, load_group, serialize_group_file
from .perm import DEFAULT_MAX_ORDER
from .verify import group_report, report_summary_row
from .witness import (
    WITNESS_BUILDERS,
    WITNESS_FINGERPRINTS,
    build_witness,
    diameter6_extra_checks,
    witness_fingerprint,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CHECK_FAILURE = 2
EXIT_FINGERPRINT_DEFECT = 3

SUMMARY_COLUMNS = ["name", "order", "derived_length", "center_order", "a_group",
                   "frobenius", "two_frobenius", "hypothesis", "connected",
                   "diameter", "all_pass"]


def _max_order(args: argparse.Namespace) -> int:
    if args.max_order is not None:
        return args.max_order
    env = os.environ.get("AGC_MAX_ORDER")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise AgcError(f"AGC_MAX_ORDER is not an integer: {env!r}")
    return DEFAULT_MAX_ORDER


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        tmp = Path(out).with_suffix(Path(out).suffix + ".tmp")
        tmp.write_text(text)
        tmp.replace(out)


def _coerce(value):
    """Make numpy scalars and arrays JSON-serializable."""
    import numpy as np

    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError(f"not JSON-serializable: {type(value).__name__}")


def _report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=False, default=_coerce) + "\n"


def cmd_analyze(args: argparse.Namespace) -> int:
    try:
        G = load_group(args.file, max_order=_max_order(args))
    except (AgcError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    report = group_report(G)
    _write_output(_report_json(report), args.out)
    failed = any(c["status"] == "fail" for c in report["checks"])
    return EXIT_CHECK_FAILURE if failed else EXIT_OK


def _analyze_one(path_and_cap: tuple[str, int]) -> tuple[str, dict | None, dict | None, str | None]:
    """Worker: returns (path, report, summary_row, error message)."""
    path, cap = path_and_cap
    try:
        G = load_group(path, max_order=cap)
    except (AgcError, OSError) as exc:
        return path, None, None, str(exc)
    report = group_report(G)
    row = report_summary_row(G)
    row["name"] = G.name if G.name is not None else Path(path).stem
    return path, report, row, None


def _summary_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=SUMMARY_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: row[k] for k in SUMMARY_COLUMNS})
    return buf.getvalue()


def cmd_corpus(args: argparse.Namespace) -> int:
    directory = Path(args.dir)
    if not directory.is_dir():
        print(f"error: {directory} is not a directory", file=sys.stderr)
        return EXIT_INPUT
    paths = sorted(str(p) for p in directory.glob("*.json"))
    if not paths:
        print(f"error: no group files in {directory}", file=sys.stderr)
        return EXIT_INPUT
    cap = _max_order(args)
    work = [(p, cap) for p in paths]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_analyze_one, work))
    else:
        results = [_analyze_one(w) for w in work]

    skipped = []
    reports = []
    rows = []
    for path, report, row, err in results:
        if err is not None:
            skipped.append({"file": path, "error": err})
            continue
        reports.append(report)
        rows.append(row)
    # deterministic assembly regardless of executor scheduling
    reports.sort(key=lambda r: (r["fingerprint"]["order"],
                                str(r["fingerprint"]["name"])))
    rows.sort(key=lambda r: (r["order"], str(r["name"])))

    payload = {"reports": reports, "skipped": skipped}
    if args.out is None:
        sys.stdout.write(_report_json(payload))
        sys.stdout.write(_summary_csv(rows))
    else:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        _write_output(_report_json(payload), str(outdir / "reports.json"))
        _write_output(_summary_csv(rows), str(outdir / "summary.csv"))

    if skipped:
        for entry in skipped:
            print(f"skipped {entry['file']}: {entry['error']}", file=sys.stderr)
        if args.strict:
            return EXIT_INPUT
    failed = any(c["status"] == "fail" for r in reports for c in r["checks"])
    return EXIT_CHECK_FAILURE if failed else EXIT_OK


def cmd_witness(args: argparse.Namespace) -> int:
    if args.name not in WITNESS_BUILDERS:
        print(f"error: unknown witness {args.name!r}; "
              f"choices: {', '.join(sorted(WITNESS_BUILDERS))}", file=sys.stderr)
        return EXIT_INPUT
    G = build_witness(args.name)
    fp = witness_fingerprint(G)
    target = WITNESS_FINGERPRINTS[args.name]
    defects = {k: (fp.get(k), v) for k, v in target.items() if fp.get(k) != v}
    if args.name == "diameter-6":
        extras = diameter6_extra_checks(G)
        for key, ok in extras.items():
            if not ok:
                defects[key] = (False, True)
    if defects:
        print(f"error: witness fingerprint defect: {defects}", file=sys.stderr)
        return EXIT_FINGERPRINT_DEFECT
    text = serialize_group_file(group_to_file(G))
    _write_output(text, args.emit)
    return EXIT_OK


def cmd_graph(args: argparse.Namespace) -> int:
    try:
        G = load_group(args.file, max_order=_max_order(args))
    except (AgcError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    graph = CommutingGraph(G)
    if args.format == "dot":
        text = graph.to_dot()
    else:
        text = graph.to_json()
    _write_output(text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="agc",
        description="commuting-graph analysis of finite permutation groups",
    )
    parser.add_argument("--max-order", type=int, default=None,
                        help="cap for group closure (env AGC_MAX_ORDER)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze one group file")
    p.add_argument("file")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("corpus", help="analyze every group file in a directory")
    p.add_argument("dir")
    p.add_argument("--out", default=None,
                   help="directory for reports.json and summary.csv")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--strict", action="store_true",
                   help="fail on unreadable group files")
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("witness", help="rebuild and emit a witness group")
    p.add_argument("name")
    p.add_argument("--emit", default=None, help="output group file path")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("graph", help="export the commuting graph")
    p.add_argument("file")
    p.add_argument("--format", choices=["dot", "json"], default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_graph)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except AgcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
