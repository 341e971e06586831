"""Command line entry point: ``stratum-atlas analyze|sweep|verify``."""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import verify
from .abelian import DEFAULT_CLOSURE_BOUND
from .errors import AtlasError
from .report import CSV_FIELDS, analyze, csv_rows, signature_report, text_lines
from .sweep import enumerate_signatures

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _index_list(text: str) -> list[int]:
    """``"1,3"`` -> ``[0, 2]``; indices on the command line are 1-based."""
    try:
        values = [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad index list {text!r}") from None
    if any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("indices are 1-based")
    return [v - 1 for v in values]


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _emit_reports(reports, fmt: str, out) -> None:
    if fmt == "json":
        for rep in reports:
            out.write(_dump(rep) + "\n")
    elif fmt == "csv":
        writer = csv.DictWriter(out, fieldnames=CSV_FIELDS, lineterminator="\n")
        writer.writeheader()
        for rep in reports:
            writer.writerows(csv_rows(rep))
    else:
        for rep in reports:
            for line in text_lines(rep):
                out.write(line + "\n")


def _cmd_analyze(args, out) -> int:
    rep = analyze(args.signature, args.mark, args.oracle_bound)
    _emit_reports([rep], args.format, out)
    if not rep["valid"]:
        return EXIT_INPUT
    return EXIT_FAIL if rep["status"] == "mismatch" else EXIT_OK


def _cmd_sweep(args, out) -> int:
    status = EXIT_OK
    reports = []
    for sig in enumerate_signatures(args.max_sings, args.max_deg, args.genus):
        rep = signature_report(sig, None, args.oracle_bound)
        if rep["status"] == "mismatch":
            status = EXIT_FAIL
        reports.append(rep)
    _emit_reports(reports, args.format, out)
    return status


# CLI flag -> keyword of the suite function
_SUITE_OPTIONS = {
    "master-identity": ("max_sings", "max_deg", "genus"),
    "dk": ("max_sings", "max_deg"),
    "theta-kernel": ("max_sings", "max_deg"),
    "hyperelliptic": ("max_value",),
    "parity": ("max_sings", "max_deg"),
    "partial": ("max_sings", "max_deg"),
    "oracle": ("count", "seed"),
}


def _cmd_verify(args, out) -> int:
    options = {}
    for key in _SUITE_OPTIONS[args.suite]:
        value = getattr(args, key)
        if value is not None:
            options[key] = value
    records = verify.SUITES[args.suite](**options)
    if args.records:
        records = list(records)
    summary = verify.summarize(args.suite, records)
    summary["bounds"] = options
    if args.format == "json":
        if args.records:
            for rec in records:
                out.write(_dump(rec) + "\n")
        out.write(_dump(summary) + "\n")
    elif args.format == "csv":
        writer = csv.DictWriter(out, fieldnames=["suite", "pass", "fail", "skipped"],
                                extrasaction="ignore", lineterminator="\n")
        writer.writeheader()
        writer.writerow(summary)
    else:
        verdict = "PASS" if summary["fail"] == 0 else "FAIL"
        out.write(f"{args.suite}: {verdict}  pass={summary['pass']} fail={summary['fail']} "
                  f"skipped={summary['skipped']}\n")
        for rec in summary["failures"]:
            out.write("  " + _dump(rec) + "\n")
    return EXIT_OK if summary["fail"] == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stratum-atlas", description="Count framed components of strata of meromorphic differentials.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--format", choices=["json", "text", "csv"], default="json")
        p.add_argument("--oracle-bound", type=_positive, default=DEFAULT_CLOSURE_BOUND,
                       help="largest group order for the brute-force closure cross-check")

    p = sub.add_parser("analyze", help="report on one signature")
    p.add_argument("signature", help='degrees, e.g. "2,2,-3,-3" or "H(4,-2)"')
    p.add_argument("--mark", type=_index_list, default=None,
                   help="1-based indices of the singularities that keep a frame")
    common(p)
    p.set_defaults(run=_cmd_analyze)

    p = sub.add_parser("sweep", help="report on every signature within bounds")
    p.add_argument("--max-sings", type=_positive, default=3)
    p.add_argument("--max-deg", type=_positive, default=4)
    p.add_argument("--genus", type=int, default=None)
    common(p)
    p.set_defaults(run=_cmd_sweep)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(verify.SUITES))
    p.add_argument("--max-sings", type=_positive, default=None)
    p.add_argument("--max-deg", type=_positive, default=None)
    p.add_argument("--genus", type=int, default=None)
    p.add_argument("--max", dest="max_value", type=_positive, default=None,
                   help="largest |n| and |p| for the hyperelliptic shapes")
    p.add_argument("--count", type=_positive, default=None, help="random cases for the oracle suite")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--records", action="store_true", help="emit every check record (json only)")
    p.add_argument("--format", choices=["json", "text", "csv"], default="text")
    p.set_defaults(run=_cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.run(args, out)
    except AtlasError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
