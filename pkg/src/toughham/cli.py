"""Command-line interface.

Exit codes: 0 clean, 1 operational error, 2 a theorem-level counterexample
was found (a bug in this library or in the theorem), 3 a conjecture
counterexample was found (a research finding, not a bug).
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from .conditions import CONJECTURE_IDS
from .graphs import Graph6Error, parse_graph6, to_graph6
from .harness import (
    CampaignConfig,
    FAMILY_IDS,
    FileSource,
    compute_record,
    construct_family,
    enumerate_labeled,
    iter_source_lines,
    run_campaign,
    write_csv,
    write_jsonl,
    write_report,
)

EXIT_CLEAN = 0
EXIT_OPERATIONAL = 1
EXIT_THEOREM_CE = 2
EXIT_CONJECTURE_CE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits 2, which we reserve
        self.print_usage(sys.stderr)
        self.exit(EXIT_OPERATIONAL, f"{self.prog}: error: {message}\n")


def _parse_t(text: str):
    if text in ("auto", "grid"):
        return text
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"t must be auto, grid, or p/q, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="toughham")
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="per-graph invariant bundle as JSONL")
    p_inv.add_argument("file")

    p_verify = sub.add_parser("verify", help="sweep hamiltonicity conditions over a corpus")
    p_verify.add_argument("--check", required=True,
                          help="comma-separated condition ids (main,ore,dirac,bauer,jung,bcl,bvms,conj1,conj2)")
    p_verify.add_argument("--t", type=_parse_t, default="auto")
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--out")
    p_verify.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    p_verify.add_argument("--no-timing", action="store_true",
                          help="omit wall_ms fields (byte-comparable reports)")
    p_verify.add_argument("file")

    p_lemmas = sub.add_parser("lemmas", help="margin reports for the verified lemmas")
    p_lemmas.add_argument("--which", default="1,2,3", help="comma-separated lemma numbers")
    p_lemmas.add_argument("--jobs", type=int, default=1)
    p_lemmas.add_argument("--out")
    p_lemmas.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    p_lemmas.add_argument("--no-timing", action="store_true")
    p_lemmas.add_argument("file")

    p_construct = sub.add_parser("construct", help="emit graph6 for a named family")
    p_construct.add_argument("--family", required=True, choices=FAMILY_IDS)
    p_construct.add_argument("--n", type=int)
    p_construct.add_argument("--h", help="graph6 of the join part (familyH only)")

    p_enum = sub.add_parser("enumerate", help="stream all labeled graphs on n vertices")
    p_enum.add_argument("--n", type=int, required=True)

    return parser


def _effective_jobs(requested: int) -> int:
    env = os.environ.get("TOUGHHAM_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            print(f"toughham: ignoring non-integer TOUGHHAM_JOBS={env!r}", file=sys.stderr)
    return max(1, requested)


def _emit_campaign(result, out_path, fmt, summary_stream) -> None:
    if out_path:
        write_report(result, out_path, fmt)
    else:
        if fmt == "jsonl":
            write_jsonl(result.records, sys.stdout)
        else:
            write_csv(result.records, sys.stdout)
    s = result.summary
    print(
        f"processed={s['processed']} skipped={s['skipped']} input_lines={s['input_lines']}",
        file=summary_stream,
    )
    for cid, counts in s["checks"].items():
        joined = " ".join(f"{k}={v}" for k, v in counts.items())
        print(f"check={cid} {joined}", file=summary_stream)
    for skip in result.skipped:
        print(
            f"skipped line {skip['index']}: {skip['reason']}",
            file=summary_stream,
        )
    for ce in s["counterexamples"]:
        print(f"COUNTEREXAMPLE check={ce['check']} graph6={ce['graph6']}", file=summary_stream)


def _campaign_exit_code(result) -> int:
    hit_theorem = hit_conjecture = False
    for ce in result.counterexamples:
        if ce["check"] in CONJECTURE_IDS:
            hit_conjecture = True
        else:
            hit_theorem = True
    if hit_theorem:
        return EXIT_THEOREM_CE
    if hit_conjecture:
        return EXIT_CONJECTURE_CE
    return EXIT_CLEAN


def _run_sweep(args, checks) -> int:
    cfg = CampaignConfig(
        source=FileSource(args.file),
        checks=checks,
        t_policy=getattr(args, "t", "auto"),
        jobs=_effective_jobs(args.jobs),
        out_path=args.out,
        out_format=args.format,
        include_timing=not args.no_timing,
    )
    try:
        result = run_campaign(cfg)
    except OSError as err:
        print(f"toughham: {err}", file=sys.stderr)
        return EXIT_OPERATIONAL
    summary_stream = sys.stdout if args.out else sys.stderr
    _emit_campaign(result, args.out, args.format, summary_stream)
    return _campaign_exit_code(result)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as stop:
        return stop.code if isinstance(stop.code, int) else EXIT_OPERATIONAL

    if args.command == "invariants":
        try:
            for _, line in iter_source_lines(FileSource(args.file)):
                try:
                    record = compute_record(line, (), "auto")
                except Graph6Error as err:
                    print(f"toughham: skipping malformed line: {err}", file=sys.stderr)
                    continue
                record.pop("checks")
                write_jsonl([record], sys.stdout)
        except OSError as err:
            print(f"toughham: {err}", file=sys.stderr)
            return EXIT_OPERATIONAL
        return EXIT_CLEAN

    if args.command == "verify":
        checks = tuple(c.strip() for c in args.check.split(",") if c.strip())
        if not checks:
            print("toughham: --check lists no conditions", file=sys.stderr)
            return EXIT_OPERATIONAL
        try:
            return _run_sweep(args, checks)
        except ValueError as err:
            print(f"toughham: {err}", file=sys.stderr)
            return EXIT_OPERATIONAL

    if args.command == "lemmas":
        try:
            numbers = [int(w) for w in args.which.split(",") if w.strip()]
        except ValueError:
            print(f"toughham: bad --which {args.which!r}", file=sys.stderr)
            return EXIT_OPERATIONAL
        if not numbers or any(k not in (1, 2, 3) for k in numbers):
            print("toughham: --which takes lemma numbers from 1,2,3", file=sys.stderr)
            return EXIT_OPERATIONAL
        return _run_sweep(args, tuple(f"lemma{k}" for k in numbers))

    if args.command == "construct":
        try:
            h = parse_graph6(args.h) if args.h else None
            graphs = construct_family(args.family, n=args.n, h=h)
        except (ValueError, Graph6Error) as err:
            print(f"toughham: {err}", file=sys.stderr)
            return EXIT_OPERATIONAL
        for g in graphs:
            print(to_graph6(g).decode("ascii"))
        return EXIT_CLEAN

    if args.command == "enumerate":
        try:
            for g in enumerate_labeled(args.n):
                print(to_graph6(g).decode("ascii"))
        except ValueError as err:
            print(f"toughham: {err}", file=sys.stderr)
            return EXIT_OPERATIONAL
        return EXIT_CLEAN

    return EXIT_OPERATIONAL


def entrypoint() -> None:
    sys.exit(main())
