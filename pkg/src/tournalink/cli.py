"""Command-line interface.

Exit codes: 0 success (an ``unknown`` classification is a success), 1 a
failed ``verify`` run, 2 bad input, 3 inconclusive certification.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from pathlib import Path

from . import acceptance
from .cache import cached_table
from .cg import certify_small, certify_tournament8
from .constructions import oracle_suite
from .digraph import Digraph, DigraphError, Tournament, read_edge_list, realize, scores, write_edge_list
from .formats import OutputRecord, summary_line, to_csv, to_json, to_table
from .rules import ClassificationTable, Classifier, ConflictError, Status
from .scoreseq import MAX_N, ScoreSequence, ScoreSequenceError, contains_fragments, parse_values

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT = 2
EXIT_INCONCLUSIVE = 3

STATUS_CHOICES = [s.value for s in Status]


class InputError(Exception):
    pass


def _parse_sequence(text: str, sort: bool) -> ScoreSequence:
    try:
        return ScoreSequence.parse(text, normalize=sort)
    except ScoreSequenceError as exc:
        raise InputError(str(exc)) from None


def _read_graph(path: str) -> Digraph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    try:
        return read_edge_list(text)
    except DigraphError as exc:
        raise InputError(f"{path}: {exc}") from None


def _classifier(args) -> Classifier:
    return Classifier(max_n=args.max_n)


def _check_n(n: int, max_n: int) -> None:
    if not 1 <= n <= max_n:
        raise InputError(f"n = {n} outside 1..{max_n}")


def _print_verdict_record(record: OutputRecord, as_json: bool, trace_lines: list[str]) -> None:
    if as_json:
        print(json.dumps(record.to_json(), indent=2))
        return
    primary = record.rule.split(" > ")
    head = next((r for r in primary if r != "DUAL"), "")
    print(f"{record.sequence}: {record.status}" + (f" ({head})" if head else ""))
    for line in trace_lines:
        print(f"  {line}")


def cmd_classify(args) -> int:
    seq = _parse_sequence(args.sequence, args.sort)
    _check_n(len(seq), args.max_n)
    table = cached_table(len(seq), _classifier(args), use_cache=not args.no_cache)
    verdict = table[seq]
    _print_verdict_record(OutputRecord.from_verdict(verdict), args.json, [str(s) for s in verdict.trace])
    return EXIT_OK


def _emit_listing(records: list[OutputRecord], n: int, fmt: str, counts) -> None:
    summary = summary_line(n, counts)
    if fmt == "csv":
        sys.stdout.write(to_csv(records))
        print(summary, file=sys.stderr)
    elif fmt == "json":
        print(to_json(records, n=n, counts=counts))
        print(summary, file=sys.stderr)
    else:
        sys.stdout.write(to_table(records))
        print(summary)


def _listing(args, fragments: list[list[int]]) -> int:
    _check_n(args.n, args.max_n)
    table = cached_table(args.n, _classifier(args), use_cache=not args.no_cache)
    status = Status(args.status) if args.status else None
    chosen = [
        v
        for v in table.entries.values()
        if (status is None or v.status is status) and contains_fragments(v.sequence, fragments)
    ]
    records = [OutputRecord.from_verdict(v) for v in chosen]
    shown = ClassificationTable(args.n, {v.sequence: v for v in chosen})
    _emit_listing(records, args.n, args.format, shown.counts)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    return _listing(args, [])


def cmd_search(args) -> int:
    fragments = []
    for text in args.contains or []:
        try:
            frag = parse_values(text)
        except ScoreSequenceError as exc:
            raise InputError(str(exc)) from None
        if any(v < 0 for v in frag):
            raise InputError(f"fragment {text!r} has a negative value")
        fragments.append(frag)
    return _listing(args, fragments)


def cmd_realize(args) -> int:
    seq = _parse_sequence(args.sequence, args.sort)
    rng = random.Random(args.seed) if args.seed is not None else None
    t = realize(seq, rng=rng)
    sys.stdout.write(write_edge_list(t))
    return EXIT_OK


def cmd_certify(args) -> int:
    g = _read_graph(args.path)
    if g.n == 8:
        if not g.is_tournament():
            raise InputError("an 8-vertex input must be a tournament")
        report = certify_tournament8(g)
    elif g.n in (6, 7):
        report = certify_small(g)
    else:
        raise InputError(f"certify handles 8-vertex tournaments or 6/7-vertex digraphs, got n = {g.n}")
    if report is None:
        print("inconclusive: no certificate found")
        return EXIT_INCONCLUSIVE
    for line in report.lines():
        print(line)
    return EXIT_OK


def cmd_classify_tournament(args) -> int:
    g = _read_graph(args.path)
    if not g.is_tournament():
        raise InputError("input is not a tournament")
    t = Tournament.from_digraph(g)
    seq = scores(t).sequence
    _check_n(len(seq), args.max_n)
    verdict = cached_table(len(seq), _classifier(args), use_cache=not args.no_cache)[seq]
    record = OutputRecord.from_verdict(verdict)
    lines = [str(s) for s in verdict.trace]
    report = None
    if verdict.status is not Status.LINKLESS and t.n == 8:
        report = certify_tournament8(t)
    if args.json:
        doc = record.to_json()
        if verdict.status is not Status.LINKLESS and t.n == 8:
            doc["certification"] = report.lines() if report else None
        print(json.dumps(doc, indent=2))
        return EXIT_OK
    _print_verdict_record(record, False, lines)
    if report is not None:
        print("this tournament:")
        for line in report.lines():
            print(f"  {line}")
    elif verdict.status is not Status.LINKLESS and t.n == 8:
        print("this tournament: inconclusive")
    return EXIT_OK


def cmd_verify(args) -> int:
    ok = True
    if not args.no_cache:
        fresh = Classifier()
        for n in (8, 9, 10, 11):
            table = cached_table(n, use_cache=True)
            same = {s: v.status for s, v in table.entries.items()} == {
                s: v.status for s, v in fresh.table(n).entries.items()
            }
            print(f"[{'PASS' if same else 'FAIL'}] cache n={n} matches a fresh classification")
            ok = ok and same
    for check in oracle_suite():
        print(check.line())
        ok = ok and check.passed
    for result in acceptance.run_all():
        print(result.line())
        ok = ok and result.passed
    print("all criteria passed" if ok else "FAILED")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tournalink",
        description="Classify tournament score sequences by intrinsic linking status.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log cache activity")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, cache=True):
        p.add_argument("--max-n", type=int, default=MAX_N, help=f"largest length allowed (default {MAX_N})")
        if cache:
            p.add_argument("--no-cache", action="store_true", help="do not read or write the table cache")

    p = sub.add_parser("classify", help="classify one score sequence")
    p.add_argument("sequence", help='e.g. "3,3,3,3,4,4,4,4"')
    p.add_argument("--sort", action="store_true", help="accept unsorted input and sort it")
    p.add_argument("--json", action="store_true")
    common(p)
    p.set_defaults(func=cmd_classify)

    for name, func, helptext in (
        ("enumerate", cmd_enumerate, "list every score sequence of length n with its status"),
        ("search", cmd_search, "list sequences of length n containing the given fragments"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("n", type=int)
        p.add_argument("--status", choices=STATUS_CHOICES)
        p.add_argument("--format", choices=["table", "csv", "json"], default="table")
        if name == "search":
            p.add_argument(
                "--contains", action="append", metavar="FRAGMENT", help="e.g. 1,2,2 (repeatable)"
            )
        common(p)
        p.set_defaults(func=func)

    p = sub.add_parser("realize", help="print a tournament realizing a score sequence")
    p.add_argument("sequence")
    p.add_argument("--seed", type=int, help="draw a random realization instead of the canonical one")
    p.add_argument("--sort", action="store_true")
    common(p, cache=False)
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("certify", help="certify an edge-list digraph as not intrinsically linked")
    p.add_argument("path")
    common(p, cache=False)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("classify-tournament", help="classify the score sequence of an edge-list tournament")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    common(p)
    p.set_defaults(func=cmd_classify_tournament)

    p = sub.add_parser("verify", help="run the acceptance checks")
    p.add_argument("--no-cache", action="store_true", help="skip the cache consistency check")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConflictError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        raise


if __name__ == "__main__":
    sys.exit(main())
