"""Record serialization shared by the CLI and the table cache."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Iterable

from .rules import ClassificationTable, Counts, Status, TraceStep, Verdict
from .scoreseq import ScoreSequence, format_sequence, parse_values

CSV_HEADER = ("sequence", "status", "rule")


@dataclass(frozen=True)
class OutputRecord:
    sequence: str
    status: str
    rule: str
    trace: tuple[dict, ...] = field(default=(), compare=False)

    @classmethod
    def from_verdict(cls, v: Verdict) -> "OutputRecord":
        return cls(
            format_sequence(v.sequence),
            v.status.value,
            v.rule_chain(),
            tuple(trace_to_json(v.trace)),
        )

    def values(self) -> list[int]:
        return parse_values(self.sequence)

    def to_json(self) -> dict:
        return {"sequence": self.values(), "status": self.status, "trace": list(self.trace)}

    @classmethod
    def from_json(cls, doc: dict) -> "OutputRecord":
        trace = tuple(doc.get("trace", ()))
        return cls(
            format_sequence(doc["sequence"]),
            Status(doc["status"]).value,
            " > ".join(step["rule"] for step in trace),
            trace,
        )


def trace_to_json(trace: Iterable[TraceStep]) -> list[dict]:
    return [{"rule": s.rule, "sequence": list(s.sequence), "witness": s.witness} for s in trace]


def trace_from_json(items: Iterable[dict]) -> tuple[TraceStep, ...]:
    return tuple(TraceStep(d["rule"], ScoreSequence(d["sequence"]), d["witness"]) for d in items)


def verdict_from_json(doc: dict) -> Verdict:
    return Verdict(ScoreSequence(doc["sequence"]), Status(doc["status"]), trace_from_json(doc["trace"]))


def to_csv(records: Iterable[OutputRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in records:
        w.writerow([r.sequence, r.status, r.rule])
    return buf.getvalue()


def from_csv(text: str) -> list[OutputRecord]:
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != CSV_HEADER:
        raise ValueError(f"expected CSV header {','.join(CSV_HEADER)}")
    return [OutputRecord(row["sequence"], row["status"], row["rule"]) for row in reader]


def summary_line(n: int, counts: Counts) -> str:
    return (
        f"n={n} total={counts.total} linkless={counts.linkless} "
        f"il={counts.il} unknown={counts.unknown}"
    )


def to_json(records: Iterable[OutputRecord], n: int | None = None, counts: Counts | None = None) -> str:
    doc: dict = {"records": [r.to_json() for r in records]}
    if n is not None:
        doc["n"] = n
    if counts is not None:
        doc["summary"] = counts._asdict() | {"total": counts.total}
    return json.dumps(doc, indent=2)


def from_json(text: str) -> list[OutputRecord]:
    doc = json.loads(text)
    items = doc["records"] if isinstance(doc, dict) and "records" in doc else [doc]
    return [OutputRecord.from_json(d) for d in items]


def to_table(records: Iterable[OutputRecord]) -> str:
    rows = [CSV_HEADER] + [(r.sequence, r.status, r.rule) for r in records]
    widths = [max(len(row[i]) for row in rows) for i in range(3)]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    return "\n".join(lines) + "\n"


def records_for(table: ClassificationTable, status: Status | None = None) -> list[OutputRecord]:
    return [
        OutputRecord.from_verdict(v)
        for v in table.entries.values()
        if status is None or v.status is status
    ]
