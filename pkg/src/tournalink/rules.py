"""Classification of score sequences as linkless / IL representative / unknown.

A sequence is *linkless* when every tournament realizing it has an embedding
with no non-split consistently oriented link, and *has an IL representative*
when some realizing tournament is intrinsically linked as a directed graph.
The two are complementary truths; ``unknown`` only records that no rule here
decides the sequence.

Rule ids used in traces:

* ``T2.4``  every tournament on at most 7 vertices is linkless
* ``L3.4``  length 8 containing 0 or 7, or {1,1}, {6,6}, {1,5,5,6}, {1,2,2,6}
* ``P3.5``  length 8 with four values summing to 8
* ``P3.7``  length 8, one of seven listed sequences or a dual
* ``P3.1``, ``P3.2``  length 8 sequences with explicit intrinsically linked
  constructions, and their duals
* ``L4.1``  strip a vertex of out-degree 0 or n-1 (status-preserving)
* ``L4.3``  contract a (1, 1) pair or an (n-2, n-2) pair (status-preserving)
* ``L4.4``  a prefix of length m < 8 sums to m(m-1)/2 with n - m < 8
* ``L4.5``  n = 9 with first four summing to 7, n = 10 with first five to 11
* ``O4.2``  adding a vertex to an intrinsically linked tournament keeps it so
* ``DUAL``  reversing every arc preserves status
"""

from __future__ import annotations

import enum
import hashlib
import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .scoreseq import (
    MAX_N,
    ScoreSequence,
    ScoreSequenceError,
    contains_fragments,
    dual,
    enumerate_sequences,
    extend,
    format_sequence,
    reductions,
)

RULE_IDS = frozenset(
    {"T2.4", "L3.4", "P3.5", "P3.7", "P3.1", "P3.2", "L4.1", "O4.2", "L4.3", "L4.4", "L4.5", "DUAL"}
)

# K_{3,3,2} family and its variants
IL_K332 = (
    (2, 3, 3, 4, 4, 4, 4, 4),
    (2, 3, 3, 3, 4, 4, 4, 5),
    (3, 3, 3, 3, 4, 4, 4, 4),
    (3, 3, 3, 3, 3, 4, 4, 5),
    (2, 2, 3, 3, 4, 4, 5, 5),
    (2, 2, 3, 4, 4, 4, 4, 5),
)
# K6-based family with two extra vertices
IL_K6 = (
    (2, 3, 3, 3, 3, 4, 4, 6),
    (1, 3, 3, 3, 3, 4, 5, 6),
    (1, 3, 3, 3, 4, 4, 5, 5),
    (2, 2, 3, 3, 3, 4, 5, 6),
)
LINKLESS_LISTED = (
    (1, 2, 3, 3, 4, 5, 5, 5),
    (1, 3, 3, 3, 4, 4, 4, 6),
    (1, 3, 4, 4, 4, 4, 4, 4),
    (1, 2, 3, 3, 4, 4, 5, 6),
    (1, 2, 2, 4, 4, 5, 5, 5),
    (1, 2, 4, 4, 4, 4, 4, 5),
    (1, 3, 3, 3, 3, 5, 5, 5),
)
SUBMULTISET_CLAUSES = ((1, 1), (6, 6), (1, 5, 5, 6), (1, 2, 2, 6))
SPLIT_PREFIX_CASES = {9: (4, 7), 10: (5, 11)}

RULES_VERSION = "1"


def _ruleset_hash() -> str:
    payload = {
        "version": RULES_VERSION,
        "il_k332": IL_K332,
        "il_k6": IL_K6,
        "linkless_listed": LINKLESS_LISTED,
        "submultiset": SUBMULTISET_CLAUSES,
        "split_prefix": sorted(SPLIT_PREFIX_CASES.items()),
        "split_limit": 8,
    }
    return hashlib.sha256(json.dumps(payload, sort_keys=True).encode()).hexdigest()[:16]


RULESET_HASH = _ruleset_hash()


class Status(enum.Enum):
    LINKLESS = "linkless"
    HAS_IL_REP = "il-representative"
    UNKNOWN = "unknown"

    def __str__(self) -> str:
        return self.value


class ConflictError(RuntimeError):
    """A sequence matched both a linkless rule and an IL rule."""


@dataclass(frozen=True)
class TraceStep:
    rule: str
    sequence: ScoreSequence
    witness: str

    def __str__(self) -> str:
        return f"{self.rule}: {format_sequence(self.sequence)} {self.witness}"


Trace = tuple[TraceStep, ...]


@dataclass(frozen=True)
class Verdict:
    sequence: ScoreSequence
    status: Status
    trace: Trace = ()

    @property
    def rule(self) -> str:
        """The deciding rule, skipping any leading dualization."""
        for step in self.trace:
            if step.rule != "DUAL":
                return step.rule
        return ""

    def rule_chain(self) -> str:
        return " > ".join(step.rule for step in self.trace)


class Counts(NamedTuple):
    linkless: int
    il: int
    unknown: int

    @property
    def total(self) -> int:
        return self.linkless + self.il + self.unknown


@dataclass
class ClassificationTable:
    n: int
    entries: dict[ScoreSequence, Verdict] = field(default_factory=dict)

    @property
    def counts(self) -> Counts:
        c = {s: 0 for s in Status}
        for v in self.entries.values():
            c[v.status] += 1
        return Counts(c[Status.LINKLESS], c[Status.HAS_IL_REP], c[Status.UNKNOWN])

    def by_status(self, status: Status) -> list[ScoreSequence]:
        return [s for s, v in self.entries.items() if v.status is status]

    def __getitem__(self, seq: Iterable[int]) -> Verdict:
        return self.entries[tuple(seq)]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries.values())


def base_il_sequences() -> frozenset[ScoreSequence]:
    seqs = {ScoreSequence(s) for s in IL_K332 + IL_K6}
    return frozenset(seqs | {dual(s) for s in seqs})


_LINKLESS_LISTED_CLOSED = frozenset(
    {ScoreSequence(s) for s in LINKLESS_LISTED} | {dual(s) for s in LINKLESS_LISTED}
)


def linkless8_match(seq: Iterable[int]) -> tuple[str, str] | None:
    """The first length-8 linkless rule that applies, with a witness."""
    s = tuple(seq)
    if len(s) != 8:
        raise ScoreSequenceError(f"length-8 rules need 8 values, got {len(s)}")
    if 0 in s:
        return "L3.4", "contains 0"
    if 7 in s:
        return "L3.4", "contains 7"
    for frag in SUBMULTISET_CLAUSES:
        if contains_fragments(s, [frag]):
            return "L3.4", f"contains {{{', '.join(map(str, frag))}}}"
    for four in itertools.combinations(s, 4):
        if sum(four) == 8:
            return "P3.5", f"values {' + '.join(map(str, four))} = 8"
    if s in _LINKLESS_LISTED_CLOSED:
        listed = s if s in LINKLESS_LISTED else tuple(dual(s))
        how = "listed" if s == listed else f"dual of listed {format_sequence(listed)}"
        return "P3.7", how
    return None


def linkless8_rule(seq: Iterable[int]) -> str | None:
    match = linkless8_match(seq)
    return match[0] if match else None


def split_prefix_match(seq: Iterable[int]) -> tuple[str, str] | None:
    """Linkless rules for n >= 9 that split the vertex set in two."""
    s = tuple(seq)
    n = len(s)
    prefix = 0
    for m in range(1, n):
        prefix += s[m - 1]
        if m < 8 and n - m < 8 and prefix == m * (m - 1) // 2:
            return "L4.4", f"first {m} values sum to {prefix} = C({m}, 2)"
    if n in SPLIT_PREFIX_CASES:
        m, target = SPLIT_PREFIX_CASES[n]
        if sum(s[:m]) == target:
            return "L4.5", f"first {m} values sum to {target}"
    return None


def linkless_lower_bound(n: int, k: int) -> int:
    """Guaranteed number of linkless length-n sequences given ``k`` at length 8."""
    if n < 8:
        raise ValueError(f"bound holds for n >= 8, got {n}")
    return (n - 7) * (k - 1) + 1


class Classifier:
    """Bottom-up classification with per-length memoized tables."""

    def __init__(self, max_n: int = MAX_N):
        self.max_n = max_n
        self._tables: dict[int, ClassificationTable] = {}
        self._closure: dict[int, dict[ScoreSequence, Trace]] = {}

    def il_closure(self, n: int) -> dict[ScoreSequence, Trace]:
        """Sequences of length ``n`` with an IL representative reachable from
        the length-8 constructions by adding vertices and dualizing."""
        if n > self.max_n:
            raise ScoreSequenceError(f"n = {n} exceeds configured maximum {self.max_n}")
        if n < 8:
            return {}
        if n in self._closure:
            return self._closure[n]
        level: dict[ScoreSequence, Trace] = {}
        if n == 8:
            for rule, listed in (("P3.1", IL_K332), ("P3.2", IL_K6)):
                for s in listed:
                    seq = ScoreSequence(s)
                    level.setdefault(seq, (TraceStep(rule, seq, "explicit construction"),))
            for rule, listed in (("P3.1", IL_K332), ("P3.2", IL_K6)):
                for s in listed:
                    d = dual(s)
                    level.setdefault(
                        d,
                        (TraceStep("DUAL", d, f"dual of {format_sequence(s)}"),)
                        + level[ScoreSequence(s)],
                    )
        else:
            below = self.il_closure(n - 1)
            for parent in sorted(below):
                for deg in range(n):
                    for child in extend(parent, deg):
                        if child not in level:
                            step = TraceStep(
                                "O4.2", child, f"add a vertex of out-degree {deg} to {format_sequence(parent)}"
                            )
                            level[child] = (step,) + below[parent]
            for seq in sorted(level):
                d = dual(seq)
                if d not in level:
                    level[d] = (TraceStep("DUAL", d, f"dual of {format_sequence(seq)}"),) + level[seq]
        self._closure[n] = dict(sorted(level.items()))
        return self._closure[n]

    def _direct(self, seq: ScoreSequence) -> tuple[list[Trace], list[Trace]]:
        """Linkless and IL evidence that does not go through the dual."""
        n = len(seq)
        linkless: list[Trace] = []
        il: list[Trace] = []
        if n <= 7:
            linkless.append((TraceStep("T2.4", seq, f"{n} vertices"),))
            return linkless, il
        direct: list[Trace] = []
        if n == 8:
            match = linkless8_match(seq)
            if match:
                direct.append((TraceStep(match[0], seq, match[1]),))
        else:
            match = split_prefix_match(seq)
            if match:
                direct.append((TraceStep(match[0], seq, match[1]),))
        reduced: list[Trace] = []
        lower = self.table(n - 1)
        for red in reductions(seq):
            sub = lower[red.sequence]
            step = TraceStep(red.rule, seq, f"{red.description} -> {format_sequence(red.sequence)}")
            if sub.status is Status.LINKLESS:
                reduced.append((step,) + sub.trace)
            elif sub.status is Status.HAS_IL_REP:
                il.append((step,) + sub.trace)
        linkless.extend(direct + reduced if n == 8 else reduced + direct)
        return linkless, il

    def _evaluate(self, seq: ScoreSequence) -> Verdict:
        n = len(seq)
        linkless, il = self._direct(seq)
        closure = self.il_closure(n)
        if seq in closure:
            il.insert(0, closure[seq])
        d = dual(seq)
        if d != seq:
            dl, di = self._direct(d)
            flip = TraceStep("DUAL", seq, f"dual sequence {format_sequence(d)}")
            linkless.extend((flip,) + t for t in dl)
            il.extend((flip,) + t for t in di)
        if linkless and il:
            raise ConflictError(
                f"{format_sequence(seq)} matched linkless rule {linkless[0][0].rule} "
                f"and IL rule {il[0][0].rule}"
            )
        if linkless:
            return Verdict(seq, Status.LINKLESS, linkless[0])
        if il:
            return Verdict(seq, Status.HAS_IL_REP, il[0])
        return Verdict(seq, Status.UNKNOWN, ())

    def table(self, n: int) -> ClassificationTable:
        if n > self.max_n:
            raise ScoreSequenceError(f"n = {n} exceeds configured maximum {self.max_n}")
        if n not in self._tables:
            if n > 1:
                self.table(n - 1)
            table = ClassificationTable(n)
            for seq in enumerate_sequences(n, self.max_n):
                table.entries[seq] = self._evaluate(seq)
            self._tables[n] = table
        return self._tables[n]

    def classify(self, seq: Iterable[int]) -> Verdict:
        s = seq if isinstance(seq, ScoreSequence) else ScoreSequence(seq)
        return self.table(len(s))[s]


_default = Classifier()


def default_classifier() -> Classifier:
    return _default


def classify(seq: Iterable[int]) -> Verdict:
    return _default.classify(seq)


def classify_all(n: int) -> ClassificationTable:
    return _default.table(n)


def il_closure(max_n: int) -> dict[int, frozenset[ScoreSequence]]:
    return {n: frozenset(_default.il_closure(n)) for n in range(8, max_n + 1)}
