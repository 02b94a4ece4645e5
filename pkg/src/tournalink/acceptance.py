"""Acceptance checks, each with its own time budget.

Shared by ``tournalink verify`` and the test suite. Every check builds its
own :class:`~tournalink.rules.Classifier` so timings do not depend on what
ran earlier in the process.
"""

from __future__ import annotations

import csv
import random
import time
from dataclasses import dataclass
from importlib import resources
from typing import Callable

from .cg import CG_LINKS, LS, certificate_search, certify_tournament8, verify_certificate
from .constructions import (
    K332_CHOICES,
    K332_EXPECTED,
    build_h,
    c_a_b_triangles,
    complete_k332,
    oracle_suite,
    sink_source_witness,
)
from .digraph import Digraph, Tournament, consistent_cycles, random_tournament, realize, scores
from .rules import Classifier, Status, linkless_lower_bound
from .scoreseq import dual, generate_sequences, parse_values, reduce_step

REFERENCE_COUNTS = {8: 167, 9: 490, 10: 1486, 11: 4639}
REFERENCE_IL_UNKNOWN = {9: (131, 37), 10: (660, 150), 11: (2719, 512)}
UNRESOLVED_8 = frozenset(
    {
        (2, 2, 2, 3, 4, 5, 5, 5),
        (2, 2, 2, 4, 4, 4, 5, 5),
        (2, 2, 3, 3, 3, 5, 5, 5),
        (2, 2, 4, 4, 4, 4, 4, 4),
        (3, 3, 3, 3, 3, 3, 5, 5),
    }
)
LINKLESS_8 = 147


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float
    budget: float | None

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        limit = f" / {self.budget:g}s" if self.budget is not None else ""
        return f"[{mark}] {self.number}. {self.title} ({self.seconds:.2f}s{limit}): {self.detail}"


def reference_table8() -> list[tuple[tuple[int, ...], str, str]]:
    """Transcribed 8-vertex reference rows (misprinted rows omitted)."""
    text = resources.files("tournalink").joinpath("data/table8_reference.csv").read_text()
    return [
        (tuple(parse_values(row["sequence"])), row["status"], row["reason"])
        for row in csv.DictReader(text.splitlines())
    ]


def _timed(number: int, title: str, budget: float | None, body: Callable[[], tuple[bool, str]]) -> CriterionResult:
    start = time.perf_counter()
    try:
        ok, detail = body()
    except Exception as exc:  # a crash is a failed criterion, reported not raised
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    if budget is not None and elapsed > budget:
        ok = False
        detail += f"; over budget ({elapsed:.2f}s > {budget}s)"
    return CriterionResult(number, title, ok, detail, elapsed, budget)


def enumeration_counts() -> CriterionResult:
    def body():
        got = {n: len(generate_sequences(n)) for n in REFERENCE_COUNTS}
        return got == REFERENCE_COUNTS, f"counts {got}"

    return _timed(1, "enumeration counts n=8..11", 5.0, body)


def table8() -> CriterionResult:
    def body():
        table = Classifier().table(8)
        counts = table.counts
        problems = []
        if (counts.linkless, counts.il, counts.unknown) != (LINKLESS_8, 15, 5):
            problems.append(f"counts {tuple(counts)}")
        unknown = set(table.by_status(Status.UNKNOWN))
        if unknown != UNRESOLVED_8:
            problems.append(f"unknown set {sorted(unknown)}")
        rows = reference_table8()
        ref_il = {s for s, st, _ in rows if st == "il-representative"}
        if set(table.by_status(Status.HAS_IL_REP)) != ref_il:
            problems.append("IL set differs from reference rows")
        linkless_rows = [(s, st) for s, st, _ in rows if st == "linkless"]
        wrong = [s for s, st, _ in rows if table[s].status.value != st]
        if len(linkless_rows) < 12:
            problems.append(f"only {len(linkless_rows)} linkless fixture rows")
        if wrong:
            problems.append(f"status mismatch on {wrong}")
        detail = (
            f"linkless={counts.linkless} il={counts.il} unknown={counts.unknown}; "
            f"{len(rows)} reference rows agree ({len(linkless_rows)} linkless)"
        )
        return not problems, "; ".join(problems) or detail

    return _timed(2, "8-vertex classification table", 1.0, body)


def larger_tables() -> CriterionResult:
    def body():
        clf = Classifier()
        got = {}
        for n in REFERENCE_IL_UNKNOWN:
            c = clf.table(n).counts
            got[n] = (c.il, c.unknown)
        return got == REFERENCE_IL_UNKNOWN, f"(il, unknown) {got}"

    return _timed(3, "IL / unknown counts n=9..11", 60.0, body)


def cg_data() -> CriterionResult:
    def body():
        disjoint = all(not set(a) & set(b) for a, b in CG_LINKS)
        sizes = all(len(c) in (3, 4) for link in CG_LINKS for c in link)
        ls = set(LS)
        hit = all(a in ls or b in ls for a, b in CG_LINKS)
        ok = len(CG_LINKS) == 21 and disjoint and sizes and hit and len(LS) == 10
        return ok, f"{len(CG_LINKS)} links, disjoint={disjoint}, LS hits every link={hit}"

    return _timed(4, "CG link table", 1.0, body)


CERTIFICATE_GROUPS: dict[str, Callable[[tuple[int, ...]], bool]] = {
    "(0...)": lambda s: s[0] == 0,
    "(...5)": lambda s: s[-1] == 5,
    "(1,1...)": lambda s: s[0] == 1 and s[1] == 1,
    "(...4,4)": lambda s: s[-2] == 4 and s[-1] == 4,
    "(2,2,2,3,3,3)": lambda s: s == (2, 2, 2, 3, 3, 3),
    "(1,2,2,3,3,4)": lambda s: s == (1, 2, 2, 3, 3, 4),
}


def random_seven_vertex_extension(t: Tournament, rng: random.Random) -> Digraph:
    """Add a 7th vertex joined to each old vertex by an arc in or out, or a
    symmetric pair, then shuffle all vertex labels."""
    arcs = set(t.arcs)
    for x in range(6):
        kind = rng.randrange(3)
        if kind in (0, 2):
            arcs.add((6, x))
        if kind in (1, 2):
            arcs.add((x, 6))
    perm = list(range(7))
    rng.shuffle(perm)
    return Digraph(7, frozenset(arcs)).relabel(perm)


def certificate_engine(per_group: int = 100, seed: int = 2024) -> CriterionResult:
    def body():
        rng = random.Random(seed)
        failures = []
        for name, pred in CERTIFICATE_GROUPS.items():
            found = 0
            while found < per_group:
                t = random_tournament(6, rng)
                if not pred(tuple(scores(t).sequence)):
                    continue
                found += 1
                g = random_seven_vertex_extension(t, rng)
                cert = certificate_search(g)
                if cert is None or not verify_certificate(g, cert):
                    failures.append((name, g.sorted_arcs()))
        detail = f"{per_group} instances x {len(CERTIFICATE_GROUPS)} groups, {len(failures)} failures"
        if failures:
            detail += f"; first: {failures[0]}"
        return not failures, detail

    return _timed(5, "CG certificate engine on 6+1 vertex digraphs", 30.0, body)


def constructions() -> CriterionResult:
    def body():
        bad = [c for c in K332_CHOICES if scores(complete_k332(c)).sequence != K332_EXPECTED[c]]
        h = build_h()
        tri_bad = [
            (c, a, b)
            for c, a, b in c_a_b_triangles()
            if not (h.has_arc(c, a) and h.has_arc(a, b) and h.has_arc(b, c))
        ]
        ok = not bad and not tri_bad and len(c_a_b_triangles()) == 18
        return ok, f"{len(K332_CHOICES) - len(bad)}/6 score sequences, {18 - len(tri_bad)}/18 triangles oriented"

    return _timed(6, "K_{3,3,2} constructions", 1.0, body)


def mixed_status_witness() -> CriterionResult:
    def body():
        seq = (1, 3, 3, 3, 3, 4, 5, 6)
        t = sink_source_witness(seq)
        if t is None:
            return False, "no realization with the score-6 vertex beating the score-1 vertex"
        report = certify_tournament8(t)
        status = Classifier().table(8)[seq].status
        ok = report is not None and status is Status.HAS_IL_REP
        how = report.method if report else "inconclusive"
        return ok, f"witness certified via {how}; sequence status {status.value}"

    return _timed(7, "same sequence: IL representative and certified tournament", 5.0, body)


def property_suites() -> CriterionResult:
    def body():
        clf = Classifier()
        problems = []
        for n in range(1, 12):
            clf.table(n)  # raises ConflictError if the canary fires
        for n in range(1, 11):
            table = clf.table(n)
            for s, v in table.entries.items():
                d = dual(s)
                if dual(d) != s or d not in table.entries:
                    problems.append(f"dual involution fails at {s}")
                elif table[d].status is not v.status:
                    problems.append(f"dual status differs at {s}")
                cur = s
                while (red := reduce_step(cur)) is not None:
                    if clf.classify(red.sequence).status is not v.status:
                        problems.append(f"reduction changes status at {cur}")
                        break
                    cur = red.sequence
        for n in (8, 9):
            for s in clf.table(n).entries:
                if scores(realize(s)).sequence != s:
                    problems.append(f"realize round trip fails at {s}")
        checks = {c.id: c for c in oracle_suite()}
        for key in ("transitive-triangle-5", "transitive-acyclic"):
            if not checks[key].passed:
                problems.append(checks[key].line())
        if any(consistent_cycles(Tournament.transitive(n)) for n in range(1, 9)):
            problems.append("transitive tournament has a cycle")
        detail = "dual, reduction, realization, conflict, triangle and acyclicity checks all hold"
        return not problems, "; ".join(problems[:5]) or detail

    return _timed(8, "property suites", None, body)


def linkless_bound() -> CriterionResult:
    def body():
        clf = Classifier()
        k = clf.table(8).counts.linkless
        rows = []
        ok = k == LINKLESS_8
        for n in (9, 10, 11):
            bound = linkless_lower_bound(n, k)
            have = clf.table(n).counts.linkless
            rows.append(f"n={n}: {bound} <= {have}")
            ok = ok and bound <= have
        return ok, f"k={k}; " + ", ".join(rows)

    return _timed(9, "linkless lower bound", None, body)


CRITERIA: tuple[Callable[[], CriterionResult], ...] = (
    enumeration_counts,
    table8,
    larger_tables,
    cg_data,
    certificate_engine,
    constructions,
    mixed_status_witness,
    property_suites,
    linkless_bound,
)


def run_all() -> list[CriterionResult]:
    return [criterion() for criterion in CRITERIA]

