"""Score sequences of tournaments.

A score sequence is the non-decreasing list of out-degrees of a tournament.
Landau's condition characterizes exactly which integer sequences occur:
every prefix of length k sums to at least k(k-1)/2, with equality for the
whole sequence.
"""

from __future__ import annotations

import itertools
import re
from collections import Counter
from functools import lru_cache
from typing import Iterable, NamedTuple

MAX_N = 12


class ScoreSequenceError(ValueError):
    pass


class Validity(NamedTuple):
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def landau_check(values: Iterable[int]) -> Validity:
    """Validate an arbitrary integer sequence against Landau's condition.

    The first failed condition is reported, checked in the order:
    sortedness, total, prefix deficit, value range.
    """
    vals = list(values)
    n = len(vals)
    if n == 0:
        return Validity(False, "empty sequence")
    for i, v in enumerate(vals):
        if not isinstance(v, int) or isinstance(v, bool):
            return Validity(False, f"entry {i} is not an integer: {v!r}")
    for i in range(1, n):
        if vals[i] < vals[i - 1]:
            return Validity(False, f"not sorted: entry {i} = {vals[i]} < {vals[i - 1]}")
    total = n * (n - 1) // 2
    if sum(vals) != total:
        return Validity(False, f"total {sum(vals)} != {total}")
    prefix = 0
    for k in range(1, n + 1):
        prefix += vals[k - 1]
        if prefix < k * (k - 1) // 2:
            return Validity(
                False, f"prefix deficit: first {k} entries sum to {prefix} < {k * (k - 1) // 2}"
            )
    for i, v in enumerate(vals):
        if v < 0 or v > n - 1:
            return Validity(False, f"entry {i} = {v} outside range 0..{n - 1}")
    return Validity(True)


class ScoreSequence(tuple):
    """An immutable, Landau-valid score sequence.

    Subclasses ``tuple`` so sequences compare, hash and sort like plain tuples.
    """

    def __new__(cls, values: Iterable[int]):
        vals = tuple(int(v) for v in values)
        check = landau_check(vals)
        if not check:
            raise ScoreSequenceError(f"invalid score sequence {vals}: {check.reason}")
        return super().__new__(cls, vals)

    @classmethod
    def parse(cls, text: str, normalize: bool = False) -> "ScoreSequence":
        """Parse ``"(1, 2, 2, 3, 5, 5, 5, 5)"``-style text.

        Unsorted input is rejected unless ``normalize`` is set.
        """
        vals = parse_values(text)
        if normalize:
            vals = sorted(vals)
        return cls(vals)

    @property
    def n(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"ScoreSequence({format_sequence(self)})"


def parse_values(text: str) -> list[int]:
    stripped = text.strip()
    if stripped.startswith("(") and stripped.endswith(")"):
        stripped = stripped[1:-1]
    if not stripped.strip():
        return []
    parts = [p.strip() for p in stripped.split(",")]
    out = []
    for p in parts:
        if not re.fullmatch(r"[+-]?\d+", p):
            raise ScoreSequenceError(f"cannot parse {p!r} as an integer in {text!r}")
        out.append(int(p))
    return out


def format_sequence(values: Iterable[int]) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"


def generate_sequences(n: int) -> list[tuple[int, ...]]:
    """Uncached lexicographic generation of every length-``n`` score sequence."""
    total = n * (n - 1) // 2
    out: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def rec(s: int, lo: int) -> None:
        k = len(prefix)
        if k == n:
            if s == total:
                out.append(tuple(prefix))
            return
        rem = n - k - 1
        for v in range(lo, n):
            ns = s + v
            if ns < (k + 1) * k // 2:
                continue
            # remaining entries are >= v: once even the minimum overshoots, stop
            if ns + rem * v > total:
                break
            if ns + rem * (n - 1) < total:
                continue
            prefix.append(v)
            rec(ns, v)
            prefix.pop()

    rec(0, 0)
    return out


@lru_cache(maxsize=None)
def _enumerate_cached(n: int) -> tuple[ScoreSequence, ...]:
    return tuple(ScoreSequence(v) for v in generate_sequences(n))


def enumerate_sequences(n: int, max_n: int = MAX_N) -> tuple[ScoreSequence, ...]:
    """All score sequences of length ``n`` in lexicographic order."""
    if not 1 <= n <= max_n:
        raise ScoreSequenceError(f"n = {n} outside 1..{max_n}")
    return _enumerate_cached(n)


def dual(seq: Iterable[int]) -> ScoreSequence:
    """Score sequence of the tournament with every arc reversed."""
    vals = tuple(seq)
    n = len(vals)
    return ScoreSequence(n - 1 - v for v in reversed(vals))


RULE_STRIP = "L4.1"
RULE_CONTRACT = "L4.3"


class Reduction(NamedTuple):
    sequence: ScoreSequence
    rule: str
    description: str


def reductions(seq: Iterable[int]) -> list[Reduction]:
    """Every applicable status-preserving reduction to length n-1.

    Order is fixed so traces are reproducible: strip a 0, strip an n-1,
    contract a leading (1, 1), contract a trailing (n-2, n-2).
    """
    s = tuple(seq)
    n = len(s)
    found = []
    if n < 2:
        return found
    if s[0] == 0:
        found.append(([v - 1 for v in s[1:]], RULE_STRIP, "remove a vertex of out-degree 0"))
    if s[-1] == n - 1:
        found.append((list(s[:-1]), RULE_STRIP, f"remove a vertex of out-degree {n - 1}"))
    if n >= 3 and s[0] == 1 and s[1] == 1:
        # s_3 may be 1, so the decremented tail can dip below the leading 1
        found.append(
            (
                [1] + [v - 1 for v in s[2:]],
                RULE_CONTRACT,
                "contract the arc between the two vertices of out-degree 1",
            )
        )
    if n >= 3 and s[-1] == n - 2 and s[-2] == n - 2:
        found.append(
            (
                list(s[:-2]) + [n - 3],
                RULE_CONTRACT,
                f"contract the arc between the two vertices of out-degree {n - 2}",
            )
        )
    out = []
    for vals, rule, desc in found:
        vals.sort()
        check = landau_check(vals)
        if not check:
            raise AssertionError(f"reduction of {s} produced invalid {tuple(vals)}: {check.reason}")
        out.append(Reduction(ScoreSequence(vals), rule, desc))
    return out


def reduce_step(seq: Iterable[int]) -> Reduction | None:
    """The first applicable reduction from :func:`reductions`, or None."""
    found = reductions(seq)
    return found[0] if found else None


def extend(seq: ScoreSequence, d: int) -> list[ScoreSequence]:
    """Score sequences obtained by adding one vertex of out-degree ``d``.

    The new vertex loses to exactly ``n - d`` of the existing vertices, each
    of which gains one point. Results are distinct and sorted.
    """
    s = tuple(seq)
    n = len(s)
    if not 0 <= d <= n:
        raise ScoreSequenceError(f"added out-degree {d} outside 0..{n}")
    wins = n - d
    counts = sorted(Counter(s).items())
    values = [v for v, _ in counts]
    mults = [m for _, m in counts]
    results = set()
    for picks in itertools.product(*(range(m + 1) for m in mults)):
        if sum(picks) != wins:
            continue
        out = [d]
        for v, m, k in zip(values, mults, picks):
            out.extend([v + 1] * k)
            out.extend([v] * (m - k))
        out.sort()
        results.add(tuple(out))
    return [ScoreSequence(r) for r in sorted(results)]


def contains_fragments(seq: Iterable[int], fragments: Iterable[Iterable[int]]) -> bool:
    """True iff the multiset union of ``fragments`` fits inside ``seq``."""
    need: Counter[int] = Counter()
    for frag in fragments:
        need.update(frag)
    have = Counter(seq)
    return all(have[v] >= k for v, k in need.items())
