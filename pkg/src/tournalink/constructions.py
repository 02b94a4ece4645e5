"""Explicit 8-vertex constructions and bundled oracle checks.

The oriented K_{3,3,2} here is intrinsically linked as a directed graph, as
are its tournament completions. That is a topological fact this package
takes on authority and cannot check; the score bookkeeping and the
orientation of its triangles are what get verified.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .cg import CG_LINKS, LS
from .digraph import (
    Digraph,
    Tournament,
    consistent_cycles,
    contract,
    contractible_arcs,
    enumerate_labeled_tournaments,
    realize,
)
from .scoreseq import ScoreSequence, ScoreSequenceError

A = (0, 1, 2)
B = (3, 4, 5)
C = (6, 7)
VERTEX_NAMES = ("a1", "a2", "a3", "b1", "b2", "b3", "c1", "c2")

# provenance tag for claims this package cannot compute
IL_BY_AUTHORITY = "intrinsically linked (by published argument, not computed)"


def build_h() -> Digraph:
    """Oriented K_{3,3,2}: A -> B -> C -> A, plus c1 -> c2."""
    arcs = set()
    arcs |= {(a, b) for a in A for b in B}
    arcs |= {(b, c) for b in B for c in C}
    arcs |= {(c, a) for c in C for a in A}
    arcs.add((C[0], C[1]))
    return Digraph(8, frozenset(arcs))


def build_h_prime() -> Digraph:
    """``build_h`` with the arcs between b2 and C pointing into b2, and the
    b-triangle fixed as b2 -> b1, b2 -> b3, b1 -> b3."""
    b1, b2, b3 = B
    arcs = set(build_h().arcs)
    for c in C:
        arcs.discard((b2, c))
        arcs.add((c, b2))
    arcs |= {(b2, b1), (b2, b3), (b1, b3)}
    return Digraph(8, frozenset(arcs))


def _triangle(vs: tuple[int, int, int], cyclic: bool) -> set[tuple[int, int]]:
    x, y, z = vs
    if cyclic:
        return {(x, y), (y, z), (z, x)}
    return {(x, y), (x, z), (y, z)}


@dataclass(frozen=True)
class K332Choice:
    """How to finish the oriented K_{3,3,2} into a tournament.

    ``variant`` is ``"H"`` or ``"H'"``; the b-triangle is fixed in the
    ``H'`` variant, so ``b_cyclic`` must be left as None there.
    """

    variant: str
    a_cyclic: bool
    b_cyclic: bool | None = None

    def __post_init__(self) -> None:
        if self.variant == "H":
            if self.b_cyclic is None:
                raise ValueError("variant H needs a b-triangle choice")
        elif self.variant == "H'":
            if self.b_cyclic is not None:
                raise ValueError("variant H' fixes the b-triangle; leave b_cyclic unset")
        else:
            raise ValueError(f"unknown variant {self.variant!r}")


K332_CHOICES = (
    K332Choice("H", True, True),
    K332Choice("H", True, False),
    K332Choice("H", False, True),
    K332Choice("H", False, False),
    K332Choice("H'", True),
    K332Choice("H'", False),
)

# score sequences the construction is published to yield, per choice
K332_EXPECTED = {
    K332_CHOICES[0]: (3, 3, 3, 3, 4, 4, 4, 4),
    K332_CHOICES[1]: (2, 3, 3, 4, 4, 4, 4, 4),
    K332_CHOICES[2]: (3, 3, 3, 3, 3, 4, 4, 5),
    K332_CHOICES[3]: (2, 3, 3, 3, 4, 4, 4, 5),
    K332_CHOICES[4]: (2, 2, 3, 4, 4, 4, 4, 5),
    K332_CHOICES[5]: (2, 2, 3, 3, 4, 4, 5, 5),
}


def complete_k332(choice: K332Choice) -> Tournament:
    """Tournament completion of the oriented K_{3,3,2} for ``choice``.

    A cyclic triangle adds one to each of its vertices; a transitive one adds
    2, 1, 0 in index order.
    """
    if choice.variant == "H":
        arcs = set(build_h().arcs) | _triangle(B, bool(choice.b_cyclic))
    else:
        arcs = set(build_h_prime().arcs)
    arcs |= _triangle(A, choice.a_cyclic)
    return Tournament(8, frozenset(arcs))


def c_a_b_triangles() -> list[tuple[int, int, int]]:
    return [(c, a, b) for c in C for a in A for b in B]


def sink_source_witness(seq) -> Tournament | None:
    """A realization of ``seq`` in which a score-6 vertex beats a score-1 vertex.

    Such a tournament double-contracts to a 6-vertex digraph that is certified
    not intrinsically linked.
    """
    s = tuple(seq)
    ScoreSequence(s)
    if len(s) != 8 or 1 not in s or 6 not in s:
        raise ScoreSequenceError(f"{s} needs length 8 and both a 1 and a 6")
    v = s.index(1)
    for w in [i for i, x in enumerate(s) if x == 6]:
        t = realize(s, forced=[(w, v)])
        if t is not None:
            return t
    return None


@dataclass(frozen=True)
class OracleCheck:
    id: str
    description: str
    passed: bool
    counterexample: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f"  counterexample: {self.counterexample}" if self.counterexample else ""
        return f"{self.id}  {status}  {self.description}{tail}"


def _has_transitive_triangle(t: Tournament) -> bool:
    for x, y, z in itertools.combinations(range(t.n), 3):
        outs = [
            t.has_arc(x, y) + t.has_arc(x, z),
            t.has_arc(y, x) + t.has_arc(y, z),
            t.has_arc(z, x) + t.has_arc(z, y),
        ]
        if sorted(outs) == [0, 1, 2]:
            return True
    return False


def oracle_suite(seed: int = 0, contractions: int = 200) -> list[OracleCheck]:
    checks = []

    bad = next((t for t in enumerate_labeled_tournaments(5) if not _has_transitive_triangle(t)), None)
    checks.append(
        OracleCheck(
            "transitive-triangle-5",
            "every labeled 5-vertex tournament (1024) contains a transitive triangle",
            bad is None,
            "" if bad is None else str(bad.sorted_arcs()),
        )
    )

    bad_n = next((n for n in range(1, 9) if consistent_cycles(Tournament.transitive(n))), None)
    checks.append(
        OracleCheck(
            "transitive-acyclic",
            "transitive tournaments on 1..8 vertices have no directed cycles",
            bad_n is None,
            "" if bad_n is None else f"n = {bad_n}",
        )
    )

    rng = random.Random(seed)
    problem = ""
    done = 0
    while done < contractions and not problem:
        n = rng.randint(3, 8)
        arcs = set()
        for a, b in itertools.combinations(range(n), 2):
            kind = rng.randrange(4)
            if kind in (0, 2):
                arcs.add((a, b))
            if kind in (1, 2):
                arcs.add((b, a))
        g = Digraph(n, frozenset(arcs))
        options = contractible_arcs(g)
        if not options:
            continue
        arc = rng.choice(options)
        h = contract(g, arc)
        done += 1
        if h.n != n - 1 or any(u == v for u, v in h.arcs):
            problem = f"{sorted(arcs)} on {arc}"
    checks.append(
        OracleCheck(
            "contract-invariants",
            f"{contractions} random contractions drop one vertex and leave no loops",
            not problem,
            problem,
        )
    )

    ls = set(LS)
    missed = [f"{''.join(map(str, a))}-{''.join(map(str, b))}" for a, b in CG_LINKS if a not in ls and b not in ls]
    checks.append(
        OracleCheck(
            "ls-hitting-set",
            "every CG link has a component in LS",
            not missed,
            ", ".join(missed),
        )
    )
    return checks

