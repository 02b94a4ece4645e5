"""Tournaments and the loop-free digraphs produced by contracting them.

Vertices are ``0..n-1``. Adjacency is kept as per-vertex bitmasks, which
makes cycle enumeration and degree queries cheap at the sizes used here
(n <= 10 for anything exhaustive).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

from .scoreseq import ScoreSequence, landau_check

Arc = tuple[int, int]
Cycle = tuple[int, ...]

MAX_CYCLE_N = 10
MAX_LABELED_N = 6


class DigraphError(ValueError):
    pass


@dataclass(frozen=True)
class Digraph:
    """Loop-free digraph; opposite arcs (symmetric pairs) are allowed."""

    n: int
    arcs: frozenset[Arc]
    out_mask: tuple[int, ...] = field(init=False, repr=False, compare=False)
    in_mask: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        out = [0] * self.n
        inn = [0] * self.n
        for u, v in arcs:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise DigraphError(f"arc {(u, v)} outside vertex range 0..{self.n - 1}")
            if u == v:
                raise DigraphError(f"loop at vertex {u}")
            out[u] |= 1 << v
            inn[v] |= 1 << u
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "out_mask", tuple(out))
        object.__setattr__(self, "in_mask", tuple(inn))

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_mask[u] >> v & 1)

    def out_degree(self, v: int) -> int:
        return bin(self.out_mask[v]).count("1")

    def in_degree(self, v: int) -> int:
        return bin(self.in_mask[v]).count("1")

    def out_degrees(self) -> list[int]:
        return [self.out_degree(v) for v in range(self.n)]

    def successors(self, v: int) -> list[int]:
        return [w for w in range(self.n) if self.out_mask[v] >> w & 1]

    def predecessors(self, v: int) -> list[int]:
        return [w for w in range(self.n) if self.in_mask[v] >> w & 1]

    def symmetric_pairs(self) -> list[Arc]:
        return sorted((u, v) for u, v in self.arcs if u < v and self.has_arc(v, u))

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)

    def delete_vertex(self, x: int) -> "Digraph":
        """Remove ``x`` and renumber the vertices above it down by one."""

        def r(v: int) -> int:
            return v - 1 if v > x else v

        return Digraph(self.n - 1, frozenset((r(u), r(v)) for u, v in self.arcs if x not in (u, v)))

    def induced(self, vertices: Iterable[int]) -> "Digraph":
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        return Digraph(
            len(keep),
            frozenset((index[u], index[v]) for u, v in self.arcs if u in index and v in index),
        )

    def relabel(self, perm: Iterable[int]) -> "Digraph":
        """Vertex ``v`` becomes ``perm[v]``."""
        p = list(perm)
        return type(self)(self.n, frozenset((p[u], p[v]) for u, v in self.arcs))

    def is_tournament(self) -> bool:
        for u, v in itertools.combinations(range(self.n), 2):
            if self.has_arc(u, v) == self.has_arc(v, u):
                return False
        return True


class Tournament(Digraph):
    """Exactly one arc between every pair of distinct vertices."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if not self.is_tournament():
            raise DigraphError("not a tournament: some pair has zero or two arcs")

    @classmethod
    def from_digraph(cls, g: Digraph) -> "Tournament":
        return cls(g.n, g.arcs)

    @classmethod
    def transitive(cls, n: int) -> "Tournament":
        """Vertex ``i`` beats every lower vertex, so vertex ``i`` has score ``i``."""
        return cls(n, frozenset((j, i) for i, j in itertools.combinations(range(n), 2)))


class Scores(NamedTuple):
    sequence: ScoreSequence
    rank: tuple[int, ...]


def scores(g: Digraph) -> Scores:
    """Sorted out-degrees, plus each vertex's position in the sorted order.

    Ties are broken by vertex index, so ``sequence[rank[v]] == out_degree(v)``.
    """
    degs = g.out_degrees()
    order = sorted(range(g.n), key=lambda v: (degs[v], v))
    rank = [0] * g.n
    for pos, v in enumerate(order):
        rank[v] = pos
    return Scores(ScoreSequence(degs[v] for v in order), tuple(rank))


def reverse(g: Digraph) -> Digraph:
    return type(g)(g.n, frozenset((v, u) for u, v in g.arcs))


def realize(
    seq: Iterable[int],
    forced: Iterable[Arc] = (),
    rng: random.Random | None = None,
) -> Tournament | None:
    """A tournament in which vertex ``i`` has out-degree ``seq[i]``.

    Vertices are settled in index order: vertex ``i`` picks which later
    vertices it beats, and the residual scores of the later vertices must
    stay Landau-valid. Without ``forced`` arcs that residual test is exact,
    so the search never backtracks; forced arcs can make it backtrack and
    can make the result None. Passing ``rng`` shuffles the choice order to
    draw a (non-uniform) random realization.
    """
    s = list(seq)
    n = len(s)
    if not landau_check(sorted(s)):
        raise DigraphError(f"{tuple(s)} is not a valid score sequence")
    force = {}
    for u, v in forced:
        if force.get((u, v)) is False:
            raise DigraphError(f"conflicting forced arcs at {(u, v)}")
        force[(u, v)] = True
        force[(v, u)] = False

    arcs: list[Arc] = []

    def rec(i: int, residual: list[int]) -> bool:
        if i == n:
            return True
        later = list(range(i + 1, n))
        need = residual[i]
        if need > len(later) or need < 0:
            return False
        must_beat = [j for j in later if force.get((i, j)) is True]
        must_lose = {j for j in later if force.get((i, j)) is False}
        free = [j for j in later if j not in must_lose and j not in must_beat]
        extra = need - len(must_beat)
        if extra < 0 or extra > len(free):
            return False
        # prefer beating the weakest later vertices: those keep their score budget
        free.sort(key=lambda j: (residual[j], j))
        choices = list(itertools.combinations(free, extra))
        if rng is not None:
            rng.shuffle(choices)
        for pick in choices:
            beaten = set(must_beat) | set(pick)
            nxt = residual[:]
            for j in later:
                if j not in beaten:
                    nxt[j] -= 1
            rest = sorted(nxt[j] for j in later)
            if rest and not landau_check(rest):
                continue
            added = [(i, j) if j in beaten else (j, i) for j in later]
            arcs.extend(added)
            if rec(i + 1, nxt):
                return True
            del arcs[-len(added):]
        return False

    if not rec(0, s):
        return None
    return Tournament(n, frozenset(arcs))


def consistent_cycles(g: Digraph, max_n: int = MAX_CYCLE_N) -> list[Cycle]:
    """Every directed cycle of ``g``, each once.

    A cycle is written starting at its smallest vertex and following arc
    direction. Symmetric pairs give 2-cycles.
    """
    if g.n > max_n:
        raise DigraphError(f"cycle enumeration limited to n <= {max_n}, got {g.n}")
    out: list[Cycle] = []
    succ = g.out_mask
    for start in range(g.n):
        allowed = ~((1 << (start + 1)) - 1)
        path = [start]

        def dfs(v: int, used: int) -> None:
            nxt = succ[v]
            if nxt >> start & 1 and len(path) >= 2:
                out.append(tuple(path))
            cand = nxt & allowed & ~used
            while cand:
                low = cand & -cand
                w = low.bit_length() - 1
                cand ^= low
                path.append(w)
                dfs(w, used | low)
                path.pop()

        dfs(start, 1 << start)
    out.sort(key=lambda c: (len(c), c))
    return out


def consistent_cycle_pairs(g: Digraph, max_n: int = MAX_CYCLE_N) -> list[tuple[Cycle, Cycle]]:
    """Unordered pairs of vertex-disjoint directed cycles."""
    cycles = consistent_cycles(g, max_n)
    masks = [sum(1 << v for v in c) for c in cycles]
    pairs = []
    for i in range(len(cycles)):
        for j in range(i + 1, len(cycles)):
            if not masks[i] & masks[j]:
                pairs.append((cycles[i], cycles[j]))
    return pairs


def contractible_arcs(g: Digraph) -> list[Arc]:
    """Arcs v->w where v is a sink or w is a source once the arc is removed."""
    return [(v, w) for v, w in g.sorted_arcs() if g.out_degree(v) == 1 or g.in_degree(w) == 1]


class Contraction(NamedTuple):
    graph: Digraph
    anchor: int
    removed: int
    mapping: tuple[int, ...]


def contract_arc(g: Digraph, arc: Arc) -> Contraction:
    """Consistent edge contraction of ``arc``, with bookkeeping.

    The anchor is the endpoint named by the contractibility condition (the
    tail when it becomes a sink, else the head when it becomes a source); the
    other endpoint is merged into it. The reverse arc, if present, would
    become a loop and is dropped; of each pair of same-direction parallel
    arcs the one inherited from the non-anchor endpoint is dropped. Opposite
    arcs between the merged vertex and a third vertex survive as a
    symmetric pair. ``mapping[x]`` is the new index of old vertex ``x``.
    """
    v, w = arc
    if not g.has_arc(v, w):
        raise DigraphError(f"{arc} is not an arc")
    if g.out_degree(v) == 1:
        anchor, other = v, w
    elif g.in_degree(w) == 1:
        anchor, other = w, v
    else:
        raise DigraphError(f"arc {arc} is not contractible")
    new_index = [x - 1 if x > other else x for x in range(g.n)]
    new_index[other] = new_index[anchor]
    anchor_arcs = {(a, b) for a, b in g.arcs if anchor in (a, b)}
    new_arcs = set()
    for a, b in g.arcs:
        if {a, b} == {v, w}:
            continue
        if other in (a, b):
            twin = (anchor, b) if a == other else (a, anchor)
            if twin in anchor_arcs:
                continue
        new_arcs.add((new_index[a], new_index[b]))
    return Contraction(Digraph(g.n - 1, frozenset(new_arcs)), new_index[anchor], other, tuple(new_index))


def contract(g: Digraph, arc: Arc) -> Digraph:
    return contract_arc(g, arc).graph


def enumerate_labeled_tournaments(
    n: int, score_filter: Iterable[int] | None = None
) -> Iterator[Tournament]:
    """All 2^(n(n-1)/2) labeled tournaments on ``n`` vertices, n <= 6."""
    if not 0 <= n <= MAX_LABELED_N:
        raise DigraphError(f"labeled enumeration limited to n <= {MAX_LABELED_N}, got {n}")
    want = tuple(score_filter) if score_filter is not None else None
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        arcs = frozenset((a, b) if bits >> k & 1 else (b, a) for k, (a, b) in enumerate(pairs))
        if want is not None:
            degs = [0] * n
            for a, _ in arcs:
                degs[a] += 1
            if tuple(sorted(degs)) != want:
                continue
        yield Tournament(n, arcs)


def isomorphic(g: Digraph, h: Digraph, max_n: int = 7) -> bool:
    """Brute-force isomorphism test over all vertex permutations."""
    if g.n != h.n or len(g.arcs) != len(h.arcs):
        return False
    if g.n > max_n:
        raise DigraphError(f"brute-force isomorphism limited to n <= {max_n}")
    if sorted(g.out_degrees()) != sorted(h.out_degrees()):
        return False
    for perm in itertools.permutations(range(g.n)):
        if all(h.has_arc(perm[u], perm[v]) for u, v in g.arcs):
            return True
    return False


def random_tournament(n: int, rng: random.Random) -> Tournament:
    return Tournament(
        n,
        frozenset(
            (a, b) if rng.random() < 0.5 else (b, a) for a, b in itertools.combinations(range(n), 2)
        ),
    )


def read_edge_list(text: str) -> Digraph:
    """Parse ``u v`` lines (u -> v). ``#`` starts a comment.

    The vertex count is one more than the largest index seen, or the value
    of an ``# n = N`` header if one is present.
    """
    arcs = []
    declared = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line, _, comment = raw.partition("#")
        header = comment.replace(" ", "")
        if header.startswith("n="):
            try:
                declared = int(header[2:])
            except ValueError:
                raise DigraphError(f"line {lineno}: bad vertex-count header {raw!r}") from None
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 2:
            raise DigraphError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise DigraphError(f"line {lineno}: non-integer vertex in {raw!r}") from None
        if u < 0 or v < 0:
            raise DigraphError(f"line {lineno}: negative vertex in {raw!r}")
        if (u, v) in arcs:
            raise DigraphError(f"line {lineno}: duplicate arc {u} {v}")
        arcs.append((u, v))
    n = max((max(a) for a in arcs), default=-1) + 1
    if declared is not None:
        if declared < n:
            raise DigraphError(f"declared n = {declared} but vertex {n - 1} used")
        n = declared
    return Digraph(n, frozenset(arcs))


def write_edge_list(g: Digraph) -> str:
    lines = [f"# n = {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_arcs())
    return "\n".join(lines) + "\n"
