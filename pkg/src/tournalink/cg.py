"""Certificates of linklessness built on the Conway-Gordon embedding of K7.

That embedding of K7 (vertices labeled 1..7) has exactly 21 non-split
two-component links. Label the vertices of a 7-vertex digraph with 1..7 and
place it in the embedding, with symmetric arc pairs bounding disks; if no
link has both components consistently orientable, the digraph is not
intrinsically linked as a directed graph. Failure to find such a labeling
proves nothing.

Smaller certificates for 6-vertex digraphs come from two known facts about
the complete symmetric digraph on 6 vertices; see :func:`missing_arc_pair_check`
and :func:`arc_count_check`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .digraph import Arc, Digraph, contract_arc, contractible_arcs

CgCycle = tuple[int, ...]
CgLink = tuple[CgCycle, CgCycle]

_LINK_TEXT = """
457-236 457-136 457-1362 457-1236
147-236 147-235 147-2356 147-2365
167-235 167-245 167-2435 167-2345
136-245 136-2547 136-2457
235-1467 235-1647
245-1376 245-1736
236-1475 236-1547
"""

_LS_TEXT = "236 235 136 245 1362 1236 2356 2365 2435 2345"


def _cycle(text: str) -> CgCycle:
    return tuple(int(ch) for ch in text)


CG_LINKS: tuple[CgLink, ...] = tuple(
    (_cycle(a), _cycle(b)) for a, b in (item.split("-") for item in _LINK_TEXT.split())
)
LS: tuple[CgCycle, ...] = tuple(_cycle(c) for c in _LS_TEXT.split())


def cg_links() -> tuple[CgLink, ...]:
    return CG_LINKS


def ls_set() -> tuple[CgCycle, ...]:
    return LS


def format_cycle(c: Iterable[int]) -> str:
    return "".join(str(x) for x in c)


@dataclass(frozen=True)
class Certificate:
    """``labels[v]`` is the label in 1..7 given to vertex ``v``."""

    labels: tuple[int, ...]

    def vertex_of(self) -> dict[int, int]:
        return {lab: v for v, lab in enumerate(self.labels)}

    def __str__(self) -> str:
        return ", ".join(f"{v}->{lab}" for v, lab in enumerate(self.labels))


def _check_labeling(labels: Sequence[int]) -> None:
    if sorted(labels) != list(range(1, 8)):
        raise ValueError(f"labeling {tuple(labels)} is not a bijection onto 1..7")


def _orientable_vertices(g: Digraph, verts: Sequence[int]) -> bool:
    k = len(verts)
    if all(g.has_arc(verts[i], verts[(i + 1) % k]) for i in range(k)):
        return True
    return all(g.has_arc(verts[(i + 1) % k], verts[i]) for i in range(k))


def orientable(g: Digraph, labeling: Certificate | Sequence[int], cycle: Iterable[int]) -> bool:
    """Whether the labeled cycle is consistently oriented in ``g``, in either direction."""
    labels = labeling.labels if isinstance(labeling, Certificate) else tuple(labeling)
    _check_labeling(labels)
    vertex = {lab: v for v, lab in enumerate(labels)}
    return _orientable_vertices(g, [vertex[x] for x in cycle])


def linked_components(g: Digraph, labeling: Certificate | Sequence[int]) -> list[CgLink]:
    """CG links whose two components are both consistently orientable."""
    return [
        link for link in CG_LINKS if orientable(g, labeling, link[0]) and orientable(g, labeling, link[1])
    ]


def verify_certificate(g: Digraph, cert: Certificate) -> bool:
    """Independent re-check of a certificate over all 21 links."""
    if g.n != 7:
        return False
    return not linked_components(g, cert)


# links grouped by the largest label they use, for pruning partial labelings
_LINKS_BY_MAX = {
    k: [link for link in CG_LINKS if max(link[0] + link[1]) == k] for k in range(1, 8)
}


def certificate_search(
    g: Digraph, labelings: Iterable[Sequence[int]] | None = None
) -> Certificate | None:
    """First labeling (lexicographic in label-to-vertex order) that kills every link.

    Labels are assigned 1, 2, ... in turn and a partial assignment is
    abandoned as soon as some link using only assigned labels is fully
    orientable, so the result equals that of a plain scan of all 5040
    labelings. ``labelings`` replaces the scan order with an explicit
    sequence of label-to-vertex tuples (``t[label - 1] = vertex``).
    """
    if g.n != 7:
        raise ValueError(f"certificate search needs 7 vertices, got {g.n}")
    if labelings is not None:
        for perm in labelings:
            vertex = {lab + 1: v for lab, v in enumerate(perm)}
            if all(
                not (
                    _orientable_vertices(g, [vertex[x] for x in a])
                    and _orientable_vertices(g, [vertex[x] for x in b])
                )
                for a, b in CG_LINKS
            ):
                return _certificate_from_perm(perm)
        return None

    vertex: dict[int, int] = {}
    cache: dict[tuple[int, ...], bool] = {}

    def ok(c: CgCycle) -> bool:
        key = tuple(vertex[x] for x in c)
        hit = cache.get(key)
        if hit is None:
            hit = cache[key] = _orientable_vertices(g, key)
        return hit

    def rec(label: int, free: list[int]) -> bool:
        if label == 8:
            return True
        for v in free:
            vertex[label] = v
            if all(not (ok(a) and ok(b)) for a, b in _LINKS_BY_MAX[label]):
                if rec(label + 1, [x for x in free if x != v]):
                    return True
        vertex.pop(label, None)
        return False

    if not rec(1, list(range(7))):
        return None
    return _certificate_from_perm([vertex[lab] for lab in range(1, 8)])


def _certificate_from_perm(perm: Sequence[int]) -> Certificate:
    labels = [0] * 7
    for lab, v in enumerate(perm, 1):
        labels[v] = lab
    return Certificate(tuple(labels))


def all_labelings() -> Iterator[tuple[int, ...]]:
    return itertools.permutations(range(7))


@dataclass(frozen=True)
class SmallVerdict:
    """A not-intrinsically-linked verdict for a 6-vertex digraph."""

    rule: str
    detail: str


def missing_arc_pair_check(g: Digraph) -> SmallVerdict | None:
    """Verdict when ``g`` omits two arcs of the complete symmetric digraph
    that meet at a vertex and both point into it or both point out of it.

    Two missing arcs forming a directed path through the shared vertex do
    not qualify.
    """
    if g.n != 6:
        raise ValueError(f"needs 6 vertices, got {g.n}")
    for v in range(6):
        others = [x for x in range(6) if x != v]
        miss_out = [x for x in others if not g.has_arc(v, x)]
        if len(miss_out) >= 2:
            a, b = miss_out[:2]
            return SmallVerdict(
                "missing-pair", f"arcs {v}->{a} and {v}->{b} are absent, both leaving {v}"
            )
        miss_in = [x for x in others if not g.has_arc(x, v)]
        if len(miss_in) >= 2:
            a, b = miss_in[:2]
            return SmallVerdict(
                "missing-pair", f"arcs {a}->{v} and {b}->{v} are absent, both entering {v}"
            )
    return None


def arc_count_check(g: Digraph) -> SmallVerdict | None:
    """Verdict when a 6-vertex digraph has at most 23 arcs."""
    if g.n != 6:
        raise ValueError(f"needs 6 vertices, got {g.n}")
    if len(g.arcs) <= 23:
        return SmallVerdict("arc-count", f"{len(g.arcs)} arcs <= 23")
    return None


@dataclass(frozen=True)
class CertificationReport:
    """A chain of contractions ending in a certified small digraph.

    Each contracted arc is given in the vertex numbering of the graph it was
    contracted in.
    """

    contractions: tuple[Arc, ...]
    method: str
    certificate: Certificate | None
    detail: str
    final_graph: Digraph

    def lines(self) -> list[str]:
        out = [f"contract {u}->{v}" for u, v in self.contractions]
        if self.certificate is not None:
            out.append(f"CG labeling (vertex->label): {self.certificate}")
        else:
            out.append(f"{self.method}: {self.detail}")
        out.append("certified: not intrinsically linked as a directed graph")
        return out


def certify_small(g: Digraph) -> CertificationReport | None:
    """Certify a 6- or 7-vertex digraph directly, without contraction."""
    if g.n == 7:
        cert = certificate_search(g)
        if cert is not None:
            return CertificationReport((), "cg-labeling", cert, "no CG link fully orientable", g)
    elif g.n == 6:
        for check in (missing_arc_pair_check, arc_count_check):
            verdict = check(g)
            if verdict is not None:
                return CertificationReport((), verdict.rule, None, verdict.detail, g)
    return None


def sink_source_chain(t: Digraph) -> Iterator[tuple[tuple[Arc, Arc], Digraph]]:
    """Double contractions down to 6 vertices driven by a score-1 vertex
    ``v`` beaten by a score-6 vertex ``w``.

    Contract ``v``'s only out-arc (``v`` becomes a sink); ``w`` is then left
    with a single in-arc, which is contracted next (``w`` becomes a source).
    """
    if t.n != 8:
        return
    for v in range(8):
        if t.out_degree(v) != 1:
            continue
        for w in range(8):
            if w == v or t.out_degree(w) != 6 or not t.has_arc(w, v):
                continue
            (x,) = t.successors(v)
            first = contract_arc(t, (v, x))
            g1 = first.graph
            w1 = first.mapping[w]
            preds = g1.predecessors(w1)
            if len(preds) != 1:
                continue
            second = contract_arc(g1, (preds[0], w1))
            yield ((v, x), (preds[0], w1)), second.graph


def certify_tournament8(t: Digraph) -> CertificationReport | None:
    """Try to certify an 8-vertex tournament as not intrinsically linked.

    First every contractible arc is contracted and the 7-vertex result is
    searched for a CG labeling; then the score-1/score-6 double contraction
    is tried against the 6-vertex checks. None means inconclusive.
    """
    if t.n != 8:
        raise ValueError(f"needs 8 vertices, got {t.n}")
    for arc in contractible_arcs(t):
        g7 = contract_arc(t, arc).graph
        cert = certificate_search(g7)
        if cert is not None:
            return CertificationReport((arc,), "cg-labeling", cert, "no CG link fully orientable", g7)
    for arcs, g6 in sink_source_chain(t):
        for check in (missing_arc_pair_check, arc_count_check):
            verdict = check(g6)
            if verdict is not None:
                return CertificationReport(arcs, verdict.rule, None, verdict.detail, g6)
    return None
