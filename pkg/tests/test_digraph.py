import itertools
import random

import pytest

from tournalink.digraph import (
    Digraph,
    DigraphError,
    Tournament,
    consistent_cycle_pairs,
    consistent_cycles,
    contract,
    contract_arc,
    contractible_arcs,
    enumerate_labeled_tournaments,
    isomorphic,
    random_tournament,
    read_edge_list,
    realize,
    reverse,
    scores,
    write_edge_list,
)
from tournalink.scoreseq import enumerate_sequences


def dg(n, arcs):
    return Digraph(n, frozenset(arcs))


CYCLE3 = dg(3, [(0, 1), (1, 2), (2, 0)])


def naive_cycles(g):
    """Every simple directed cycle, by DFS from each start vertex over
    larger-numbered vertices only."""
    found = set()

    def walk(start, path):
        for w in g.successors(path[-1]):
            if w == start and len(path) >= 2:
                found.add(tuple(path))
            elif w > start and w not in path:
                walk(start, path + [w])

    for v in range(g.n):
        walk(v, [v])
    return found


def random_digraph(rng, n):
    arcs = set()
    for a, b in itertools.combinations(range(n), 2):
        k = rng.randrange(4)
        if k in (0, 2):
            arcs.add((a, b))
        if k in (1, 2):
            arcs.add((b, a))
    return dg(n, arcs)


def test_scores_basic():
    assert scores(Tournament.transitive(4)).sequence == (0, 1, 2, 3)
    assert scores(CYCLE3).sequence == (1, 1, 1)


def test_tournament_validation():
    with pytest.raises(DigraphError):
        Tournament(3, frozenset({(0, 1), (1, 2)}))
    with pytest.raises(DigraphError):
        dg(2, [(0, 0)])


def test_realize_examples():
    t = realize((0, 1, 2))
    assert isomorphic(t, Tournament.transitive(3))
    assert scores(realize((1, 1, 1, 3))).sequence == (1, 1, 1, 3)


@pytest.mark.parametrize("n", [8, 9])
def test_realize_round_trip(n):
    for s in enumerate_sequences(n):
        t = realize(s)
        assert t.is_tournament() and scores(t).sequence == s


def test_realize_seeded_is_deterministic():
    s = (2, 2, 3, 3, 4, 4, 5, 5)
    a = realize(s, rng=random.Random(7))
    b = realize(s, rng=random.Random(7))
    assert a == b and scores(a).sequence == s


def test_realize_forced_infeasible():
    # score-0 vertex cannot beat anyone
    assert realize((0, 1, 2), forced=[(0, 1)]) is None


def test_reverse_self_dual():
    assert scores(reverse(Tournament.transitive(4))).sequence == (0, 1, 2, 3)


def test_cycles_examples():
    assert consistent_cycles(Tournament.transitive(8)) == []
    assert len(consistent_cycles(CYCLE3)) == 1
    assert consistent_cycles(dg(2, [(0, 1), (1, 0)])) == [(0, 1)]


def test_cycle_pairs_examples():
    assert consistent_cycle_pairs(Tournament.transitive(6)) == []
    two = dg(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert len(consistent_cycle_pairs(two)) == 1
    six = dg(6, [(i, (i + 1) % 6) for i in range(6)])
    assert consistent_cycle_pairs(six) == []


def test_cycles_against_dfs_oracle():
    rng = random.Random(11)
    for _ in range(200):
        g = random_digraph(rng, rng.randint(2, 5))
        assert set(consistent_cycles(g)) == naive_cycles(g)


def test_contractible_examples():
    assert sorted(contractible_arcs(CYCLE3)) == [(0, 1), (1, 2), (2, 0)]
    for t in enumerate_labeled_tournaments(6, (2, 2, 2, 3, 3, 3)):
        assert contractible_arcs(t) == []
        break


def test_contract_three_cycle():
    h = contract(CYCLE3, (0, 1))
    assert h.n == 2 and h.symmetric_pairs() == [(0, 1)]


def test_contract_score_one_vertex():
    t = realize((1, 2, 3, 3, 3, 4, 5, 7))
    v = [x for x in range(8) if t.out_degree(x) == 1][0]
    (w,) = t.successors(v)
    c = contract_arc(t, (v, w))
    merged = c.mapping[v]
    assert c.graph.n == 7
    assert all(merged in pair for pair in c.graph.symmetric_pairs())


@pytest.mark.parametrize("n", range(3, 7))
def test_contractible_iff_score_1_or_n_minus_2(n):
    # for tournaments, an arc is contractible exactly when its tail has
    # out-degree 1 or its head has in-degree 1
    for t in enumerate_labeled_tournaments(n):
        want = {
            (u, v)
            for u, v in t.arcs
            if t.out_degree(u) == 1 or t.out_degree(v) == n - 2
        }
        assert set(contractible_arcs(t)) == want


@pytest.mark.parametrize("n", range(3, 7))
def test_contracting_transitive_stays_acyclic(n):
    t = Tournament.transitive(n)
    for arc in contractible_arcs(t):
        assert consistent_cycles(contract(t, arc)) == []


def test_labeled_counts():
    assert sum(1 for _ in enumerate_labeled_tournaments(3)) == 8
    assert sum(1 for _ in enumerate_labeled_tournaments(5)) == 1024


def test_unique_1113_tournament():
    ts = list(enumerate_labeled_tournaments(4, (1, 1, 1, 3)))
    assert ts and all(isomorphic(ts[0], t) for t in ts)


def test_isomorphic_negative():
    assert not isomorphic(Tournament.transitive(3), CYCLE3)


def test_relabel_preserves_type():
    t = random_tournament(5, random.Random(1))
    r = t.relabel([4, 3, 2, 1, 0])
    assert isinstance(r, Tournament)
    assert sorted(r.out_degrees()) == sorted(t.out_degrees())


def test_edge_list_round_trip():
    rng = random.Random(3)
    for _ in range(20):
        g = random_digraph(rng, rng.randint(1, 7))
        assert read_edge_list(write_edge_list(g)) == g


def test_edge_list_parsing():
    g = read_edge_list("# comment\n\n0 1\n1 2  # trailing\n")
    assert g.n == 3 and g.sorted_arcs() == [(0, 1), (1, 2)]
    iso = read_edge_list("# n = 4\n0 1\n")
    assert iso.n == 4


@pytest.mark.parametrize("text", ["0 1\n0 1\n", "0 x\n", "0 1 2\n", "0 0\n"])
def test_edge_list_errors(text):
    with pytest.raises(DigraphError):
        read_edge_list(text)
