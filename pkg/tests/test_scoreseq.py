import itertools
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from tournalink.digraph import enumerate_labeled_tournaments, scores
from tournalink.scoreseq import (
    RULE_CONTRACT,
    RULE_STRIP,
    ScoreSequence,
    ScoreSequenceError,
    contains_fragments,
    dual,
    enumerate_sequences,
    extend,
    format_sequence,
    generate_sequences,
    landau_check,
    parse_values,
    reduce_step,
    reductions,
)


@pytest.mark.parametrize("values", [(0, 1, 2, 3, 4, 5, 6, 7), (1, 1, 1, 3), (0,)])
def test_valid(values):
    assert landau_check(values)


def test_total_violation_message():
    v = landau_check((0, 1, 2, 4, 5, 5, 5, 5))
    assert not v
    assert v.reason == "total 27 != 28"


@pytest.mark.parametrize(
    "values, fragment",
    [
        ((2, 1, 0), "not sorted"),
        ((0, 1, 1), "total"),
        ((0, 0, 2, 4), "prefix"),
        ((-1, 1, 3), "prefix"),
        ((), "empty"),
        ((1.0, 1, 1), "integer"),
    ],
)
def test_violation_kinds(values, fragment):
    v = landau_check(values)
    assert not v and fragment in v.reason


def test_parse_rejects_unsorted_unless_asked():
    with pytest.raises(ScoreSequenceError):
        ScoreSequence.parse("2,1,1,2")
    assert ScoreSequence.parse("2,1,1,2", normalize=True) == (1, 1, 2, 2)
    assert ScoreSequence.parse(" (1, 1, 1) ") == (1, 1, 1)


def test_parse_garbage():
    with pytest.raises(ScoreSequenceError):
        parse_values("1,x,2")


def test_format():
    assert format_sequence([1, 2, 3]) == "(1, 2, 3)"


def test_small_enumerations():
    assert generate_sequences(1) == [(0,)]
    assert set(generate_sequences(3)) == {(0, 1, 2), (1, 1, 1)}


def test_counts_match_published_sequence():
    # OEIS A000571
    want = [1, 1, 2, 4, 9, 22, 59, 167, 490, 1486, 4639]
    assert [len(enumerate_sequences(n)) for n in range(1, 12)] == want


@pytest.mark.parametrize("n", range(1, 7))
def test_enumeration_matches_brute_force(n):
    seen = {scores(t).sequence for t in enumerate_labeled_tournaments(n)}
    assert seen == set(generate_sequences(n))


def test_enumeration_is_lexicographic():
    seqs = generate_sequences(8)
    assert seqs == sorted(seqs)


def test_enumerate_cap():
    with pytest.raises(ScoreSequenceError):
        enumerate_sequences(13)


@pytest.mark.parametrize(
    "s, d",
    [
        ((0, 1, 2, 3, 4, 5, 6, 7), (0, 1, 2, 3, 4, 5, 6, 7)),
        ((1, 1, 1, 3, 4, 5, 6, 7), (0, 1, 2, 3, 4, 6, 6, 6)),
        ((2, 2, 3, 4, 4, 4, 4, 5), (2, 3, 3, 3, 3, 4, 5, 5)),
    ],
)
def test_dual(s, d):
    assert dual(s) == d


def test_reduce_examples():
    r = reduce_step((0, 1, 2, 3, 4, 5, 6, 7))
    assert r.sequence == (0, 1, 2, 3, 4, 5, 6) and r.rule == RULE_STRIP
    rules = {r.rule: r.sequence for r in reductions((1, 1, 3, 3, 4, 4, 5, 7))}
    assert rules[RULE_CONTRACT] == (1, 2, 2, 3, 3, 4, 6)
    assert reduce_step((2, 2, 3, 3, 4, 4, 5, 5)) is None


def test_extend_examples():
    got = extend(ScoreSequence((3, 3, 3, 3, 4, 4, 4, 4)), 7)
    assert set(got) == {(3, 3, 3, 3, 4, 4, 4, 5, 7), (3, 3, 3, 4, 4, 4, 4, 4, 7)}
    assert extend(ScoreSequence((0, 1, 2)), 0) == [(0, 1, 2, 3)]
    assert extend(ScoreSequence((1, 1, 1)), 3) == [(1, 1, 1, 3)]


def _extend_oracle(seq, d):
    # try every subset of positions that gains a point
    n = len(seq)
    out = set()
    for picked in itertools.combinations(range(n), n - d):
        vals = list(seq)
        for i in picked:
            vals[i] += 1
        out.add(tuple(sorted(vals + [d])))
    return out


@pytest.mark.parametrize("n", [4, 5, 6])
def test_extend_matches_subset_oracle(n):
    for s in enumerate_sequences(n):
        for d in range(n + 1):
            assert set(extend(s, d)) == _extend_oracle(s, d)


def test_fragments():
    assert contains_fragments((1, 2, 2, 4, 4, 4, 5, 6), [[1, 2, 2], [6]])
    assert contains_fragments((0, 1, 2), [])
    assert not contains_fragments((1, 2, 3, 3, 4, 4, 5, 6), [[2, 2]])


def test_fragments_are_combined_multiset():
    # two separate {2} fragments need two 2s
    assert not contains_fragments((1, 2, 3, 3, 4, 4, 5, 6), [[2], [2]])


seq_strategy = st.integers(1, 9).flatmap(lambda n: st.sampled_from(enumerate_sequences(n)))


@given(seq_strategy)
def test_dual_is_involution(s):
    assert dual(dual(s)) == s
    assert landau_check(dual(s))


@given(seq_strategy)
def test_reductions_stay_valid(s):
    for r in reductions(s):
        assert len(r.sequence) == len(s) - 1
        assert landau_check(r.sequence)


@given(seq_strategy, st.data())
def test_extend_inverts_strip(s, data):
    d = data.draw(st.integers(0, len(s)))
    for t in extend(s, d):
        assert landau_check(t)
        assert sum(t) == sum(s) + len(s)
        assert Counter(t)[d] >= 1
