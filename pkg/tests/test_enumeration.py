from __future__ import annotations

from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from fishburn import enumeration
from fishburn.enumeration import (
    AvoidanceQuery,
    CapacityError,
    count,
    count_by_one_position,
    members,
    search,
)
from fishburn.patterns import PatternSet, parse_pattern
from fishburn.perm import Permutation
from fishburn.sequences import TABLE_ROWS


def _ps(text, fishburn=True):
    return PatternSet.parse(text, fishburn=fishburn)


def test_count_examples():
    assert count(AvoidanceQuery(4, _ps("321,1243"), one_position=2)) == 5
    assert count(AvoidanceQuery(0, _ps("321,1423,2143"))) == 1
    assert count(AvoidanceQuery(5, _ps("321,312"))) == 8


def test_count_of_empty_length_is_one_for_any_patterns():
    assert count(AvoidanceQuery(0, _ps("321,14253"))) == 1
    assert count(AvoidanceQuery(0, PatternSet())) == 1


def test_unconstrained_query_counts_all_permutations():
    assert count(AvoidanceQuery(5, PatternSet())) == 120
    assert count(AvoidanceQuery(5, PatternSet(fishburn=True))) == 53


def test_members_examples():
    got = members(AvoidanceQuery(3, _ps("321,1243"), one_position=2))
    assert [p.values for p in got] == [(2, 1, 3), (3, 1, 2)]
    assert [p.values for p in members(AvoidanceQuery(1, PatternSet(fishburn=True)))] == [(1,)]
    got4 = members(AvoidanceQuery(4, _ps("321,1243"), one_position=2))
    assert [p.values for p in got4] == [
        (2, 1, 3, 4), (2, 1, 4, 3), (3, 1, 2, 4), (3, 1, 4, 2), (4, 1, 2, 3)
    ]


def test_members_are_lexicographically_sorted_and_counted():
    for row in TABLE_ROWS[:6]:
        q = AvoidanceQuery(6, row.patterns)
        got = members(q)
        assert list(got) == sorted(got, key=lambda p: p.values)
        assert len(got) == count(q)


def test_count_by_one_position_examples():
    assert count_by_one_position(4, _ps("321,1243")) == (3, 5, 0)
    assert count_by_one_position(1, _ps("321")) == (1, 0, 0)
    assert count_by_one_position(5, _ps("321,2134")) == (8, 6, 0)
    with pytest.raises(ValueError):
        count_by_one_position(0, _ps("321"))


def test_one_beyond_first_two_positions_occurs_without_321():
    # Dropping the 321 constraint must populate the "elsewhere" bucket.
    first, second, other = count_by_one_position(4, PatternSet(fishburn=True))
    assert other > 0
    assert first + second + other == count(AvoidanceQuery(4, PatternSet(fishburn=True)))


def test_search_visit_count_matches_count():
    q = AvoidanceQuery(6, _ps("321,14253"))
    seen = []
    assert search(q, seen.append) == 48
    assert len(seen) == count(q) == 48
    assert search(AvoidanceQuery(5, _ps("321,31452")), lambda p: None) == 21


def test_search_never_visits_non_members():
    q = AvoidanceQuery(6, _ps("321,21354"))
    for p in members(q):
        assert oracle.is_member(p.values, [(3, 2, 1), (2, 1, 3, 5, 4)], fishburn=True)


@pytest.mark.parametrize("row", TABLE_ROWS, ids=lambda r: r.row_id)
def test_kernel_equals_brute_force_filter(row):
    bodies = [p.body.values for p in row.patterns.classical]
    for n in range(7):
        assert count(AvoidanceQuery(n, row.patterns)) == oracle.count(n, bodies, fishburn=True)


def test_kernel_equals_brute_force_with_filters():
    bodies = [(3, 2, 1), (1, 2, 4, 3)]
    ps = _ps("321,1243")
    for n in range(1, 7):
        for pos in (1, 2):
            assert count(AvoidanceQuery(n, ps, one_position=pos)) == oracle.count(
                n, bodies, fishburn=True, one_position=pos
            )
    ps2 = _ps("321,21354")
    bodies2 = [(3, 2, 1), (2, 1, 3, 5, 4)]
    for n in range(3, 7):
        assert count(AvoidanceQuery(n, ps2, prefix=(3, 1))) == oracle.count(
            n, bodies2, fishburn=True, prefix=(3, 1)
        )
        assert count(
            AvoidanceQuery(n, ps2, prefix=(3, 1, 2), prefix_negation=True)
        ) == oracle.count(n, bodies2, fishburn=True, prefix=(3, 1, 2), prefix_negation=True)


def test_classical_only_queries_need_no_fishburn_flag():
    ps = PatternSet.parse("231,321,213")
    for n in range(7):
        assert count(AvoidanceQuery(n, ps)) == oracle.count(n, [(2, 3, 1), (3, 2, 1), (2, 1, 3)])


def test_prefix_examples():
    ps = _ps("321,21354")
    assert count(AvoidanceQuery(5, ps, prefix=(5, 1))) == 1
    assert members(AvoidanceQuery(5, ps, prefix=(5, 1)))[0].values == (5, 1, 2, 3, 4)
    assert count(AvoidanceQuery(7, ps, prefix=(3, 1, 2), prefix_negation=True)) == 10


def test_query_validation():
    with pytest.raises(ValueError):
        AvoidanceQuery(-1)
    with pytest.raises(ValueError):
        AvoidanceQuery(4, one_position=3)
    with pytest.raises(ValueError):
        AvoidanceQuery(4, prefix=(2, 2))
    with pytest.raises(ValueError):
        AvoidanceQuery(4, prefix=(5,))
    with pytest.raises(ValueError):
        AvoidanceQuery(4, prefix_negation=True)


def test_one_position_unsatisfiable_cases():
    assert count(AvoidanceQuery(0, PatternSet(), one_position=1)) == 0
    assert count(AvoidanceQuery(1, PatternSet(), one_position=2)) == 0
    # position filter conflicting with a forced prefix
    assert count(AvoidanceQuery(3, PatternSet(), one_position=2, prefix=(1,))) == 0


def test_capacity_errors_and_overrides():
    with pytest.raises(CapacityError):
        count(AvoidanceQuery(15, _ps("321,132")))
    with pytest.raises(CapacityError):
        members(AvoidanceQuery(11, _ps("321,132")))
    assert count(AvoidanceQuery(15, _ps("321,132")), cap=15) == 15
    assert len(members(AvoidanceQuery(11, _ps("321,132")), cap=11)) == 11


def test_results_are_deterministic_across_runs():
    q = AvoidanceQuery(7, _ps("321,31524"))
    assert members(q) == members(q)
    assert count(q) == count(q) == 120


def test_position_lemma_pruning_is_only_a_cross_check():
    # The optional structural pruning must reproduce the primary counts
    # exactly on 321-avoiding Fishburn classes.
    for text in ("321", "321,1243", "321,31452"):
        ps = _ps(text)
        for n in range(8):
            q = AvoidanceQuery(n, ps)
            pruned = search(q, lambda p: None, assume_one_in_first_two=True)
            assert pruned == count(q)


def test_321_shortcut_agrees_with_generic_matcher(monkeypatch):
    # Forcing the kernel to treat 321 like any other pattern must not change
    # anything; the descent-bottom shortcut is a pure optimization.
    queries = [
        AvoidanceQuery(6, _ps("321,1324")),
        AvoidanceQuery(6, _ps("321,14253")),
        AvoidanceQuery(5, _ps("321"), one_position=2),
    ]
    fast = [count(q) for q in queries]
    monkeypatch.setattr(enumeration, "_PATTERN_321", (0,))
    slow = [count(q) for q in queries]
    assert fast == slow


@settings(deadline=None, max_examples=40)
@given(
    st.integers(0, 5),
    st.lists(
        st.sampled_from(["21", "123", "231", "321", "132", "1324", "2143", "3142", "2413"]),
        unique=True,
        max_size=2,
    ),
    st.booleans(),
    st.sampled_from([None, 1, 2]),
)
def test_kernel_matches_oracle_on_random_queries(n, texts, fishburn, one_position):
    ps = PatternSet(tuple(parse_pattern(t) for t in texts), fishburn)
    bodies = [tuple(int(c) for c in t) for t in texts]
    q = AvoidanceQuery(n, ps, one_position=one_position)
    assert count(q) == oracle.count(n, bodies, fishburn=fishburn, one_position=one_position)


@settings(deadline=None, max_examples=60)
@given(st.integers(1, 6), st.data())
def test_pruning_soundness_occurrences_survive_completion(n, data):
    # Any prefix that already realizes a forbidden pattern (classically, or a
    # completed Fishburn triple) keeps realizing it in every completion.
    word = tuple(data.draw(st.permutations(list(range(1, n + 1)))))
    cut = data.draw(st.integers(1, n))
    prefix, rest = word[:cut], word[cut:]
    for body in ((3, 2, 1), (2, 3, 1), (1, 4, 2, 5, 3)):
        if oracle.contains_pattern(prefix, body):
            for tail in permutations(rest):
                assert oracle.contains_pattern(prefix + tail, body)
    if oracle.contains_adjacent_231_plus1(prefix):
        for tail in permutations(rest):
            assert oracle.contains_adjacent_231_plus1(prefix + tail)


def test_visited_permutations_are_valid_objects():
    out = []
    search(AvoidanceQuery(4, _ps("321,1243")), out.append)
    assert all(isinstance(p, Permutation) for p in out)
    assert len(set(out)) == len(out)
