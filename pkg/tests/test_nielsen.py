import itertools
from collections import deque

import pytest
from hypothesis import given, settings, strategies as st

from trigon.errors import MixedContextError, NotFoundWithinBounds
from trigon.nielsen import (MOVES, T1_1, T1_2, T2, T3_12, T3_21, Certificate, GenPair,
                            NielsenMove, apply_move, exhaustive_orbits, format_moves,
                            invert_certificate, parse_moves, search_equivalence)
from trigon.tits import finite_group, group_new
from trigon.words import Word


def element_words(ctx):
    """A word for every element of a finite group, by BFS over s1, s2, s3."""
    fg = finite_group(ctx)
    words = {0: Word()}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for g, gi in enumerate(fg.generator_index, 1):
            j = fg.mul(i, gi)
            if j not in words:
                words[j] = words[i] * Word.gen(g)
                queue.append(j)
    return [words[i] for i in range(len(fg))]


def pair_from_indices(ctx, i, j, words):
    fg = finite_group(ctx)
    return GenPair((fg.elements[i], fg.elements[j]), (words[i], words[j]))


def bfs_distance(a, b):
    """Plain forward BFS on element keys (oracle for certificate length)."""
    dist = {a.key(): 0}
    queue = deque([a])
    while queue:
        p = queue.popleft()
        if p.key() == b.key():
            return dist[p.key()]
        for m in MOVES:
            q = apply_move(p, m)
            if q.key() not in dist:
                dist[q.key()] = dist[p.key()] + 1
                queue.append(q)
    return None


def test_move_text():
    assert [str(m) for m in MOVES] == ["T1(1)", "T1(2)", "T2", "T3(1,2)", "T3(2,1)"]
    assert sorted(MOVES) == list(MOVES)
    assert parse_moves("T1(1); T2; T3(2,1)") == (T1_1, T2, T3_21)
    assert format_moves(parse_moves("T1(2);T3(1,2)")) == "T1(2); T3(1,2)"
    with pytest.raises(ValueError):
        NielsenMove(3, 1, 1)
    with pytest.raises(ValueError):
        NielsenMove.parse("T4")


@given(st.lists(st.sampled_from(MOVES), max_size=20))
def test_move_text_roundtrip(ms):
    assert parse_moves(format_moves(ms)) == tuple(ms)


def test_move_examples():
    ctx = group_new((2, 3, 7))
    p = GenPair.from_words(ctx, "s1", "s2")
    q = apply_move(p, T3_12)
    assert q.same_elements(GenPair.from_words(ctx, "s1 s2", "s2"))
    assert str(q.witnesses[0]) == "s1 s2"
    assert apply_move(p, T2).same_elements(GenPair.from_words(ctx, "s2", "s1"))
    assert apply_move(apply_move(p, T1_1), T1_1).same_elements(p)
    assert apply_move(apply_move(p, T1_2), T1_2).same_elements(p)


def test_trivial_searches():
    ctx = group_new((2, 3, 7))
    a = GenPair.from_words(ctx, "s1", "s2")
    assert len(search_equivalence(a, a)) == 0
    cert = search_equivalence(a, GenPair.from_words(ctx, "s2", "s1"))
    assert cert.moves == (T2,)
    with pytest.raises(MixedContextError):
        search_equivalence(a, GenPair.from_words(group_new((2, 3, 8)), "s1", "s2"))


def test_infinite_group_search():
    ctx = group_new((2, 3, 7))
    a = GenPair.from_words(ctx, "s1", "s2")
    b = GenPair.from_words(ctx, "s1 s2 s1", "s2^-1 s1")
    cert = search_equivalence(a, b)
    assert cert.is_valid() and cert.replay().check_witnesses()
    far = a
    for m in [T3_12, T3_21] * 3:
        far = apply_move(far, m)
    with pytest.raises(NotFoundWithinBounds) as info:
        search_equivalence(a, far, max_states=50)
    assert info.value.states_explored > 50
    assert search_equivalence(a, far).is_valid()
    # <s1, s1 s2 s1 s2^2> is a proper subgroup; its Nielsen class grows
    # linearly, so the word-length bound ends the search
    with pytest.raises(NotFoundWithinBounds) as info:
        search_equivalence(a, GenPair.from_words(ctx, "s1", "s1 s2 s1 s2^2"), max_word_len=16)
    assert "16 letters" in str(info.value)


CTX5 = group_new((2, 3, 5))
WORDS5 = element_words(CTX5)
ORBITS5 = exhaustive_orbits(CTX5)
GEN5 = ORBITS5.generating_pairs()


def test_orbits_of_a5():
    assert sorted(len(c) for c in ORBITS5.components) == [600, 600, 1080]
    fg = finite_group(CTX5)
    s1 = fg.generator_index[0]
    assert (s1, s1) not in set(GEN5)


def test_klein_four():
    ctx = group_new((2, 2, 2))
    orb = exhaustive_orbits(ctx)
    fg = orb.group
    assert len(orb.generating_pairs()) == 6
    assert all(i != j and i and j for i, j in orb.generating_pairs())
    assert all(fg.mul(i, i) == 0 for i, _ in orb.generating_pairs())
    assert len(orb.components) == 1


@settings(max_examples=200)
@given(st.integers(0, 59), st.integers(0, 59), st.sampled_from(MOVES))
def test_moves_preserve_subgroup_and_witnesses(i, j, m):
    fg = finite_group(CTX5)
    p = pair_from_indices(CTX5, i, j, WORDS5)
    q = apply_move(p, m)
    assert q.check_witnesses()
    before = fg.subgroup_closure([i, j])
    after = fg.subgroup_closure([fg.index_of(g) for g in q.elements])
    assert before == after


@settings(max_examples=60)
@given(st.sampled_from(GEN5), st.sampled_from(GEN5))
def test_search_agrees_with_orbits_in_a5(x, y):
    a = pair_from_indices(CTX5, *x, WORDS5)
    b = pair_from_indices(CTX5, *y, WORDS5)
    if ORBITS5.same_class(a, b):
        cert = search_equivalence(a, b)
        assert cert.is_valid()
        assert cert.replay().check_witnesses()
        assert len(cert) == bfs_distance(a, b)
        back = invert_certificate(cert)
        assert back.is_valid() and back.end.same_elements(a)
        assert search_equivalence(a, b).moves == cert.moves
    else:
        with pytest.raises(NotFoundWithinBounds):
            search_equivalence(a, b)
        assert bfs_distance(a, b) is None


def test_search_agrees_with_orbits_on_all_a4_pairs():
    ctx = group_new((2, 3, 3))
    words = element_words(ctx)
    orb = exhaustive_orbits(ctx)
    pairs = [pair_from_indices(ctx, i, j, words) for i, j in orb.generating_pairs()]
    assert len(pairs) == 96
    for a, b in itertools.product(pairs, repeat=2):
        try:
            found = search_equivalence(a, b).is_valid()
        except NotFoundWithinBounds:
            found = False
        assert found == orb.same_class(a, b)


def test_inversion_of_t3():
    ctx = group_new((2, 3, 7))
    a = GenPair.from_words(ctx, "s1", "s2")
    cert = Certificate((T3_12, T3_21, T2), a, None)
    end = cert.replay()
    cert = Certificate(cert.moves, a, end)
    back = invert_certificate(cert)
    assert back.moves == (T2, T1_1, T3_21, T1_1, T1_2, T3_12, T1_2)
    assert back.replay().same_elements(a)
