import pytest
from hypothesis import assume, given, settings, strategies as st

from trigon.catalog import CATALOG
from trigon.coset import (EnumLimits, FpPresentation, SubgroupSpec, action_cycles,
                          free_product_presentation, todd_coxeter, triangle_presentation)
from trigon.errors import CapExceeded
from trigon.tits import eval_word, finite_group, group_new
from trigon.words import Word, parse_word

HLT = EnumLimits(strategy="hlt")
FELSCH = EnumLimits(strategy="felsch")

CASE3 = ["S1", "S2^-1 S1 S2^2"]


def test_builders():
    assert free_product_presentation(2, 3).relators == (parse_word("g1^2"), parse_word("g2^3"))
    t = triangle_presentation((2, 3, 7))
    assert t.generator_count == 3
    assert [str(r) for r in t.relators] == ["s1^2", "s2^3", "s3^7", "s1 s2 s3"]
    with pytest.raises(ValueError):
        FpPresentation(2, ("s3",))


@pytest.mark.parametrize("limits", [HLT, FELSCH])
def test_examples(limits):
    assert todd_coxeter(free_product_presentation(2, 5), ["S2", "S1 S2 S1^-1"], limits).index == 2
    assert todd_coxeter(free_product_presentation(2, 3), ["S1", "S2"], limits).index == 1
    t = todd_coxeter(free_product_presentation(2, 3), CASE3, limits)
    assert t.index == 3
    assert action_cycles(t, "S1 S2") == [1, 2]
    assert action_cycles(t, "") == [1, 1, 1]
    assert todd_coxeter(triangle_presentation((2, 3, 5)), [], limits).index == 60
    assert todd_coxeter(triangle_presentation((2, 2, 2)), [], limits).index == 4


def test_case5_cycles():
    t = todd_coxeter(free_product_presentation(2, 3), CATALOG["5"].subgroup)
    assert t.index == 6
    assert action_cycles(t, "S1 S2") == [1, 1, 4]


def test_case7b_index():
    t = todd_coxeter(free_product_presentation(2, 3), CATALOG["7b"].subgroup)
    assert t.index == 18
    assert action_cycles(t, "S1 S2") == [4, 7, 7]


@pytest.mark.parametrize("sig,size", [((2, 3, 3), 12), ((2, 3, 4), 24), ((2, 3, 5), 60),
                                      ((2, 2, 5), 10), ((2, 2, 2), 4)])
def test_trivial_subgroup_matches_enumeration(sig, size):
    assert len(finite_group(group_new(sig))) == size
    for lim in (HLT, FELSCH):
        assert todd_coxeter(triangle_presentation(sig), [], lim).index == size


@pytest.mark.parametrize("case", [c for c, s in CATALOG.items() if s.subgroup])
def test_strategy_independence_on_catalog(case):
    for p1, p2 in ((2, 3), (2, 5), (3, 3), (2, 4)):
        try:
            a = todd_coxeter(free_product_presentation(p1, p2), CATALOG[case].subgroup, EnumLimits(5000, "hlt"))
        except CapExceeded:
            with pytest.raises(CapExceeded):
                todd_coxeter(free_product_presentation(p1, p2), CATALOG[case].subgroup,
                             EnumLimits(5000, "felsch"))
            continue
        b = todd_coxeter(free_product_presentation(p1, p2), CATALOG[case].subgroup, FELSCH)
        assert a.perms == b.perms


def test_standardized_numbering():
    t = todd_coxeter(triangle_presentation((2, 3, 4)), [])
    # coset k is first reached from a smaller coset, scanning g1, g1^-1, g2, ...
    seen = [0]
    for c in range(t.size):
        for p, q in zip(t.perms, t.inverse_perms()):
            for d in (p[c], q[c]):
                if d not in seen:
                    seen.append(d)
    assert seen == list(range(t.size))


def test_cap():
    with pytest.raises(CapExceeded) as info:
        todd_coxeter(free_product_presentation(2, 3), [], EnumLimits(500))
    assert info.value.high_water <= 500
    with pytest.raises(CapExceeded):
        todd_coxeter(triangle_presentation((2, 3, 5)), [], EnumLimits(10, "felsch"))


def test_limits_from_env():
    assert EnumLimits.from_env(environ={"TRIGON_MAX_COSETS": "77"}).max_cosets == 77
    assert EnumLimits.from_env(environ={}).max_cosets == 1_000_000
    with pytest.raises(ValueError):
        EnumLimits(0)
    with pytest.raises(ValueError):
        EnumLimits(strategy="random")


def test_bad_subgroup_word():
    with pytest.raises(ValueError):
        todd_coxeter(free_product_presentation(2, 3), ["S3"])


words3 = st.lists(st.tuples(st.integers(1, 3), st.integers(-4, 4).filter(bool)),
                  min_size=1, max_size=8).map(Word)


@settings(max_examples=150)
@given(st.sampled_from([(2, 3, 4), (2, 3, 5), (2, 2, 6)]), st.lists(words3, min_size=1, max_size=3),
       st.sampled_from(["hlt", "felsch"]))
def test_index_times_order_is_group_order(sig, gens, strategy):
    # oracle: subgroup closure over the matrix group
    fg = finite_group(group_new(sig))
    ctx = group_new(sig)
    h = fg.subgroup_closure([fg.index_of(eval_word(ctx, w)) for w in gens])
    t = todd_coxeter(triangle_presentation(sig), gens, EnumLimits(strategy=strategy))
    assert t.index * len(h) == len(fg)


words2 = st.lists(st.tuples(st.integers(1, 2), st.integers(-3, 3).filter(bool)),
                  min_size=1, max_size=8).map(Word)


@settings(max_examples=150)
@given(st.sampled_from([(2, 3), (2, 4), (3, 3), (2, 5)]), st.lists(words2, min_size=1, max_size=3))
def test_free_product_tables(ps, gens):
    pres = free_product_presentation(*ps)
    try:
        a = todd_coxeter(pres, gens, EnumLimits(400, "hlt"))
    except CapExceeded:
        assume(False)
    b = todd_coxeter(pres, gens, EnumLimits(400_000, "felsch"))
    assert a.perms == b.perms
    for g, p in ((1, ps[0]), (2, ps[1])):
        assert all(p % n == 0 for n in action_cycles(a, Word.gen(g)))
    for w in gens + [parse_word("S1 S2"), parse_word("S2^-1 S1 S2")]:
        assert sum(action_cycles(a, w)) == a.index
    assert a.check()
