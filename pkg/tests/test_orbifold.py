from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from trigon.catalog import CATALOG
from trigon.coset import (EnumLimits, free_product_presentation, todd_coxeter,
                          triangle_presentation)
from trigon.errors import CapExceeded, IllegalFillError, InconsistentCoverError, OrbifoldSyntaxError
from trigon.orbifold import (FILL, LEAVE, AlmostCoverPlan, Orbifold, assemble_almost_cover,
                             euler_characteristic, filled_disks_riemann_hurwitz,
                             parse_orbifold, reconstruct_cover, verify_riemann_hurwitz)
from trigon.words import Word


def cover(p1, p2, sub):
    return reconstruct_cover((p1, p2), todd_coxeter(free_product_presentation(p1, p2), sub))


def test_euler():
    assert euler_characteristic(Orbifold.sphere(2, 3, 7)) == Fraction(-1, 42)
    assert euler_characteristic(Orbifold.disk()) == 1
    assert euler_characteristic(Orbifold.disk(2, 3)) == Fraction(-1, 6)
    assert euler_characteristic(Orbifold(1, 1)) == -1


def test_text_forms():
    assert str(Orbifold.sphere(7, 2, 3)) == "S2(2,3,7)"
    assert str(Orbifold.disk(5, 5)) == "D2(5,5)"
    assert str(Orbifold(1, 1)) == "Sigma(g=1,b=1)"
    assert str(Orbifold(0, 2, (3,))) == "Sigma(g=0,b=2;3)"
    assert Orbifold.disk(1, 7) == Orbifold.disk(7)
    assert parse_orbifold("Sigma( g=2 , b=0 ; 3,2)") == Orbifold(2, 0, (2, 3))
    for bad in ("RP2(2)", "T2", "D2(2,x)", "Sigma(g=1)"):
        with pytest.raises(OrbifoldSyntaxError):
            parse_orbifold(bad)


@given(st.integers(0, 4), st.integers(0, 4), st.lists(st.integers(1, 12), max_size=5))
def test_roundtrip(g, b, cones):
    o = Orbifold(g, b, cones)
    assert parse_orbifold(str(o)) == o
    assert 1 not in o.cone_orders


def test_case2_cover():
    r = cover(2, 5, ["S2", "S1 S2 S1^-1"])
    assert r.degree == 2
    assert r.cover == Orbifold.disk(5, 5)
    assert r.boundary_cycles == (2,)
    assert verify_riemann_hurwitz(r)


def test_annulus():
    # <(S1 S2)^2> has index 4 in Z2 * Z2; worked out by hand: S1 and S2 act
    # freely as two 2-cycles each and S1 S2 has two 2-cycles.
    r = cover(2, 2, ["(S1 S2)^2"])
    assert r.degree == 4
    assert r.cone_data == ((2, (2, 2)), (2, (2, 2)))
    assert r.boundary_cycles == (2, 2)
    assert r.cover == Orbifold(0, 2)
    assert verify_riemann_hurwitz(r)


def test_case8_torus():
    r = cover(3, 3, CATALOG["8"].subgroup)
    assert (r.degree, r.cover, r.boundary_cycles) == (3, Orbifold(1, 1), (3,))
    assert 3 * euler_characteristic(Orbifold.disk(3, 3)) == euler_characteristic(r.cover)


@pytest.mark.parametrize("case,ps,d", [("9", (2, 4), 4), ("10", (2, 3), 6), ("1", (2, 3), 1)])
def test_riemann_hurwitz_examples(case, ps, d):
    r = cover(*ps, CATALOG[case].subgroup)
    assert r.degree == d
    assert verify_riemann_hurwitz(r)


def test_wrong_presentation_rejected():
    t = todd_coxeter(triangle_presentation((2, 3, 5)), ["s1", "s2"])
    with pytest.raises(InconsistentCoverError):
        reconstruct_cover((2, 3), t)


def test_almost_cover_examples():
    r = cover(2, 3, CATALOG["3"].subgroup)
    rep = assemble_almost_cover(r, AlmostCoverPlan.filling(r, [1]), 9)
    assert rep.cover_orbifold == Orbifold.disk(2, 9)
    assert rep.exceptional_degrees == (2,) and rep.t == 1 and rep.is_special

    trivial = cover(2, 3, ["S1", "S2"])
    rep = assemble_almost_cover(trivial, AlmostCoverPlan.leave_all(trivial), 7)
    assert rep.cover_orbifold == Orbifold.disk(2, 3)
    assert rep.exceptional_degrees == (1,) and rep.is_special

    r = cover(2, 3, CATALOG["7b"].subgroup)
    rep = assemble_almost_cover(r, AlmostCoverPlan.filling(r, [7, 7]), 7)
    assert rep.cover_orbifold == Orbifold(1, 1)
    assert rep.exceptional_degrees == (4,) and rep.is_special


def test_fill_errors():
    r = cover(2, 3, CATALOG["3"].subgroup)
    with pytest.raises(IllegalFillError):
        AlmostCoverPlan.filling(r, [3])
    with pytest.raises(IllegalFillError):
        assemble_almost_cover(r, AlmostCoverPlan(((1, FILL), (2, FILL))), 9)
    with pytest.raises(IllegalFillError):
        assemble_almost_cover(r, AlmostCoverPlan(((2, LEAVE),)), 9)


def test_special_predicate():
    r = cover(2, 3, CATALOG["5"].subgroup)        # boundary degrees 1, 1, 4
    leave = assemble_almost_cover(r, AlmostCoverPlan.leave_all(r), 7)
    assert not leave.is_special
    one = assemble_almost_cover(r, AlmostCoverPlan.filling(r, [1, 1]), 3)
    assert one.exceptional_degrees == (4,) and not one.is_special   # 4 > 3


words2 = st.lists(st.tuples(st.integers(1, 2), st.integers(-3, 3).filter(bool)),
                  min_size=1, max_size=8).map(Word)


@settings(max_examples=150)
@given(st.sampled_from([(2, 3), (2, 4), (3, 3), (2, 6), (3, 4)]),
       st.lists(words2, min_size=1, max_size=3), st.sampled_from([12, 60, 420]))
def test_random_covers(ps, gens, p3):
    try:
        t = todd_coxeter(free_product_presentation(*ps), gens, EnumLimits(300))
    except CapExceeded:
        assume(False)
    r = reconstruct_cover(ps, t)
    assert verify_riemann_hurwitz(r)
    assert sum(r.boundary_cycles) == r.degree
    for p, lengths in r.cone_data:
        assert sum(lengths) == r.degree and all(p % n == 0 for n in lengths)
    assert all(ps[0] % q == 0 or ps[1] % q == 0 for q in r.cover.cone_orders)
    fillable = [n for n in r.boundary_cycles if p3 % n == 0]
    prev = assemble_almost_cover(r, AlmostCoverPlan.leave_all(r), p3)
    for k in range(1, len(fillable) + 1):
        plan = AlmostCoverPlan.filling(r, fillable[:k])
        rep = assemble_almost_cover(r, plan, p3)
        assert rep.cover_orbifold.boundary_count == prev.cover_orbifold.boundary_count - 1
        assert filled_disks_riemann_hurwitz(plan, p3)
        prev = rep
