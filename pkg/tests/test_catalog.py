import random
from fractions import Fraction as F
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from hodgewitt import (
    CatalogError,
    SlopeMultiset,
    abelian_variety,
    betti_number,
    check_mazur_ogus,
    check_slope_duality,
    curve,
    elliptic_curve,
    get_entry,
    hodge_witt_numbers,
    is_ordinary,
    k3,
    kunneth_product,
    list_entries,
    list_ids,
    point,
    slope_number_table,
    slope_numbers,
    validate_profile,
    verify_main_theorem,
    wedge_power,
)

from conftest import wedge_oracle

HALF = F(1, 2)


def slope_dicts(p):
    return {n: s.as_dict() for n, s in p.slopes.items()}


def test_elliptic_curves():
    for kind in ("ordinary", "supersingular"):
        p = elliptic_curve(kind)
        assert betti_number(p, 1) == 2
        assert p.slopes[0].as_dict() == {0: 1} and p.slopes[2].as_dict() == {1: 1}
    assert is_ordinary(elliptic_curve("ordinary"))
    assert not is_ordinary(elliptic_curve("supersingular"))
    assert verify_main_theorem(elliptic_curve("supersingular")).overall == "pass"
    with pytest.raises(CatalogError):
        elliptic_curve("singular")


def test_curves():
    assert curve(2, 2).slopes[1].as_dict() == {0: 2, 1: 2}
    assert is_ordinary(curve(2, 2))
    assert curve(2, 0).slopes[1].as_dict() == {HALF: 4}
    c = curve(3, 1)
    assert betti_number(c, 1) == 6
    # 1 from slope 0, plus (1 - 1/2) * 4 from the slope-1/2 part
    assert slope_numbers(c.slopes[1]) == (3, 3)
    with pytest.raises(CatalogError):
        curve(2, 3)


def test_k3_family():
    assert k3(1).slopes[2].as_dict() == {0: 1, 1: 20, 2: 1}
    assert slope_numbers(k3(3).slopes[2]) == (1, 20, 1)
    assert k3(11).slopes[2].as_dict() == {F(10, 11): 11, F(12, 11): 11}
    ss = k3("supersingular")
    assert ss.flags.hodge_witt is False
    assert hodge_witt_numbers(slope_number_table(ss), ss.dominoes).row(2) == (1, 20, 1)
    for bad in (0, 12, 99):
        with pytest.raises(CatalogError):
            k3(bad)


def test_abelian_varieties():
    assert slope_dicts(abelian_variety(1, 1)) == slope_dicts(elliptic_curve("ordinary"))
    assert slope_dicts(abelian_variety(1, 0)) == slope_dicts(elliptic_curve("supersingular"))
    av = abelian_variety(2, 2)
    assert av.slopes[2].as_dict() == {0: 1, 1: 4, 2: 1}
    assert betti_number(av, 2) == 6
    assert abelian_variety(2, 1).flags.hodge_witt is True
    assert abelian_variety(3, 1).flags.hodge_witt is False
    assert abelian_variety(3, 1).dominoes is None
    for n in range(7):
        assert abelian_variety(3, 2).hodge.row(n) == tuple(
            comb(3, i) * comb(3, n - i) for i in range(n + 1))
    with pytest.raises(CatalogError):
        abelian_variety(0, 0)


def test_wedge_examples():
    s = SlopeMultiset(1, ((0, 1), (1, 1)))
    assert wedge_power(s, 0).as_dict() == {0: 1}
    assert wedge_power(s, 2).as_dict() == {1: 1}
    assert wedge_power(SlopeMultiset(1, ((HALF, 4),)), 2).as_dict() == {1: 6}
    assert wedge_oracle([(HALF, 4)], 2) == {1: 6}
    with pytest.raises(CatalogError):
        wedge_power(s, 3)


@given(st.lists(st.tuples(st.fractions(0, 2, max_denominator=4), st.integers(1, 3)),
                max_size=3), st.data())
def test_wedge_matches_brute_force(entries, data):
    s = SlopeMultiset(1, tuple(entries))
    n = data.draw(st.integers(0, s.rank))
    assert wedge_power(s, n).as_dict() == wedge_oracle(s.entries, n)


@pytest.mark.parametrize("g, f", [(2, 2), (2, 1), (3, 0), (3, 3), (3, 1)])
def test_av_wedge_cross_oracle(g, f):
    av = abelian_variety(g, f)
    for n in range(2 * g + 1):
        assert av.slopes[n].as_dict() == wedge_oracle(av.slopes[1].entries, n)


def g_fold(p, g):
    out = p
    for _ in range(g - 1):
        out = kunneth_product(out, p)
    return out


@pytest.mark.parametrize("g", [2, 3])
def test_av_equals_products_of_elliptic_curves(g):
    assert slope_dicts(g_fold(elliptic_curve("ordinary"), g)) == slope_dicts(abelian_variety(g, g))
    assert slope_dicts(g_fold(elliptic_curve("supersingular"), g)) == slope_dicts(abelian_variety(g, 0))
    assert g_fold(elliptic_curve("ordinary"), g).hodge == abelian_variety(g, g).hodge


def test_product_examples():
    p = kunneth_product(elliptic_curve("ordinary"), elliptic_curve("supersingular"))
    assert p.slopes[1].as_dict() == {0: 1, HALF: 2, 1: 1}
    assert p.flags.hodge_witt is True
    ss = kunneth_product(elliptic_curve("supersingular"), elliptic_curve("supersingular"))
    assert ss.flags.hodge_witt is None and ss.dominoes is None
    for x in (k3(3), curve(2, 1), abelian_variety(2, 1)):
        xp = kunneth_product(x, point())
        assert (xp.dim, xp.slopes, xp.hodge, xp.flags) == (x.dim, x.slopes, x.hodge, x.flags)


def hodge_oracle(a, b, i, j):
    total = 0
    for p in range(a.dim + 1):
        for q in range(a.dim + 1):
            for r in range(b.dim + 1):
                for s in range(b.dim + 1):
                    if p + r == i and q + s == j:
                        total += a.hodge[p, q] * b.hodge[r, s]
    return total


CATALOG = [e.profile for e in list_entries() if e.profile.dim <= 3]


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(CATALOG), st.sampled_from(CATALOG))
def test_betti_multiplicativity_and_commutativity(a, b):
    ab, ba = kunneth_product(a, b), kunneth_product(b, a)
    for n in ab.degrees:
        expected = sum(betti_number(a, p) * betti_number(b, n - p)
                       for p in a.degrees if n - p in b.degrees)
        assert betti_number(ab, n) == expected
    assert ab.slopes == ba.slopes and ab.hodge == ba.hodge and ab.flags == ba.flags
    for i, j, v in ab.hodge.entries():
        assert v == hodge_oracle(a, b, i, j)


def test_associativity_on_slopes():
    rng = random.Random(7)
    small = [e.profile for e in list_entries() if e.profile.dim <= 1]
    for _ in range(20):
        a, b, c = (rng.choice(small) for _ in range(3))
        left = kunneth_product(kunneth_product(a, b), c)
        right = kunneth_product(a, kunneth_product(b, c))
        assert left.slopes == right.slopes and left.hodge == right.hodge


def test_generators_produce_valid_dual_profiles():
    for entry in list_entries():
        p = entry.profile
        assert validate_profile(p) == [], entry.id
        assert check_slope_duality(p), entry.id
        assert check_mazur_ogus(p).verdict == "pass", entry.id


def test_ids():
    ids = list_ids()
    assert len(ids) >= 7
    assert len(set(ids)) == len(ids)
    for entry_id in ids:
        assert get_entry(entry_id).profile.name == entry_id
    assert get_entry("curve:f=1,g=4").profile.slopes[1].as_dict() == {0: 1, HALF: 6, 1: 1}
    nested = get_entry("product:elliptic:ordinary*product:elliptic:ordinary*elliptic:ordinary")
    assert slope_dicts(nested.profile) == slope_dicts(abelian_variety(3, 3))
    assert "T^(0,2)=1" in get_entry("k3:supersingular").description


@pytest.mark.parametrize("bad", ["k3:h=99", "k3:height=2", "elliptic:ordinray", "torus", "av:g=2"])
def test_bad_ids(bad):
    with pytest.raises(CatalogError):
        get_entry(bad)


def test_suggestion():
    with pytest.raises(CatalogError, match="elliptic:ordinary"):
        get_entry("elliptic:ordinray")
