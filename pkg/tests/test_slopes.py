import warnings
from dataclasses import replace
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from hodgewitt import (
    NumberTable,
    SlopeMultiset,
    check_slope_symmetry,
    lies_on_or_above,
    list_entries,
    polygons_equal,
    slope_number_polygon,
    slope_number_table,
    slope_numbers,
)

from conftest import dual_multisets, dual_profiles, slope_numbers_oracle


def k3_h2(h):
    return SlopeMultiset(2, tuple((s, m) for s, m in
                                  ((1 - F(1, h), h), (F(1), 22 - 2 * h), (1 + F(1, h), h)) if m))


@pytest.mark.parametrize("entries, n, expected", [
    (((0, 1), (1, 1)), 1, (1, 1)),
    (((F(1, 2), 2),), 1, (1, 1)),
    (((F(1, 2), 4), (0, 1), (1, 1)), 1, (3, 3)),
])
def test_small_rows(entries, n, expected):
    s = SlopeMultiset(n, entries)
    assert slope_numbers(s) == expected
    assert slope_numbers_oracle(s.entries, n) == expected


@pytest.mark.parametrize("h", range(1, 12))
def test_k3_rows(h):
    s = k3_h2(h)
    assert slope_numbers_oracle(s.entries, 2) == (1, 20, 1)
    assert slope_numbers(s) == (1, 20, 1)


@pytest.mark.parametrize("n, i, k", [(1, 0, 3), (2, 1, 5), (3, 3, 2), (4, 2, 7)])
def test_integral_slopes_land_in_one_column(n, i, k):
    row = slope_numbers(SlopeMultiset(n, ((i, k),)))
    assert row[i] == k
    assert sum(row) == k


def test_slope_number_polygons():
    assert slope_number_polygon((1, 1)).points == ((0, 0), (1, 0), (2, 1))
    assert slope_number_polygon((1, 20, 1)).points == ((0, 0), (1, 0), (21, 20), (22, 22))
    assert slope_number_polygon((0, 22, 0)).normalized().points == ((0, 0), (22, 22))
    with pytest.raises(ValueError):
        slope_number_polygon((1, -1, 1))


def test_non_integral_break_points_warn():
    with pytest.warns(UserWarning):
        row = slope_numbers(SlopeMultiset(1, ((F(1, 3), 1), (F(2, 3), 1))))
    assert row == (1, 1)
    with pytest.warns(UserWarning):
        row = slope_numbers(SlopeMultiset(1, ((F(1, 3), 1),)))
    assert row == (F(2, 3), F(1, 3))


def test_symmetry_examples():
    assert check_slope_symmetry(NumberTable({1: (1, 1)}))
    assert not check_slope_symmetry(NumberTable({1: (2, 1)}))


@given(dual_profiles())
def test_duality_implies_symmetry(p):
    t = slope_number_table(p)
    assert check_slope_symmetry(t)
    for i, j, v in t.entries():
        assert v == slope_numbers_oracle(p.slopes[i + j].entries, i + j)[i]


@given(st.integers(0, 8).flatmap(dual_multisets))
def test_row_sum_integrality_and_dominance(s):
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        row = slope_numbers(s)
    assert sum(row) == s.rank
    assert all(v.denominator == 1 and v >= 0 for v in row)
    newton = s.newton_polygon()
    sn = slope_number_polygon(row)
    assert newton.end == sn.end
    assert lies_on_or_above(newton, sn)


def test_catalog_dominance():
    for entry in list_entries():
        p = entry.profile
        for n in p.degrees:
            newton = p.slopes[n].newton_polygon()
            sn = slope_number_polygon(slope_numbers(p.slopes[n]))
            assert newton.end == sn.end
            assert lies_on_or_above(newton, sn), (entry.id, n)


@given(st.integers(1, 6).flatmap(dual_multisets), st.data())
def test_locality(s, data):
    n = s.degree
    i = data.draw(st.integers(0, n))
    far = [lam for lam, _ in s.entries if not (i - 1 <= lam < i + 1)]
    if not far:
        return
    lam = data.draw(st.sampled_from(far))
    bumped = SlopeMultiset(n, s.entries + ((lam, data.draw(st.integers(1, 5))),))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        assert slope_numbers(bumped)[i] == slope_numbers(s)[i]


def test_ordinary_slope_polygon_matches_newton():
    s = SlopeMultiset(2, ((0, 1), (1, 20), (2, 1)))
    assert polygons_equal(s.newton_polygon(), slope_number_polygon(slope_numbers(s)))
