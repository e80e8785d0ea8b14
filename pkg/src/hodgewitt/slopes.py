"""Slope numbers m^{i,j} and the slope-number polygon."""

from __future__ import annotations

import warnings
from fractions import Fraction
from typing import Sequence

from .polygon import Polygon, polygon_from_slope_multiset
from .profile import CohomologyProfile, NumberTable, SlopeMultiset
from .rational import RationalLike, as_rational


def slope_numbers(s: SlopeMultiset) -> tuple[Fraction, ...]:
    """Row (m^{0,n}, ..., m^{n,0}) for the slopes of degree n.

    A slope λ with multiplicity h adds (i+1-λ)·h to m^{i,n-i} when
    λ ∈ [i, i+1), and (λ-i+1)·h when λ ∈ [i-1, i). Both windows are
    half-open, so an integral slope λ = i only feeds column i.
    """
    n = s.degree
    row = [Fraction(0)] * (n + 1)
    for i in range(n + 1):
        total = Fraction(0)
        for slope, mult in s.entries:
            if i <= slope < i + 1:
                total += (i + 1 - slope) * mult
            elif i - 1 <= slope < i:
                total += (slope - i + 1) * mult
        row[i] = total
    if not _integral_break_points(s):
        warnings.warn(
            f"degree {n}: Newton polygon has non-integral break points", stacklevel=2
        )
    return tuple(row)


def _integral_break_points(s: SlopeMultiset) -> bool:
    rise = Fraction(0)
    for slope, mult in s.entries:
        rise += slope * mult
        if rise.denominator != 1:
            return False
    return True


def slope_number_table(p: CohomologyProfile) -> NumberTable:
    return NumberTable({n: slope_numbers(p.slope_multiset(n)) for n in p.degrees})


def slope_number_polygon(row: Sequence[RationalLike]) -> Polygon:
    """Polygon of slope i with horizontal length m^{i,n-i}."""
    row = [as_rational(v) for v in row]
    if any(v < 0 for v in row):
        raise ValueError(f"slope-number row has a negative entry: {row}")
    if any(v.denominator != 1 for v in row):
        warnings.warn("slope-number row is not integral", stacklevel=2)
    return polygon_from_slope_multiset((i, v) for i, v in enumerate(row) if v)


def check_slope_symmetry(t: NumberTable) -> bool:
    """m^{i,j} = m^{j,i} everywhere; both entries sit in degree i+j."""
    return t.is_symmetric()
