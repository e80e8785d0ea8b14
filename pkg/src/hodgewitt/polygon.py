"""Convex piecewise-linear polygons with exact rational break points.

Newton, Hodge and slope-number polygons all use the same carrier: a list of
break points starting at the origin, with non-decreasing segment slopes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .rational import RationalLike, as_rational, format_rational

Point = tuple[Fraction, Fraction]


class PolygonError(ValueError):
    pass


class PolygonDomainError(PolygonError):
    """Two polygons were compared over different horizontal extents."""


@dataclass(frozen=True)
class Polygon:
    points: tuple[Point, ...]

    def __post_init__(self) -> None:
        pts = tuple((as_rational(x), as_rational(y)) for x, y in self.points)
        object.__setattr__(self, "points", pts)
        if not pts or pts[0] != (0, 0):
            raise PolygonError("polygon must start at (0, 0)")
        for (x0, _), (x1, _) in zip(pts, pts[1:]):
            if x1 <= x0:
                raise PolygonError("break point x-coordinates must strictly increase")
        slopes = self.slopes
        for s0, s1 in zip(slopes, slopes[1:]):
            if s1 < s0:
                raise PolygonError("polygon is not convex")

    @classmethod
    def from_points(cls, points: Iterable[tuple[RationalLike, RationalLike]]) -> "Polygon":
        return cls(tuple((as_rational(x), as_rational(y)) for x, y in points))

    @property
    def slopes(self) -> tuple[Fraction, ...]:
        return tuple(
            (y1 - y0) / (x1 - x0)
            for (x0, y0), (x1, y1) in zip(self.points, self.points[1:])
        )

    @property
    def length(self) -> Fraction:
        return self.points[-1][0]

    @property
    def end(self) -> Point:
        return self.points[-1]

    def value_at(self, x: RationalLike) -> Fraction:
        """Height of the polygon at ``x`` by linear interpolation."""
        x = as_rational(x)
        if x < 0 or x > self.length:
            raise PolygonDomainError(f"x={x} outside [0, {self.length}]")
        for (x0, y0), (x1, y1) in zip(self.points, self.points[1:]):
            if x0 <= x <= x1:
                return y0 + (y1 - y0) * (x - x0) / (x1 - x0)
        return self.points[0][1]

    def normalized(self) -> "Polygon":
        """Drop interior break points where the slope does not change."""
        kept = [self.points[0]]
        slopes = self.slopes
        for k in range(1, len(self.points) - 1):
            if slopes[k - 1] != slopes[k]:
                kept.append(self.points[k])
        if len(self.points) > 1:
            kept.append(self.points[-1])
        return Polygon(tuple(kept))

    def __str__(self) -> str:
        return " ".join(
            f"({format_rational(x)},{format_rational(y)})" for x, y in self.points
        )


def polygon_from_slope_multiset(
    slopes: Iterable[tuple[RationalLike, int]],
) -> Polygon:
    """Build the convex polygon with a segment of slope λ and length m per (λ, m).

    Segments are laid out in ascending slope order, so the result does not
    depend on input order. Equal slopes are merged into one segment.
    """
    merged: dict[Fraction, Fraction] = {}
    for slope, mult in slopes:
        mult = as_rational(mult)
        if mult <= 0:
            raise PolygonError(f"non-positive multiplicity {mult} for slope {slope}")
        slope = as_rational(slope)
        merged[slope] = merged.get(slope, Fraction(0)) + mult
    x = y = Fraction(0)
    points = [(x, y)]
    for slope in sorted(merged):
        x += merged[slope]
        y += slope * merged[slope]
        points.append((x, y))
    return Polygon(tuple(points))


def _check_domain(a: Polygon, b: Polygon) -> None:
    if a.length != b.length:
        raise PolygonDomainError(
            f"polygons have different lengths {a.length} and {b.length}"
        )


def lies_on_or_above(upper: Polygon, lower: Polygon) -> bool:
    """True iff ``upper(x) >= lower(x)`` on the whole common domain.

    Both are piecewise linear, so comparing at the union of break-point
    x-coordinates is enough.
    """
    _check_domain(upper, lower)
    xs = sorted({x for x, _ in upper.points} | {x for x, _ in lower.points})
    return all(upper.value_at(x) >= lower.value_at(x) for x in xs)


def polygons_equal(a: Polygon, b: Polygon) -> bool:
    return a.normalized().points == b.normalized().points


def comparison_table(polygons: Sequence[Polygon]) -> list[tuple[Fraction, tuple[Fraction, ...]]]:
    """Heights of each polygon at the union of all break-point x-coordinates."""
    if not polygons:
        return []
    for other in polygons[1:]:
        _check_domain(polygons[0], other)
    xs = sorted({x for poly in polygons for x, _ in poly.points})
    return [(x, tuple(poly.value_at(x) for poly in polygons)) for x in xs]
