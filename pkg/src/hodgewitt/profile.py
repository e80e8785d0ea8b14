"""Cohomological profile of a smooth proper variety in characteristic p.

A profile carries, for every degree n in 0..2*dim, the Frobenius slopes of
H^n_cris with their multiplicities, plus optional Hodge numbers, optional
domino numbers and the three hypotheses of the Hodge symmetry theorem as
flags. Nothing here is computed from equations; all data is input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional

from .polygon import Polygon, polygon_from_slope_multiset, polygons_equal
from .rational import RationalLike, as_rational, format_rational


class ProfileError(ValueError):
    pass


class MissingHodgeDataError(ProfileError):
    pass


class DominoesUnknownError(ProfileError):
    pass


class HypothesisError(ProfileError):
    pass


@dataclass(frozen=True)
class SlopeMultiset:
    """Frobenius slopes of one cohomological degree, merged and sorted.

    Construction never rejects data; :func:`validate_profile` reports bad
    multiplicities, out-of-range slopes and non-integral break points.
    """

    degree: int
    entries: tuple[tuple[Fraction, int], ...] = ()

    def __post_init__(self) -> None:
        merged: dict[Fraction, int] = {}
        for slope, mult in self.entries:
            slope = as_rational(slope)
            merged[slope] = merged.get(slope, 0) + int(mult)
        object.__setattr__(
            self, "entries", tuple(sorted(merged.items(), key=lambda kv: kv[0]))
        )

    @classmethod
    def from_dict(cls, degree: int, slopes: Mapping[RationalLike, int]) -> "SlopeMultiset":
        return cls(degree, tuple((as_rational(s), m) for s, m in slopes.items()))

    @property
    def rank(self) -> int:
        return sum(m for _, m in self.entries)

    def multiplicity(self, slope: RationalLike) -> int:
        slope = as_rational(slope)
        for s, m in self.entries:
            if s == slope:
                return m
        return 0

    def as_dict(self) -> dict[Fraction, int]:
        return dict(self.entries)

    def newton_polygon(self) -> Polygon:
        return polygon_from_slope_multiset(self.entries)

    def __iter__(self) -> Iterator[tuple[Fraction, int]]:
        return iter(self.entries)

    def __str__(self) -> str:
        body = ", ".join(f"{format_rational(s)}:{m}" for s, m in self.entries)
        return "{" + body + "}"


@dataclass(frozen=True)
class NumberTable:
    """Rows of values v^{i,n-i} indexed by degree n; row n is (v^{0,n}, ..., v^{n,0}).

    Used for slope numbers, Hodge-Witt numbers and Hodge numbers. Entries
    outside a stored row read as 0.
    """

    rows: Mapping[int, tuple[Fraction, ...]]

    def __post_init__(self) -> None:
        rows = {}
        for n, row in self.rows.items():
            row = tuple(as_rational(v) for v in row)
            if n < 0 or len(row) != n + 1:
                raise ProfileError(f"row for degree {n} must have {n + 1} entries, got {len(row)}")
            rows[int(n)] = row
        object.__setattr__(self, "rows", dict(sorted(rows.items())))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[RationalLike]]) -> "NumberTable":
        """Rows listed in degree order starting at 0."""
        return cls({n: tuple(row) for n, row in enumerate(rows)})

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(self.rows)

    def row(self, n: int) -> tuple[Fraction, ...]:
        return self.rows[n]

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        row = self.rows.get(i + j)
        if row is None or i < 0 or j < 0:
            return Fraction(0)
        return row[i]

    def entries(self) -> Iterator[tuple[int, int, Fraction]]:
        for n, row in self.rows.items():
            for i, v in enumerate(row):
                yield i, n - i, v

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for _, _, v in self.entries())

    def asymmetries(self) -> list[tuple[int, int, Fraction, Fraction]]:
        """Pairs (i, j, v^{i,j}, v^{j,i}) with i < j where the values differ."""
        return [
            (i, j, v, self[j, i])
            for i, j, v in self.entries()
            if i < j and v != self[j, i]
        ]

    def is_symmetric(self) -> bool:
        return not self.asymmetries()

    def int_rows(self) -> dict[int, list]:
        """Rows with integral entries as ``int``; for display and serialization."""
        return {
            n: [int(v) if v.denominator == 1 else v for v in row]
            for n, row in self.rows.items()
        }


@dataclass(frozen=True)
class DominoTable:
    """Domino numbers T^{i,j}; entries not stored are zero."""

    values: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(
            self,
            "values",
            {(int(i), int(j)): int(t) for (i, j), t in sorted(self.values.items()) if t != 0},
        )

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.values.get(ij, 0)

    def is_zero(self) -> bool:
        return not self.values

    def __add__(self, other: "DominoTable") -> "DominoTable":
        keys = set(self.values) | set(other.values)
        return DominoTable({k: self[k] + other[k] for k in keys})


ZERO_DOMINOES = DominoTable()


@dataclass(frozen=True)
class Flags:
    hodge_witt: Optional[bool] = None
    crystalline_torsion_free: bool = False
    hodge_de_rham_degenerates: bool = False


@dataclass(frozen=True)
class CohomologyProfile:
    """Everything the verifier knows about one variety.

    ``dominoes=None`` means the domino numbers are unknown, which is distinct
    from an all-zero :class:`DominoTable`.
    """

    name: str
    dim: int
    slopes: Mapping[int, SlopeMultiset]
    hodge: Optional[NumberTable] = None
    dominoes: Optional[DominoTable] = None
    flags: Flags = Flags()

    def __post_init__(self) -> None:
        object.__setattr__(self, "slopes", dict(sorted(self.slopes.items())))

    @property
    def degrees(self) -> range:
        return range(0, 2 * self.dim + 1)

    def slope_multiset(self, n: int) -> SlopeMultiset:
        if n not in self.degrees:
            raise ProfileError(f"degree {n} outside 0..{2 * self.dim}")
        return self.slopes.get(n, SlopeMultiset(n))


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    degree: Optional[int] = None
    i: Optional[int] = None
    j: Optional[int] = None

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


def _slope_violations(n: int, s: SlopeMultiset) -> list[Violation]:
    out = []
    for slope, mult in s.entries:
        if mult <= 0:
            out.append(Violation(
                "non-positive-multiplicity",
                f"degree {n}: slope {format_rational(slope)} has multiplicity {mult}",
                degree=n,
            ))
        if not 0 <= slope <= n:
            out.append(Violation(
                "slope-out-of-range",
                f"degree {n}: slope {format_rational(slope)} outside [0, {n}]",
                degree=n,
            ))
    rise = Fraction(0)
    for slope, mult in s.entries:
        rise += slope * mult
        if rise.denominator != 1:
            out.append(Violation(
                "non-integral-break-point",
                f"degree {n}: Newton polygon break point after slope "
                f"{format_rational(slope)} has height {format_rational(rise)}",
                degree=n,
            ))
            break
    return out


def validate_profile(p: CohomologyProfile) -> list[Violation]:
    """Every invariant violation of ``p``; an empty list means valid."""
    out: list[Violation] = []
    if p.dim < 0:
        return [Violation("negative-dimension", f"dim = {p.dim}")]
    top = 2 * p.dim
    for n in p.degrees:
        if n not in p.slopes:
            out.append(Violation("missing-degree", f"no slope data for degree {n}", degree=n))
    for n, s in p.slopes.items():
        if n not in p.degrees:
            out.append(Violation(
                "degree-out-of-range", f"slope data for degree {n} outside 0..{top}", degree=n
            ))
            continue
        if s.degree != n:
            out.append(Violation(
                "degree-mismatch", f"multiset stored under degree {n} is for degree {s.degree}",
                degree=n,
            ))
        out.extend(_slope_violations(n, s))

    if p.hodge is not None:
        for n in p.degrees:
            if n not in p.hodge.rows:
                out.append(Violation(
                    "hodge-missing-degree", f"no Hodge numbers for degree {n}", degree=n
                ))
        for n in p.hodge.rows:
            if n not in p.degrees:
                out.append(Violation(
                    "hodge-degree-out-of-range", f"Hodge row for degree {n} outside 0..{top}",
                    degree=n,
                ))
        for i, j, v in p.hodge.entries():
            if v < 0 or v.denominator != 1:
                out.append(Violation(
                    "hodge-not-natural", f"h^{{{i},{j}}} = {format_rational(v)}",
                    degree=i + j, i=i, j=j,
                ))
            elif v and (i > p.dim or j > p.dim):
                out.append(Violation(
                    "hodge-out-of-range", f"h^{{{i},{j}}} = {v} but dim = {p.dim}",
                    degree=i + j, i=i, j=j,
                ))

    if p.dominoes is not None:
        for (i, j), t in p.dominoes.values.items():
            if t < 0:
                out.append(Violation(
                    "domino-negative", f"T^{{{i},{j}}} = {t}", degree=i + j, i=i, j=j
                ))
            elif not (0 <= i <= p.dim and 0 <= j <= p.dim):
                out.append(Violation(
                    "domino-out-of-range", f"T^{{{i},{j}}} = {t} but dim = {p.dim}",
                    degree=i + j, i=i, j=j,
                ))
        if p.flags.hodge_witt and not p.dominoes.is_zero():
            for (i, j), t in p.dominoes.values.items():
                out.append(Violation(
                    "domino-flag-conflict",
                    f"Hodge-Witt flag set but T^{{{i},{j}}} = {t}",
                    degree=i + j, i=i, j=j,
                ))
    return out


def duality_mismatches(p: CohomologyProfile) -> list[tuple[int, Fraction, int, int]]:
    """(n, λ, mult(λ), mult(n - λ)) wherever slope duality fails."""
    out = []
    for n, s in p.slopes.items():
        for slope, mult in s.entries:
            dual = s.multiplicity(n - slope)
            if dual != mult:
                out.append((n, slope, mult, dual))
    return out


def check_slope_duality(p: CohomologyProfile) -> bool:
    """Whether each slope λ in degree n is matched by n - λ with equal multiplicity."""
    return not duality_mismatches(p)


def betti_number(p: CohomologyProfile, n: int) -> int:
    return p.slope_multiset(n).rank


def newton_polygon(p: CohomologyProfile, n: int) -> Polygon:
    return p.slope_multiset(n).newton_polygon()


def hodge_polygon(p: CohomologyProfile, n: int) -> Polygon:
    """Polygon with slope i repeated h^{i,n-i} times."""
    if p.hodge is None:
        raise MissingHodgeDataError(f"profile {p.name!r} has no Hodge numbers")
    if n not in p.hodge.rows:
        raise MissingHodgeDataError(f"profile {p.name!r} has no Hodge row in degree {n}")
    return polygon_from_slope_multiset(
        (i, h) for i, h in enumerate(p.hodge.row(n)) if h != 0
    )


def is_ordinary(p: CohomologyProfile) -> bool:
    """Newton polygon equals Hodge polygon in every degree."""
    if p.hodge is None:
        raise MissingHodgeDataError(f"profile {p.name!r} has no Hodge numbers")
    for n in p.degrees:
        newton = newton_polygon(p, n)
        hodge = hodge_polygon(p, n)
        if newton.length != hodge.length or not polygons_equal(newton, hodge):
            return False
    return True
