"""Profiles for the standard families of Hodge-Witt (and non-Hodge-Witt) varieties.

Entry ids::

    point
    elliptic:ordinary          elliptic:supersingular
    curve:g=<g>,f=<f>          genus g, p-rank f
    k3:h=<h>                   K3 of finite height 1 <= h <= 11
    k3:supersingular
    av:g=<g>,f=<f>             abelian variety of dimension g, p-rank f
    product:<idA>*<idB>        Künneth product (right-nested for more factors)

Slope layouts are standard background: a curve or abelian variety of p-rank
f has H^1 slopes {0: f, 1/2: 2(g-f), 1: f}, a K3 of height h has H^2
slopes {1-1/h: h, 1: 22-2h, 1+1/h: h}.
"""

from __future__ import annotations

import difflib
import random
import re
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import comb
from typing import Callable, Optional

from .profile import (
    ZERO_DOMINOES,
    CohomologyProfile,
    DominoTable,
    Flags,
    NumberTable,
    SlopeMultiset,
    is_ordinary,
)

HALF = Fraction(1, 2)
MAX_K3_HEIGHT = 11


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    parameters: dict[str, int] = field(default_factory=dict)
    description: str = ""
    profile: Optional[CohomologyProfile] = None


_MO_FLAGS = dict(crystalline_torsion_free=True, hodge_de_rham_degenerates=True)


def point() -> CohomologyProfile:
    return CohomologyProfile(
        "point", 0, {0: SlopeMultiset(0, ((0, 1),))},
        hodge=NumberTable.from_rows([[1]]),
        dominoes=ZERO_DOMINOES,
        flags=Flags(hodge_witt=True, **_MO_FLAGS),
    )


def _curve_profile(name: str, g: int, f: int) -> CohomologyProfile:
    h1 = {0: f, HALF: 2 * (g - f), 1: f}
    return CohomologyProfile(
        name, 1,
        {
            0: SlopeMultiset(0, ((0, 1),)),
            1: SlopeMultiset.from_dict(1, {s: m for s, m in h1.items() if m}),
            2: SlopeMultiset(2, ((1, 1),)),
        },
        hodge=NumberTable.from_rows([[1], [g, g], [0, 1, 0]]),
        dominoes=ZERO_DOMINOES,
        flags=Flags(hodge_witt=True, **_MO_FLAGS),
    )


def curve(g: int, f: int) -> CohomologyProfile:
    """Smooth proper curve of genus ``g`` and p-rank ``f``; every curve is Hodge-Witt."""
    if g < 0 or not 0 <= f <= g:
        raise CatalogError(f"need g >= 0 and 0 <= f <= g, got g={g}, f={f}")
    return _curve_profile(f"curve:g={g},f={f}", g, f)


def elliptic_curve(kind: str = "ordinary") -> CohomologyProfile:
    if kind not in ("ordinary", "supersingular"):
        raise CatalogError(f"elliptic curve kind must be ordinary or supersingular, not {kind!r}")
    return _curve_profile(f"elliptic:{kind}", 1, 1 if kind == "ordinary" else 0)


_K3_HODGE = NumberTable.from_rows([[1], [0, 0], [1, 20, 1], [0, 0, 0, 0], [0, 0, 1, 0, 0]])


def k3(height) -> CohomologyProfile:
    """K3 surface of the given height, or ``"supersingular"`` for infinite height.

    The supersingular surface is not Hodge-Witt. Its single domino number
    T^{0,2} = 1 is forced: with all slopes equal to 1 the slope numbers in
    degree 2 are (0, 22, 0), and h_W^{0,2} = m^{0,2} + T^{0,2} must equal
    h^{0,2} = 1.
    """
    if height == "supersingular":
        h2 = SlopeMultiset(2, ((1, 22),))
        name = "k3:supersingular"
        dominoes = DominoTable({(0, 2): 1})
        hw = False
    else:
        h = int(height)
        if not 1 <= h <= MAX_K3_HEIGHT:
            raise CatalogError(f"K3 height must be in 1..{MAX_K3_HEIGHT}, got {h}")
        step = Fraction(1, h)
        h2 = SlopeMultiset(2, ((1 - step, h), (1, 22 - 2 * h), (1 + step, h)))
        h2 = SlopeMultiset(2, tuple((s, m) for s, m in h2.entries if m))
        name = f"k3:h={h}"
        dominoes = ZERO_DOMINOES
        hw = True
    return CohomologyProfile(
        name, 2,
        {
            0: SlopeMultiset(0, ((0, 1),)),
            1: SlopeMultiset(1),
            2: h2,
            3: SlopeMultiset(3),
            4: SlopeMultiset(4, ((2, 1),)),
        },
        hodge=_K3_HODGE,
        dominoes=dominoes,
        flags=Flags(hodge_witt=hw, **_MO_FLAGS),
    )


def wedge_power(s: SlopeMultiset, n: int) -> SlopeMultiset:
    """Slopes of the n-th exterior power: sums over n-element sub-multisets.

    Copies of a repeated slope count as distinct, so a slope of multiplicity
    m chosen c times contributes C(m, c) ways.
    """
    if not 0 <= n <= s.rank:
        raise CatalogError(f"wedge power {n} out of range 0..{s.rank}")
    ways: dict[tuple[int, Fraction], int] = {(0, Fraction(0)): 1}
    for slope, mult in s.entries:
        nxt: dict[tuple[int, Fraction], int] = {}
        for (k, total), w in ways.items():
            for c in range(0, min(mult, n - k) + 1):
                key = (k + c, total + c * slope)
                nxt[key] = nxt.get(key, 0) + w * comb(mult, c)
        ways = nxt
    return SlopeMultiset(
        s.degree * n, tuple((total, w) for (k, total), w in ways.items() if k == n)
    )


def abelian_variety(g: int, f: int) -> CohomologyProfile:
    """Abelian variety of dimension g and p-rank f; Hodge-Witt iff f >= g - 1."""
    if g < 1 or not 0 <= f <= g:
        raise CatalogError(f"need g >= 1 and 0 <= f <= g, got g={g}, f={f}")
    h1 = SlopeMultiset.from_dict(1, {s: m for s, m in {0: f, HALF: 2 * (g - f), 1: f}.items() if m})
    slopes = {n: wedge_power(h1, n) for n in range(2 * g + 1)}
    hodge = NumberTable({
        n: tuple(comb(g, i) * comb(g, n - i) for i in range(n + 1)) for n in range(2 * g + 1)
    })
    hw = f >= g - 1
    return CohomologyProfile(
        f"av:g={g},f={f}", g, slopes,
        hodge=hodge,
        dominoes=ZERO_DOMINOES if hw else None,
        flags=Flags(hodge_witt=hw, **_MO_FLAGS),
    )


def _ordinary(p: CohomologyProfile) -> bool:
    return p.hodge is not None and is_ordinary(p)


def kunneth_product(a: CohomologyProfile, b: CohomologyProfile) -> CohomologyProfile:
    """Slope, Hodge and flag data of the product variety a × b.

    The product is declared Hodge-Witt only when one factor is ordinary and
    the other Hodge-Witt; otherwise the flag is left unknown.
    """
    dim = a.dim + b.dim
    slopes = {}
    for n in range(2 * dim + 1):
        pairs = []
        for p in range(max(0, n - 2 * b.dim), min(n, 2 * a.dim) + 1):
            for la, ma in a.slope_multiset(p):
                for lb, mb in b.slope_multiset(n - p):
                    pairs.append((la + lb, ma * mb))
        slopes[n] = SlopeMultiset(n, tuple(pairs))

    hodge = None
    if a.hodge is not None and b.hodge is not None:
        rows = {}
        for n in range(2 * dim + 1):
            row = []
            for i in range(n + 1):
                j = n - i
                row.append(sum(
                    a.hodge[p, q] * b.hodge[i - p, j - q]
                    for p in range(a.dim + 1) for q in range(a.dim + 1)
                ))
            rows[n] = tuple(row)
        hodge = NumberTable(rows)

    hw = None
    if (_ordinary(a) and b.flags.hodge_witt) or (_ordinary(b) and a.flags.hodge_witt):
        hw = True
    return CohomologyProfile(
        f"{a.name}*{b.name}", dim, slopes,
        hodge=hodge,
        dominoes=ZERO_DOMINOES if hw else None,
        flags=Flags(
            hodge_witt=hw,
            crystalline_torsion_free=a.flags.crystalline_torsion_free and b.flags.crystalline_torsion_free,
            hodge_de_rham_degenerates=a.flags.hodge_de_rham_degenerates and b.flags.hodge_de_rham_degenerates,
        ),
    )


# ---------------------------------------------------------------------------
# id registry

_PARAM_RE = re.compile(r"^(\w+)=(-?\d+)$")


def _params(text: str, names: tuple[str, ...]) -> dict[str, int]:
    out = {}
    for part in text.split(","):
        match = _PARAM_RE.match(part.strip())
        if match is None:
            raise CatalogError(f"bad parameter {part!r}")
        out[match.group(1)] = int(match.group(2))
    if tuple(sorted(out)) != tuple(sorted(names)):
        raise CatalogError(f"expected parameters {', '.join(names)}, got {text!r}")
    return out


def _describe(kind: str, params: dict[str, int]) -> str:
    if kind == "curve":
        return f"curve of genus {params['g']} and p-rank {params['f']} (Hodge-Witt)"
    if kind == "av":
        g, f = params["g"], params["f"]
        hw = "Hodge-Witt" if f >= g - 1 else "not Hodge-Witt"
        return f"abelian variety of dimension {g}, p-rank {f} ({hw})"
    if kind == "k3":
        return f"K3 surface of height {params['h']} (Hodge-Witt)"
    return kind


_FIXED: dict[str, tuple[Callable[[], CohomologyProfile], str]] = {
    "point": (point, "a point"),
    "elliptic:ordinary": (lambda: elliptic_curve("ordinary"), "ordinary elliptic curve"),
    "elliptic:supersingular": (
        lambda: elliptic_curve("supersingular"),
        "supersingular elliptic curve (Hodge-Witt, not ordinary)",
    ),
    "k3:supersingular": (
        lambda: k3("supersingular"),
        "supersingular K3 surface: not Hodge-Witt; T^(0,2)=1 forced by "
        "h_W^(0,2) = m^(0,2) + T^(0,2) = 0 + T^(0,2) and h_W^(0,2) = h^(0,2) = 1",
    ),
}


def get_entry(entry_id: str) -> CatalogEntry:
    entry_id = entry_id.strip()
    if entry_id in _FIXED:
        make, desc = _FIXED[entry_id]
        return CatalogEntry(entry_id, {}, desc, make())
    kind, _, rest = entry_id.partition(":")
    if kind == "product" and "*" in rest:
        left, _, right = rest.partition("*")
        a, b = get_entry(left), get_entry(right)
        profile = kunneth_product(a.profile, b.profile)
        profile = _rename(profile, entry_id)
        return CatalogEntry(entry_id, {}, f"product of {a.id} and {b.id}", profile)
    if kind == "curve":
        params = _params(rest, ("g", "f"))
        profile = curve(params["g"], params["f"])
    elif kind == "av":
        params = _params(rest, ("g", "f"))
        profile = abelian_variety(params["g"], params["f"])
    elif kind == "k3":
        params = _params(rest, ("h",))
        profile = k3(params["h"])
    else:
        raise CatalogError(_unknown_message(entry_id))
    return CatalogEntry(entry_id, params, _describe(kind, params), _rename(profile, entry_id))


def _rename(p: CohomologyProfile, name: str) -> CohomologyProfile:
    return replace(p, name=name)


def _unknown_message(entry_id: str) -> str:
    close = difflib.get_close_matches(entry_id, list_ids(), n=1, cutoff=0.4)
    msg = f"unknown catalog id {entry_id!r}"
    if close:
        msg += f"; did you mean {close[0]!r}?"
    return msg


def list_ids() -> list[str]:
    """The ids shown by ``catalog list``; the parametric families accept other values too."""
    return [
        "point",
        "elliptic:ordinary",
        "elliptic:supersingular",
        "curve:g=0,f=0",
        "curve:g=2,f=2",
        "curve:g=2,f=0",
        "curve:g=3,f=1",
        *(f"k3:h={h}" for h in range(1, MAX_K3_HEIGHT + 1)),
        "k3:supersingular",
        "av:g=2,f=2",
        "av:g=2,f=1",
        "av:g=2,f=0",
        "av:g=3,f=3",
        "av:g=3,f=2",
        "av:g=3,f=1",
        "product:elliptic:ordinary*elliptic:ordinary",
        "product:elliptic:ordinary*elliptic:supersingular",
        "product:elliptic:ordinary*k3:h=2",
        "product:curve:g=2,f=2*curve:g=2,f=1",
    ]


def list_entries() -> list[CatalogEntry]:
    return [get_entry(i) for i in list_ids()]


# ---------------------------------------------------------------------------
# random profiles


def random_dual_multiset(
    rng: random.Random, n: int, max_rank: int = 40, max_den: int = 6
) -> SlopeMultiset:
    """Random slopes for degree n satisfying duality and integral break points.

    Slopes a/d <= n/2 come with multiplicity a multiple of d and are mirrored
    by n - a/d, so every segment has integral rise. A middle slope n/2 gets
    an even multiplicity when n is odd.
    """
    entries: dict[Fraction, int] = {}
    rank = 0
    for _ in range(rng.randint(0, 4)):
        d = rng.randint(1, max_den)
        a = rng.randint(0, n * d)
        slope = Fraction(a, d)
        if slope > Fraction(n, 2):
            slope = n - slope
        step = slope.denominator
        if slope == Fraction(n, 2):
            need = step
            if need > max_rank - rank:
                continue
            mult = need * rng.randint(1, max(1, (max_rank - rank) // need // 2))
            entries[slope] = entries.get(slope, 0) + mult
            rank += mult
        else:
            need = 2 * step
            if need > max_rank - rank:
                continue
            t = rng.randint(1, max(1, (max_rank - rank) // need // 2))
            for s in (slope, n - slope):
                entries[s] = entries.get(s, 0) + step * t
            rank += need * t
    return SlopeMultiset(n, tuple(entries.items()))


def random_profile(
    rng: random.Random, dim: Optional[int] = None, max_rank: int = 40
) -> CohomologyProfile:
    """Random valid, duality-consistent profile without Hodge data."""
    if dim is None:
        dim = rng.randint(1, 4)
    slopes = {n: random_dual_multiset(rng, n, max_rank) for n in range(2 * dim + 1)}
    return CohomologyProfile(f"random:dim={dim}", dim, slopes)
