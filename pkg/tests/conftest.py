from __future__ import annotations

import itertools
from fractions import Fraction
from math import floor

from hypothesis import strategies as st

from hodgewitt import CohomologyProfile, SlopeMultiset

F = Fraction


def slope_numbers_oracle(entries, n):
    """Each unit at slope λ splits between columns floor(λ) and floor(λ)+1."""
    row = [F(0)] * (n + 2)
    for lam, mult in entries:
        k = floor(lam)
        row[k] += (k + 1 - lam) * mult
        row[k + 1] += (lam - k) * mult
    assert row[n + 1] == 0
    return tuple(row[: n + 1])


def wedge_oracle(entries, n):
    copies = [lam for lam, m in entries for _ in range(m)]
    out = {}
    for combo in itertools.combinations(range(len(copies)), n):
        s = sum((copies[c] for c in combo), F(0))
        out[s] = out.get(s, 0) + 1
    return out


def cumulative_points(entries):
    pts = [(F(0), F(0))]
    for lam, m in sorted(entries):
        x, y = pts[-1]
        pts.append((x + m, y + lam * m))
    return pts


@st.composite
def dual_multisets(draw, n, max_rank=40):
    """Duality-consistent slope data with integral break points for degree n."""
    pieces = draw(st.lists(
        st.tuples(st.integers(1, 6), st.integers(0, 1000), st.integers(1, 3)),
        max_size=4,
    ))
    entries: dict = {}
    rank = 0
    for den, raw, t in pieces:
        lam = F(raw % (n * den + 1), den)
        if lam > F(n, 2):
            lam = n - lam
        step = lam.denominator
        if lam == F(n, 2):
            add = {lam: step * t}
        else:
            add = {lam: step * t, n - lam: step * t}
        size = sum(add.values())
        if rank + size > max_rank:
            continue
        rank += size
        for k, v in add.items():
            entries[k] = entries.get(k, 0) + v
    return SlopeMultiset(n, tuple(entries.items()))


@st.composite
def dual_profiles(draw, dims=(1, 4)):
    dim = draw(st.integers(*dims))
    slopes = {n: draw(dual_multisets(n)) for n in range(2 * dim + 1)}
    return CohomologyProfile("hyp", dim, slopes)
