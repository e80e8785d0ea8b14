"""Hodge-Witt numbers and the individual checks feeding the theorem verifier."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .profile import (
    ZERO_DOMINOES,
    CohomologyProfile,
    DominoTable,
    DominoesUnknownError,
    HypothesisError,
    MissingHodgeDataError,
    NumberTable,
    betti_number,
)
from .report import CheckResult, Evidence
from .slopes import slope_number_table


def domino_correction(T: DominoTable, i: int, j: int) -> int:
    return T[i, j] - 2 * T[i - 1, j + 1] + T[i - 2, j + 2]


def hodge_witt_numbers(m: NumberTable, T: Optional[DominoTable]) -> NumberTable:
    """h_W^{i,j} = m^{i,j} + T^{i,j} - 2 T^{i-1,j+1} + T^{i-2,j+2}.

    ``T=None`` stands for unknown dominoes and is refused rather than read
    as zero. Out-of-range domino indices contribute 0. The result may have
    negative entries.
    """
    if T is None:
        raise DominoesUnknownError("domino numbers are unknown")
    return NumberTable({
        n: tuple(v + domino_correction(T, i, n - i) for i, v in enumerate(row))
        for n, row in m.rows.items()
    })


def check_hodge_witt_symmetry(hw: NumberTable) -> bool:
    return hw.is_symmetric()


def check_hodge_symmetry(h: NumberTable) -> bool:
    """h^{p,q} = h^{q,p} for all p, q."""
    return h.is_symmetric()


def symmetry_evidence(table: NumberTable, note: str = "") -> tuple[Evidence, ...]:
    return tuple(
        Evidence(degree=i + j, i=i, j=j, values={"h_ij": a, "h_ji": b}, note=note)
        for i, j, a, b in table.asymmetries()
    )


def _hodge_sum(h: NumberTable, n: int) -> Fraction:
    return sum(h.rows.get(n, ()), Fraction(0))


def mazur_ogus_gate(p: CohomologyProfile) -> list[str]:
    """Reasons ``check_mazur_ogus`` cannot run; empty when it can."""
    missing = []
    if not p.flags.crystalline_torsion_free:
        missing.append("crystalline torsion-free hypothesis absent")
    if not p.flags.hodge_de_rham_degenerates:
        missing.append("Hodge-de Rham degeneration hypothesis absent")
    if p.hodge is None:
        missing.append("no Hodge numbers")
    return missing


def check_mazur_ogus(p: CohomologyProfile) -> CheckResult:
    """Compare b_n with the sum of the Hodge row in each degree.

    Torsion-free crystalline cohomology makes b_n the de Rham dimension, and
    Hodge-de Rham degeneration makes that the Hodge row sum. Evidence lists
    only the degrees that disagree.
    """
    missing = mazur_ogus_gate(p)
    if missing:
        return CheckResult("mazur-ogus", "skipped", "; ".join(missing))
    bad = []
    for n in p.degrees:
        b, s = betti_number(p, n), _hodge_sum(p.hodge, n)
        if b != s:
            bad.append(Evidence(degree=n, values={"betti": b, "hodge_sum": s}))
    if bad:
        return CheckResult(
            "mazur-ogus", "fail",
            "Betti number differs from Hodge row sum in degree(s) "
            + ", ".join(str(e.degree) for e in bad),
            tuple(bad),
        )
    return CheckResult("mazur-ogus", "pass", f"b_n = sum of h^(i,n-i) for n = 0..{2 * p.dim}")


def dominoes_for(p: CohomologyProfile) -> tuple[DominoTable, bool]:
    """Domino table to use, and whether zero was substituted for unknown values."""
    if p.flags.hodge_witt:
        return ZERO_DOMINOES, p.dominoes is None
    if p.dominoes is None:
        raise DominoesUnknownError(
            f"profile {p.name!r}: dominoes unknown and Hodge-Witt hypothesis absent"
        )
    return p.dominoes, False


@dataclass(frozen=True)
class EkedahlResult:
    predicted: NumberTable
    disagreements: tuple[Evidence, ...]

    @property
    def agrees(self) -> bool:
        return not self.disagreements


def apply_ekedahl_equality(p: CohomologyProfile) -> EkedahlResult:
    """Predict Hodge numbers as h_W and compare with the given Hodge table.

    Valid only for Mazur-Ogus profiles; h_W = h there is taken as a known
    result and not rederived.
    """
    mo = check_mazur_ogus(p)
    if mo.verdict != "pass":
        raise HypothesisError(f"Mazur-Ogus condition not satisfied: {mo.reason}")
    T, _ = dominoes_for(p)
    predicted = hodge_witt_numbers(slope_number_table(p), T)
    return EkedahlResult(predicted, hodge_disagreements(predicted, p.hodge))


def hodge_disagreements(predicted: NumberTable, hodge: NumberTable) -> tuple[Evidence, ...]:
    return tuple(
        Evidence(degree=i + j, i=i, j=j, values={"h_W": v, "h": hodge[i, j]})
        for i, j, v in predicted.entries()
        if v != hodge[i, j]
    )


def check_betti_parity(p: CohomologyProfile) -> CheckResult:
    odd = [n for n in p.degrees if n % 2 == 1]
    bad = tuple(
        Evidence(degree=n, values={"betti": betti_number(p, n)})
        for n in odd
        if betti_number(p, n) % 2
    )
    if bad:
        return CheckResult(
            "betti-parity", "fail",
            "odd Betti number in odd degree(s) " + ", ".join(str(e.degree) for e in bad),
            bad,
        )
    return CheckResult(
        "betti-parity", "pass",
        f"b_n even for odd n in {odd}" if odd else "no odd degrees",
    )
