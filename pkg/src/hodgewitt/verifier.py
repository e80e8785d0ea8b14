"""Runs the hypothesis chain of the Hodge symmetry theorem on one profile.

The chain is: slope duality gives slope-number symmetry; the Hodge-Witt
hypothesis kills the dominoes so h_W = m is symmetric; the Mazur-Ogus
hypotheses (torsion-free crystalline cohomology, Hodge-de Rham degeneration)
give h_W = h; hence h is symmetric. Each link becomes a check in the report.
Missing hypotheses skip the checks that need them instead of assuming them.
"""

from __future__ import annotations

from .hodge_witt import (
    hodge_disagreements,
    check_betti_parity,
    check_mazur_ogus,
    hodge_witt_numbers,
    symmetry_evidence,
)
from .profile import (
    ZERO_DOMINOES,
    CohomologyProfile,
    duality_mismatches,
    validate_profile,
)
from .report import CHECK_IDS, CheckResult, Evidence, VerificationReport
from .slopes import slope_number_table


def _skip_rest(checks: list[CheckResult], reason: str) -> None:
    done = {c.id for c in checks}
    checks.extend(CheckResult(cid, "skipped", reason) for cid in CHECK_IDS if cid not in done)


def missing_hypotheses(p: CohomologyProfile) -> list[str]:
    missing = []
    if p.flags.hodge_witt is not True:
        missing.append("Hodge-Witt hypothesis absent")
    if not p.flags.crystalline_torsion_free:
        missing.append("crystalline torsion-free hypothesis absent")
    if not p.flags.hodge_de_rham_degenerates:
        missing.append("Hodge-de Rham degeneration hypothesis absent")
    return missing


def verify_main_theorem(p: CohomologyProfile) -> VerificationReport:
    checks: list[CheckResult] = []

    violations = validate_profile(p)
    if violations:
        checks.append(CheckResult(
            "validate", "fail", f"{len(violations)} invariant violation(s)",
            tuple(Evidence(v.degree, v.i, v.j, note=str(v)) for v in violations),
        ))
        _skip_rest(checks, "profile failed validation")
        return VerificationReport(p.name, tuple(checks))
    checks.append(CheckResult("validate", "pass", "profile satisfies all invariants"))

    mismatches = duality_mismatches(p)
    if mismatches:
        checks.append(CheckResult(
            "duality", "fail", "slope λ and n-λ have different multiplicities",
            tuple(
                Evidence(degree=n, values={"slope": lam, "mult": a, "dual_mult": b})
                for n, lam, a, b in mismatches
            ),
        ))
        _skip_rest(checks, "slope duality fails")
        return VerificationReport(p.name, tuple(checks))
    checks.append(CheckResult("duality", "pass", "mult(λ) = mult(n-λ) in every degree"))

    m = slope_number_table(p)
    asym = m.asymmetries()
    if asym:
        checks.append(CheckResult(
            "slope-symmetry", "fail", "m^(i,j) != m^(j,i)",
            tuple(
                Evidence(degree=i + j, i=i, j=j, values={"m_ij": a, "m_ji": b})
                for i, j, a, b in asym
            ),
        ))
    else:
        checks.append(CheckResult("slope-symmetry", "pass", "m^(i,j) = m^(j,i) for all i, j"))

    missing = missing_hypotheses(p)
    if missing:
        checks.append(CheckResult("hypotheses", "skipped", "; ".join(missing)))
    else:
        checks.append(CheckResult(
            "hypotheses", "pass",
            "Hodge-Witt, torsion-free crystalline cohomology, Hodge-de Rham degeneration",
        ))

    hw = None
    if p.flags.hodge_witt:
        reason = "T = 0 (Hodge-Witt), so h_W = m"
        if p.dominoes is None:
            reason += "; unknown dominoes replaced by 0"
        hw = hodge_witt_numbers(m, ZERO_DOMINOES)
    elif p.dominoes is not None:
        reason = "h_W from slope numbers and the given domino numbers"
        hw = hodge_witt_numbers(m, p.dominoes)
    if hw is None:
        checks.append(CheckResult(
            "hodge-witt-numbers", "skipped",
            "dominoes unknown and Hodge-Witt hypothesis absent",
        ))
    else:
        evidence = [
            Evidence(degree=i + j, i=i, j=j, values={"h_W": v}, note="negative (informational)")
            for i, j, v in hw.entries() if v < 0
        ]
        verdict = "pass"
        if not hw.is_symmetric():
            if p.flags.hodge_witt:
                verdict = "fail"
                reason += "; Hodge-Witt symmetry fails"
                evidence.extend(symmetry_evidence(hw, "h_W"))
            else:
                reason += "; h_W not symmetric (no Hodge-Witt hypothesis, not required)"
        else:
            reason += "; h_W^(i,j) = h_W^(j,i)"
        checks.append(CheckResult("hodge-witt-numbers", verdict, reason, tuple(evidence)))

    mo = check_mazur_ogus(p)
    checks.append(mo)

    predicted = None
    if mo.verdict != "pass":
        checks.append(CheckResult(
            "ekedahl-equality", "skipped", f"Mazur-Ogus condition not established ({mo.verdict})"
        ))
    elif hw is None:
        checks.append(CheckResult("ekedahl-equality", "skipped", "Hodge-Witt numbers unavailable"))
    else:
        predicted = hw
        bad = hodge_disagreements(hw, p.hodge)
        if bad:
            checks.append(CheckResult(
                "ekedahl-equality", "fail", "predicted h = h_W disagrees with given Hodge numbers",
                bad,
            ))
        else:
            checks.append(CheckResult("ekedahl-equality", "pass", "h_W^(i,j) = h^(i,j) everywhere"))

    if missing:
        checks.append(CheckResult("hodge-symmetry", "skipped", "; ".join(missing)))
    elif p.hodge is None and predicted is None:
        checks.append(CheckResult("hodge-symmetry", "skipped", "no Hodge numbers"))
    else:
        evidence = []
        tables = []
        if predicted is not None:
            evidence.extend(symmetry_evidence(predicted, "predicted"))
            tables.append("predicted")
        if p.hodge is not None:
            evidence.extend(symmetry_evidence(p.hodge, "given"))
            tables.append("given")
        label = " and ".join(tables)
        if evidence:
            checks.append(CheckResult(
                "hodge-symmetry", "fail", f"h^(p,q) != h^(q,p) in {label} table", tuple(evidence)
            ))
        else:
            checks.append(CheckResult(
                "hodge-symmetry", "pass", f"h^(p,q) = h^(q,p) in {label} table"
            ))

    checks.append(check_betti_parity(p))
    return VerificationReport(p.name, tuple(checks), predicted)
