"""Structured stability reports: criteria verdicts plus oracle cross-checks.

A report gathers, for one equilibrium of one model: the linearization and
characteristic coefficients, the verdict of every closed-form criterion,
the root-scan oracle's output, and annotations wherever the criterion
chain, the oracle, or bundled published reference values disagree.  The
oracle is the arbiter of record: annotations never silently overwrite a
criterion verdict, they expose both sides.
"""

from __future__ import annotations

from dataclasses import dataclass

from .charroots import char_roots_scan, max_real_part
from .equilibria import Equilibrium, all_equilibria
from .model import JacCoeffs, ModelSpec, jacobian_coeffs
from .stability import (
    ENDEMIC_GAS,
    INCONCLUSIVE,
    INSTABILITY_PERSISTS,
    NOT_ESTABLISHED,
    PRESERVED,
    STABLE,
    SWITCH,
    SWITCH_EXPECTED,
    CharCoeffs,
    CombinedResult,
    DelayFreeResult,
    DeltaResult,
    GlobalResult,
    TauCriticalResult,
    TauPersistenceResult,
    char_coeffs,
    delay_free_stable,
    delta_analysis,
    general_delay_analysis,
    global_verdict,
    tau_critical,
    tau_persistence,
)

__all__ = ["TauOnlySummary", "StabilityReport", "build_stability_report",
           "report_to_json", "render_report"]

PRESERVED_STABLE = "preserved_stable"
PRESERVED_UNSTABLE = "preserved_unstable"
SWITCH_AT = "switch_at"


@dataclass(frozen=True)
class TauOnlySummary:
    """Combined incubation-delay verdict from the persistence test and the
    pseudo-delay critical-delay computation."""

    verdict: str  # preserved_stable | preserved_unstable | switch_at | inconclusive
    tau_plus: float | None
    nu_plus: float | None
    T_plus: float | None
    persistence: TauPersistenceResult
    critical: TauCriticalResult | None


@dataclass(frozen=True)
class StabilityReport:
    name: str | None
    model_hash: str
    tau: float
    delta: float
    equilibrium: Equilibrium
    jac: JacCoeffs
    cc: CharCoeffs
    delay_free: DelayFreeResult
    tau_only: TauOnlySummary
    delta_only: DeltaResult
    combined: CombinedResult
    global_case: GlobalResult
    oracle_roots: tuple           # at the model's (tau, delta)
    oracle_roots_zero_delay: tuple
    oracle_crossing_tau: float | None  # first tau (delta=0) where max Re crosses 0
    annotations: tuple


def _synthesize_tau_only(delay_free, persistence, critical) -> TauOnlySummary:
    stable0 = delay_free.verdict == STABLE
    if delay_free.delay_free_equivalent:
        verdict = PRESERVED_STABLE if stable0 else PRESERVED_UNSTABLE
        return TauOnlySummary(verdict, None, None, None, persistence, critical)
    if persistence.verdict == PRESERVED:
        verdict = PRESERVED_STABLE if stable0 else PRESERVED_UNSTABLE
        return TauOnlySummary(verdict, None, None, None, persistence, critical)
    if not stable0:
        if persistence.verdict in (SWITCH_EXPECTED, INSTABILITY_PERSISTS):
            return TauOnlySummary(PRESERVED_UNSTABLE, None, None, None, persistence, critical)
        return TauOnlySummary(INCONCLUSIVE, None, None, None, persistence, critical)
    if critical is None:
        return TauOnlySummary(INCONCLUSIVE, None, None, None, persistence, None)
    if critical.verdict == PRESERVED:
        return TauOnlySummary(PRESERVED_STABLE, None, None, None, persistence, critical)
    if critical.verdict == SWITCH:
        cand = critical.primary
        return TauOnlySummary(SWITCH_AT, cand.tau, cand.nu, cand.T, persistence, critical)
    return TauOnlySummary(INCONCLUSIVE, None, None, None, persistence, critical)


def _find_oracle_crossing(cc, tau_cap: float):
    """First incubation delay (delta = 0) at which max Re crosses zero, by
    marching then bisecting; None when no sign change up to tau_cap."""
    g0 = max_real_part(cc, 0.0, 0.0)
    if g0 is None or g0 >= 0.0:
        return None
    step = max(tau_cap / 40.0, 1e-3)
    prev_t, prev_g = 0.0, g0
    t = step
    while t <= tau_cap + 1e-12:
        g = max_real_part(cc, t, 0.0)
        if g is not None and g > 0.0:
            lo, hi = prev_t, t
            for _ in range(40):
                mid = 0.5 * (lo + hi)
                if (max_real_part(cc, mid, 0.0) or 0.0) > 0.0:
                    hi = mid
                else:
                    lo = mid
                if hi - lo < 1e-4:
                    break
            return 0.5 * (lo + hi)
        prev_t, prev_g = t, g
        t += step
    return None


def _fmt_poly(coeffs) -> str:
    return "[" + ", ".join(f"{c:.6g}" for c in coeffs) + "]"


def build_stability_report(
    model: ModelSpec,
    eq: Equilibrium,
    equilibria=None,
    name: str | None = None,
    reference: dict | None = None,
    oracle_crossing: bool = True,
) -> StabilityReport:
    """Assemble the full stability report for one equilibrium.

    ``reference`` may carry published values (char_poly, pseudo_delay_cubic,
    tau_plus, roots, note); any disagreement with the computed pipeline is
    annotated rather than resolved.  ``oracle_crossing`` enables a root-scan
    search for the actual stability switch in tau, used to audit the
    pseudo-delay prediction.
    """
    p = model.params
    jac = jacobian_coeffs(model, eq)
    cc = char_coeffs(jac)
    annotations = []

    delay_free = delay_free_stable(cc, jac)
    persistence = tau_persistence(cc)
    critical = tau_critical(cc) if delay_free.verdict == STABLE else None
    tau_only = _synthesize_tau_only(delay_free, persistence, critical)
    delta_only = delta_analysis(cc)
    combined = general_delay_analysis(cc, p.tau, p.delta)

    if equilibria is None:
        equilibria = all_equilibria(model)
    df = next((e for e in equilibria if e.kind == "disease_free"), None)
    endemics = [e for e in equilibria if e.kind == "endemic"]
    glob = global_verdict(model, df, endemics)

    roots_here = tuple(char_roots_scan(cc, p.tau, p.delta))
    roots_zero = tuple(char_roots_scan(cc, 0.0, 0.0))

    # consistency: zero-delay oracle vs the delay-free criterion
    if roots_zero:
        top = roots_zero[0].real
        if delay_free.verdict == STABLE and top > 1e-9:
            annotations.append(
                f"delay-free criterion says stable but the zero-delay root scan "
                f"finds max Re = {top:.6g} > 0"
            )
        if delay_free.verdict == NOT_ESTABLISHED and top < -1e-9:
            annotations.append(
                f"delay-free criterion inconclusive; zero-delay root scan finds "
                f"all roots stable (max Re = {top:.6g})"
            )

    # audit a predicted switch against the oracle
    crossing = None
    if tau_only.verdict == SWITCH_AT:
        tp = tau_only.tau_plus
        left = max_real_part(cc, tp * 0.9, 0.0)
        right = max_real_part(cc, tp * 1.1, 0.0)
        agrees = left is not None and right is not None and left < 0.0 < right
        if oracle_crossing:
            crossing = _find_oracle_crossing(cc, tau_cap=max(4.0 * tp, 20.0))
        if not agrees:
            msg = (
                f"pseudo-delay chain predicts a switch at tau = {tp:.6g}, but the "
                f"root scan gives max Re = {left:.4g} at 0.9*tau and {right:.4g} at 1.1*tau"
            )
            if crossing is not None:
                msg += f"; the scan locates the actual crossing near tau = {crossing:.4g}"
            annotations.append(msg)
    elif oracle_crossing and tau_only.verdict == PRESERVED_STABLE and not delay_free.delay_free_equivalent:
        crossing = _find_oracle_crossing(cc, tau_cap=20.0)
        if crossing is not None:
            annotations.append(
                f"criteria report preservation for all incubation delays, but the "
                f"root scan finds a crossing near tau = {crossing:.4g} (delta = 0)"
            )

    # global claim vs local switch evidence
    if glob.verdict == ENDEMIC_GAS and eq.kind == "endemic":
        if tau_only.verdict == SWITCH_AT or crossing is not None:
            annotations.append(
                "global criterion asserts delay-independent stability, yet the "
                "incubation-delay analysis indicates a stability switch; trust the root scan"
            )

    # published reference values, when bundled
    reference = reference or {}
    if "pseudo_delay_cubic" in reference and critical is not None:
        pub = tuple(float(v) for v in reference["pseudo_delay_cubic"])
        got = critical.cubic
        if any(abs(a - b) > 1e-6 * max(1.0, abs(a), abs(b)) for a, b in zip(pub, got)):
            annotations.append(
                f"published pseudo-delay cubic {_fmt_poly(pub)} differs from the "
                f"computed {_fmt_poly(got)}"
            )
    if "char_poly" in reference:
        pub = tuple(float(v) for v in reference["char_poly"])
        if delay_free.delay_free_equivalent:
            got = (1.0, cc.l, cc.m, cc.n)
        else:
            got = (1.0, cc.l, cc.l1 + cc.m, cc.n + cc.m1 + cc.n1)
        if any(abs(a - b) > 1e-6 * max(1.0, abs(a), abs(b)) for a, b in zip(pub, got)):
            annotations.append(
                f"published characteristic polynomial {_fmt_poly(pub)} differs from "
                f"the computed {_fmt_poly(got)}"
            )
    if "tau_plus" in reference and tau_only.tau_plus is not None:
        pub = float(reference["tau_plus"])
        if abs(pub - tau_only.tau_plus) > 1e-3 * max(1.0, abs(pub)):
            annotations.append(
                f"published critical delay {pub:.6g} differs from the computed "
                f"{tau_only.tau_plus:.6g}"
            )
    if "roots" in reference and roots_zero:
        pub = sorted(float(v) for v in reference["roots"])
        got = sorted(r.real for r in roots_zero if abs(r.imag) < 1e-9)
        if len(pub) != len(got) or any(abs(a - b) > 1e-6 * max(1.0, abs(a)) for a, b in zip(pub, got)):
            annotations.append(
                f"published roots {[f'{v:.6g}' for v in pub]} differ from the scanned "
                f"roots {[f'{v:.6g}' for v in got]}"
            )
    if "note" in reference:
        annotations.append(f"reference note: {reference['note']}")

    return StabilityReport(
        name=name,
        model_hash=model.content_hash(),
        tau=p.tau,
        delta=p.delta,
        equilibrium=eq,
        jac=jac,
        cc=cc,
        delay_free=delay_free,
        tau_only=tau_only,
        delta_only=delta_only,
        combined=combined,
        global_case=glob,
        oracle_roots=roots_here,
        oracle_roots_zero_delay=roots_zero,
        oracle_crossing_tau=crossing,
        annotations=tuple(annotations),
    )


def _checks_json(checks):
    return [
        {"name": c.name, "lhs": c.lhs, "op": c.op, "rhs": c.rhs,
         "holds": c.holds, "boundary": c.boundary}
        for c in checks
    ]


def _roots_json(roots):
    return [[r.real, r.imag] for r in roots]


def report_to_json(rep: StabilityReport) -> dict:
    """JSON-serializable dict with every inequality's left/right values."""
    st = rep.equilibrium.state
    out = {
        "name": rep.name,
        "model_hash": rep.model_hash,
        "tau": rep.tau,
        "delta": rep.delta,
        "equilibrium": {
            "state": [st.x, st.y, st.z],
            "kind": rep.equilibrium.kind,
            "residual": rep.equilibrium.residual,
        },
        "linearization": {
            "A": rep.jac.A, "B": rep.jac.B, "C": rep.jac.C,
            "D": rep.jac.D, "E": rep.jac.E, "alpha": rep.jac.alpha,
        },
        "char_coeffs": {
            "l": rep.cc.l, "m": rep.cc.m, "n": rep.cc.n,
            "l1": rep.cc.l1, "m1": rep.cc.m1, "n1": rep.cc.n1,
        },
        "delay_free": {
            "verdict": rep.delay_free.verdict,
            "delay_free_equivalent": rep.delay_free.delay_free_equivalent,
            "nonzero_roots_negative": rep.delay_free.nonzero_roots_negative,
            "boundary": rep.delay_free.boundary,
            "checks": _checks_json(rep.delay_free.checks),
        },
        "incubation_delay": {
            "verdict": rep.tau_only.verdict,
            "tau_plus": rep.tau_only.tau_plus,
            "nu_plus": rep.tau_only.nu_plus,
            "T_plus": rep.tau_only.T_plus,
            "persistence": {
                "verdict": rep.tau_only.persistence.verdict,
                "a0": rep.tau_only.persistence.a0,
                "a1": rep.tau_only.persistence.a1,
                "a2": rep.tau_only.persistence.a2,
                "checks": _checks_json(rep.tau_only.persistence.checks),
            },
            "critical": None if rep.tau_only.critical is None else {
                "verdict": rep.tau_only.critical.verdict,
                "cubic": list(rep.tau_only.critical.cubic),
                "candidates": [
                    {"T": c.T, "nu": c.nu, "tau": c.tau, "tau_next": c.tau_next}
                    for c in rep.tau_only.critical.candidates
                ],
                "checks": _checks_json(rep.tau_only.critical.checks),
                "diagnostics": list(rep.tau_only.critical.diagnostics),
            },
        },
        "recovery_delay": {
            "verdict": rep.delta_only.verdict,
            "freq_cubic": list(rep.delta_only.freq_cubic),
            "candidates": [
                {"nu": c.nu, "T": c.T, "delta": c.delta, "delta_next": c.delta_next}
                for c in rep.delta_only.candidates
            ],
            "checks": _checks_json(rep.delta_only.checks),
            "diagnostics": list(rep.delta_only.diagnostics),
        },
        "combined_delays": {
            "verdict": rep.combined.verdict,
            "theta": rep.combined.theta,
            "theta_smallest_positive": rep.combined.theta_smallest_positive,
            "nu": rep.combined.nu,
            "checks": _checks_json(rep.combined.checks),
            "diagnostics": list(rep.combined.diagnostics),
        },
        "global_case": {
            "verdict": rep.global_case.verdict,
            "boundary": rep.global_case.boundary,
            "checks": _checks_json(rep.global_case.checks),
        },
        "oracle": {
            "roots": _roots_json(rep.oracle_roots),
            "roots_zero_delay": _roots_json(rep.oracle_roots_zero_delay),
            "max_re": rep.oracle_roots[0].real if rep.oracle_roots else None,
            "max_re_zero_delay": (
                rep.oracle_roots_zero_delay[0].real if rep.oracle_roots_zero_delay else None
            ),
            "crossing_tau": rep.oracle_crossing_tau,
        },
        "annotations": list(rep.annotations),
    }
    return out


def _poly_str(cc: CharCoeffs, reduced: bool) -> str:
    if reduced:
        terms = [1.0, cc.l, cc.m, cc.n]
    else:
        terms = [1.0, cc.l, cc.l1 + cc.m, cc.n + cc.m1 + cc.n1]
    names = ["lam^3", "lam^2", "lam", ""]
    out = ""
    for coef, mono in zip(terms, names):
        if coef == 0.0:
            continue
        mag = f"{abs(coef):.6g}"
        body = mono if abs(coef) == 1.0 and mono else (f"{mag}*{mono}" if mono else mag)
        if not out:
            out = body if coef > 0 else f"-{body}"
        else:
            out += (" + " if coef > 0 else " - ") + body
    return out or "0"


def render_report(rep: StabilityReport) -> str:
    """Human-readable table, one line per stability criterion."""
    st = rep.equilibrium.state
    lines = []
    head = f"equilibrium {rep.equilibrium.kind} ({st.x:.10g}, {st.y:.10g}, {st.z:.10g})"
    if rep.name:
        head = f"{rep.name}: {head}"
    lines.append(head)
    lines.append(f"  delays: tau = {rep.tau:.6g}, delta = {rep.delta:.6g}   model {rep.model_hash}")
    j = rep.jac
    lines.append(
        f"  linearization: A={j.A:.6g} B={j.B:.6g} C={j.C:.6g} D={j.D:.6g} "
        f"E={j.E:.6g} alpha={j.alpha:.6g}"
    )
    c = rep.cc
    lines.append(
        f"  char coeffs:   l={c.l:.6g} m={c.m:.6g} n={c.n:.6g} "
        f"l1={c.l1:.6g} m1={c.m1:.6g} n1={c.n1:.6g}"
    )
    lines.append(
        f"  char polynomial at zero delay: {_poly_str(c, rep.delay_free.delay_free_equivalent)} = 0"
        + ("  (no delayed terms)" if rep.delay_free.delay_free_equivalent else "")
    )
    rows = [
        ("delay-free", rep.delay_free.verdict
            + (" [delay-free-equivalent]" if rep.delay_free.delay_free_equivalent else "")),
        ("incubation delay (tau only)", rep.tau_only.verdict
            + (f" at tau+ = {rep.tau_only.tau_plus:.6g} (nu+ = {rep.tau_only.nu_plus:.6g}, "
               f"T+ = {rep.tau_only.T_plus:.6g})" if rep.tau_only.verdict == SWITCH_AT else "")),
        ("recovery delay (delta only)", rep.delta_only.verdict
            + (f", delta candidates {[f'{x.delta:.4g}' for x in rep.delta_only.candidates]}"
               if rep.delta_only.candidates else "")),
        ("combined delays", rep.combined.verdict
            + (f", critical tau+delta = {rep.combined.theta_smallest_positive:.6g}"
               if rep.combined.theta_smallest_positive is not None else "")),
        ("global (bilinear case)", rep.global_case.verdict
            + (" [boundary]" if rep.global_case.boundary else "")),
    ]
    width = max(len(r[0]) for r in rows)
    lines.append("  criteria:")
    for label, text in rows:
        lines.append(f"    {label.ljust(width)}  {text}")
    if rep.oracle_roots:
        shown = ", ".join(
            f"{r.real:.6g}" + (f"+{r.imag:.6g}i" if r.imag else "") for r in rep.oracle_roots[:6]
        )
        lines.append(f"  oracle roots (tau,delta as configured): {shown}")
        lines.append(f"  oracle max Re: {rep.oracle_roots[0].real:.6g}")
    if rep.oracle_crossing_tau is not None:
        lines.append(f"  oracle stability crossing (delta=0): tau ~ {rep.oracle_crossing_tau:.4g}")
    for a in rep.annotations:
        lines.append(f"  ! {a}")
    return "\n".join(lines)
