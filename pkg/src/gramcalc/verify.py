"""Compare engine-derived triangles against their bound oracles.

Every comparison is exact integer equality; there are no tolerances
anywhere.  A mismatch records the first divergence and scanning continues,
so one bug produces one clear signal per case without hiding the rest.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

from . import oracles
from .ansatz import AnsatzMismatch, extract_row
from .grammar import UnruledLetterError, apply_operator
from .registry import CaseSpec, case_registry

MATCH = "match"
MISMATCH = "mismatch"
STRUCTURAL = "structural-failure"
SKIPPED = "skipped-over-cap"

_SEVERITY = {STRUCTURAL: 3, MISMATCH: 2, MATCH: 1, SKIPPED: 0}


@dataclass(frozen=True)
class Divergence:
    n: int
    k: int
    engine: int
    oracle: int
    method: str


@dataclass
class CaseReport:
    label: str
    case_id: str
    oracle: str
    note: str
    row_status: list[tuple[int, str]] = field(default_factory=list)
    first_divergence: Divergence | None = None
    error: str | None = None
    seconds: float = 0.0

    @property
    def status(self) -> str:
        if self.error is not None and not self.row_status:
            return "config-error"
        if not self.row_status:
            return SKIPPED
        return max((status for _, status in self.row_status), key=_SEVERITY.get)

    @property
    def ok(self) -> bool:
        return self.status in (MATCH, SKIPPED)


@dataclass
class VerificationReport:
    max_n: int
    cases: list[CaseReport]

    @property
    def passed(self) -> bool:
        return all(report.ok for report in self.cases)


def _expected_row(case: CaseSpec, method: str, n: int, table) -> dict[int, int]:
    """Oracle row for engine index n, keyed by engine k."""
    spec = table[case.binding.oracle]
    row = spec.methods[method].fn(n + case.ansatz.n_shift, **dict(case.binding.params))
    out: dict[int, int] = {}
    for idx, value in enumerate(row):
        oracle_k = spec.k_origin + idx
        if case.binding.k_factorial:
            value *= math.factorial(oracle_k)
        out[oracle_k - case.ansatz.k_shift] = value
    return out


def _first_divergence(engine_row, k_lo: int, expected: dict[int, int]):
    """Compare with zero-padding on both sides; None means equal."""
    all_k = sorted(set(range(k_lo, k_lo + len(engine_row))) | set(expected))
    for k in all_k:
        engine_value = engine_row[k - k_lo] if 0 <= k - k_lo < len(engine_row) else 0
        oracle_value = expected.get(k, 0)
        if engine_value != oracle_value:
            return k, engine_value, oracle_value
    return None


def verify_case(case: CaseSpec, max_n: int = 12, table=None) -> CaseReport:
    """Check engine rows 1..max_n against every bound oracle method.

    Each method is consulted up to min(max_n, its cap); rows beyond every
    cap are skipped-over-cap.  Verification always derives in strict mode.
    """
    if max_n < 1:
        raise ValueError(f"max_n must be positive, got {max_n}")
    table = oracles.TABLE if table is None else table
    start = time.perf_counter()
    report = CaseReport(
        label=case.label, case_id=case.case_id, oracle=case.binding.oracle, note=case.note
    )
    engine_max = min(max_n, case.binding.max_cap)
    try:
        trace = apply_operator(
            case.grammar, case.operator, case.seed, engine_max, strict=True
        )
    except UnruledLetterError as exc:
        report.error = str(exc)
        report.seconds = time.perf_counter() - start
        return report
    for n in range(1, max_n + 1):
        if n > engine_max:
            report.row_status.append((n, SKIPPED))
            continue
        try:
            engine_row = extract_row(trace.iterates[n], case.ansatz, n)
        except AnsatzMismatch as exc:
            report.row_status.append((n, STRUCTURAL))
            if report.error is None:
                report.error = str(exc)
            continue
        status = MATCH
        for method, cap in case.binding.methods:
            if n > cap:
                continue
            expected = _expected_row(case, method, n, table)
            bad = _first_divergence(engine_row, case.ansatz.k_min.at(n), expected)
            if bad is not None:
                status = MISMATCH
                if report.first_divergence is None:
                    report.first_divergence = Divergence(n, *bad, method)
        report.row_status.append((n, status))
    report.seconds = time.perf_counter() - start
    return report


def verify_all(max_n: int = 12, table=None, cases=None) -> VerificationReport:
    """Verify the whole registry (or an explicit case list) in fixed order."""
    cases = case_registry() if cases is None else list(cases)
    reports = [verify_case(case, max_n=max_n, table=table) for case in cases]
    return VerificationReport(max_n=max_n, cases=reports)


def case_report_obj(case: CaseSpec, report: CaseReport) -> dict:
    """JSON-ready object for one case report."""
    divergence = None
    if report.first_divergence is not None:
        d = report.first_divergence
        divergence = {
            "n": d.n,
            "k": d.k,
            "engine": str(d.engine),
            "oracle": str(d.oracle),
            "method": d.method,
        }
    return {
        "case": report.label,
        "id": report.case_id,
        "note": report.note,
        "oracle": report.oracle,
        "params": dict(case.binding.params),
        "methods": [{"method": m, "cap": cap} for m, cap in case.binding.methods],
        "status": report.status,
        "rows": [{"n": n, "status": status} for n, status in report.row_status],
        "first_divergence": divergence,
        "error": report.error,
        "seconds": round(report.seconds, 6),
    }


def report_obj(report: VerificationReport, cases=None) -> dict:
    cases = case_registry() if cases is None else list(cases)
    return {
        "pass": report.passed,
        "max_n": report.max_n,
        "strict": True,
        "cases": [case_report_obj(c, r) for c, r in zip(cases, report.cases)],
    }


def report_text(report: VerificationReport) -> str:
    """Aligned-column rendering of a verification report."""
    header = ("case", "oracle", "status", "checked", "time")
    rows = [header]
    for item in report.cases:
        checked = sum(1 for _, status in item.row_status if status != SKIPPED)
        skipped = len(item.row_status) - checked
        span = f"n=1..{checked}" if checked else "-"
        if skipped:
            span += f" (+{skipped} skipped)"
        rows.append(
            (item.label, item.oracle, item.status, span, f"{item.seconds:.3f}s")
        )
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip() for row in rows]
    verdict = "PASS" if report.passed else "FAIL"
    lines.append(f"overall: {verdict} ({len(report.cases)} cases, max_n={report.max_n})")
    return "\n".join(lines)
