"""The reproduction harness: class counts against closed forms, split counts
against the stated position-of-1 formulas, structural lemma suites, the
complement check between two triple-avoidance classes, the left-to-right
maxima bijection, prefix-constrained claims, and the Pell identity suite.

Each suite compares search-kernel output to an independently evaluated
closed form and reports per-n records.  Values of n below a statement's
validity range are reported informationally, never asserted.  Reports are
deterministic: for fixed input the serialized forms are byte-identical
(elapsed time is kept out of them for that reason).
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from math import comb
from typing import Callable, Sequence

from fishburn.enumeration import DEFAULT_COUNT_CAP, AvoidanceQuery, CapacityError, count, members, search
from fishburn.patterns import PatternSet
from fishburn.sequences import (
    IDENTITY_MIN_N,
    TABLE_ROWS,
    PellIdentity,
    evaluate_formula,
    fibonacci,
    identity_sides,
    pell,
    q_value,
)


@dataclass(frozen=True)
class CheckRecord:
    """One (statement, n) comparison: counted value vs closed form."""

    row_id: str
    n: int
    observed: int
    expected: int | None
    asserted: bool
    matched: bool


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    records: tuple[CheckRecord, ...]
    passed: bool
    elapsed: float


def _record(
    row_id: str,
    n: int,
    observed: int,
    expected: int | None,
    asserted: bool,
    extra_ok: bool = True,
) -> CheckRecord:
    """extra_ok folds in conditions beyond the count comparison (set equality,
    bijectivity) that the numeric columns alone cannot express."""
    matched = expected is not None and observed == expected and extra_ok
    return CheckRecord(row_id, n, observed, expected, asserted, matched)


def _finish(suite: str, records: list[CheckRecord], started: float) -> VerificationReport:
    passed = all(r.matched for r in records if r.asserted)
    return VerificationReport(suite, tuple(records), passed, time.perf_counter() - started)


def _check_cap(max_n: int) -> None:
    if max_n > DEFAULT_COUNT_CAP:
        raise CapacityError(f"max_n={max_n} exceeds the enumeration cap of {DEFAULT_COUNT_CAP}")
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")


def verify_table(max_n: int) -> list[VerificationReport]:
    """One report per enumerated class, counts vs closed form for n <= max_n."""
    _check_cap(max_n)
    reports = []
    for row in TABLE_ROWS:
        started = time.perf_counter()
        records = []
        for n in range(max_n + 1):
            observed = count(AvoidanceQuery(n, row.patterns), cap=max_n)
            expected = evaluate_formula(row.formula, n)
            records.append(_record(row.row_id, n, observed, expected, n >= row.valid_from))
        reports.append(_finish(f"table:{row.row_id}", records, started))
    return reports


@dataclass(frozen=True)
class SplitCheck:
    """A one-sided count (entry 1 fixed at a position) with its closed form."""

    row_id: str
    patterns: PatternSet
    position: int
    value: Callable[[int], int | None]
    valid_from: int


def _split(pattern_text: str, position: int, value: Callable[[int], int | None], valid_from: int) -> SplitCheck:
    return SplitCheck(
        row_id=f"{pattern_text}:pos{position}",
        patterns=PatternSet.parse(pattern_text, fishburn=True),
        position=position,
        value=value,
        valid_from=valid_from,
    )


DECOMPOSITION_CHECKS: tuple[SplitCheck, ...] = (
    _split("321,1243", 2, lambda n: n * n - 4 * n + 5, 2),
    _split("321,2134", 2, lambda n: 2 * n - 4, 3),
    _split("321,1324", 2, lambda n: (3 * n * n - 15 * n + 22) // 2, 3),
    _split("321,1423,2143", 1, lambda n: n - 1, 2),
    _split("321,1423,2143", 2, lambda n: comb(n - 1, 2) + 1, 2),
    _split("321,2143,3124", 2, lambda n: n - 1, 2),
    _split("321,2143,4123", 2, lambda n: n - 1, 2),
    _split("321,1423,3124", 2, lambda n: fibonacci(n - 2) + 2 if n >= 2 else None, 4),
    _split("321,1423,4123", 1, lambda n: fibonacci(n - 1) if n >= 1 else None, 4),
    _split("321,1423,4123", 2, lambda n: fibonacci(n) - 1, 4),
    _split("321,3124,4123", 2, lambda n: fibonacci(n - 1) if n >= 1 else None, 4),
    _split("321,31452", 1, lambda n: q_value(n - 1) if n >= 1 else None, 1),
    _split("321,31452", 2, lambda n: pell(n - 1) if n >= 1 else None, 1),
    _split("321,41523", 2, lambda n: pell(n - 1) if n >= 1 else None, 1),
)


def verify_decompositions(max_n: int) -> list[VerificationReport]:
    """Position-of-1 split counts against their stated formulas."""
    _check_cap(max_n)
    reports = []
    for check in DECOMPOSITION_CHECKS:
        started = time.perf_counter()
        records = []
        for n in range(1, max_n + 1):
            observed = count(
                AvoidanceQuery(n, check.patterns, one_position=check.position), cap=max_n
            )
            records.append(
                _record(check.row_id, n, observed, check.value(n), n >= check.valid_from)
            )
        reports.append(_finish(f"decomposition:{check.row_id}", records, started))
    return reports


REDUCTION_SIGMAS = ("132", "213", "312", "3142")


def verify_lemmas(max_n: int) -> VerificationReport:
    """Structural facts: entry 1 sits in the first two positions throughout
    the 321-avoiding Fishburn classes, and dropping the Fishburn condition
    in favour of classical 231-avoidance leaves each checked class unchanged
    (as sorted member lists)."""
    _check_cap(max_n)
    started = time.perf_counter()
    records = []
    base = PatternSet.parse("321", fishburn=True)
    for n in range(1, max_n + 1):
        total = 0
        in_first_two = 0

        def see(p):
            nonlocal total, in_first_two
            total += 1
            if p.values[0] == 1 or (len(p.values) > 1 and p.values[1] == 1):
                in_first_two += 1

        search(AvoidanceQuery(n, base), see, cap=max_n)
        records.append(_record("one-in-first-two", n, in_first_two, total, True))
    for sigma in REDUCTION_SIGMAS:
        fishburn_side = PatternSet.parse(f"321,{sigma}", fishburn=True)
        classical_side = PatternSet.parse(f"231,321,{sigma}", fishburn=False)
        for n in range(max_n + 1):
            lhs = members(AvoidanceQuery(n, fishburn_side), cap=max_n)
            rhs = members(AvoidanceQuery(n, classical_side), cap=max_n)
            records.append(
                _record(f"reduction-{sigma}", n, len(lhs), len(rhs), True, extra_ok=lhs == rhs)
            )
    return _finish("lemmas", records, started)


WILF_CLASS_A = "231,321,213"
WILF_CLASS_B = "213,123,231"


def verify_wilf_complement(max_n: int) -> VerificationReport:
    """Complementation maps the 231,321,213-avoiders bijectively onto the
    213,123,231-avoiders, so the two classes are equinumerous for every n."""
    _check_cap(max_n)
    started = time.perf_counter()
    records = []
    class_a = PatternSet.parse(WILF_CLASS_A)
    class_b = PatternSet.parse(WILF_CLASS_B)
    for n in range(max_n + 1):
        lhs = members(AvoidanceQuery(n, class_a), cap=max_n)
        rhs = members(AvoidanceQuery(n, class_b), cap=max_n)
        image = sorted(p.complement().values for p in lhs)
        bijective = image == [p.values for p in rhs]
        records.append(_record("wilf-complement", n, len(lhs), len(rhs), True, extra_ok=bijective))
    return _finish("wilf-complement", records, started)


def verify_lrmax_bijection(max_n: int) -> VerificationReport:
    """On the 321,3142-avoiding Fishburn class, taking left-to-right maxima
    is injective and its image is exactly the subsets of {1..n} containing n
    (2^(n-1) of them)."""
    _check_cap(max_n)
    started = time.perf_counter()
    records = []
    patterns = PatternSet.parse("321,3142", fishburn=True)
    for n in range(1, max_n + 1):
        mem = members(AvoidanceQuery(n, patterns), cap=max_n)
        images = {p.left_to_right_maxima() for p in mem}
        family = {
            frozenset({n} | {i + 1 for i in range(n - 1) if mask >> i & 1})
            for mask in range(1 << (n - 1))
        }
        ok = len(images) == len(mem) and images == family
        records.append(_record("lrmax-bijection", n, len(images), 1 << (n - 1), True, extra_ok=ok))
    return _finish("lrmax-bijection", records, started)


def verify_prefix_claims(max_n: int) -> VerificationReport:
    """Prefix-constrained counts in the 321,21354-avoiding Fishburn class:
    members opening with k,1 and then not 2 number C(n-2, k-1), and n,1
    opens exactly one member."""
    _check_cap(max_n)
    started = time.perf_counter()
    records = []
    patterns = PatternSet.parse("321,21354", fishburn=True)
    for n in range(2, max_n + 1):
        observed = count(AvoidanceQuery(n, patterns, prefix=(n, 1)), cap=max_n)
        records.append(_record("prefix:n,1", n, observed, 1, True))
    for n in range(4, max_n + 1):
        for k in range(3, n):
            observed = count(
                AvoidanceQuery(n, patterns, prefix=(k, 1, 2), prefix_negation=True),
                cap=max_n,
            )
            records.append(_record(f"prefix:{k},1,not-2", n, observed, comb(n - 2, k - 1), True))
    return _finish("prefix-claims", records, started)


def verify_identities(max_n: int) -> list[VerificationReport]:
    """Every Pell identity by literal summation, one report per identity."""
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    reports = []
    for identity in PellIdentity:
        started = time.perf_counter()
        records = []
        for n in range(IDENTITY_MIN_N[identity], max_n + 1):
            left, right = identity_sides(identity, n)
            records.append(_record(f"identity:{identity.name}", n, left, right, True))
        reports.append(_finish(f"identity:{identity.name}", records, started))
    return reports


SUITES = ("table", "decompositions", "lemmas", "wilf", "lrmax", "prefix", "identities", "all")


def run_suite(suite: str, max_n: int) -> list[VerificationReport]:
    """Run one named suite (or all of them) and return its reports in order."""
    if suite == "table":
        return verify_table(max_n)
    if suite == "decompositions":
        return verify_decompositions(max_n)
    if suite == "lemmas":
        return [verify_lemmas(max_n)]
    if suite == "wilf":
        return [verify_wilf_complement(max_n)]
    if suite == "lrmax":
        return [verify_lrmax_bijection(max_n)]
    if suite == "prefix":
        return [verify_prefix_claims(max_n)]
    if suite == "identities":
        return verify_identities(max_n)
    if suite == "all":
        reports = verify_table(max_n)
        reports += verify_decompositions(max_n)
        reports.append(verify_lemmas(max_n))
        reports.append(verify_wilf_complement(max_n))
        reports.append(verify_lrmax_bijection(max_n))
        reports.append(verify_prefix_claims(max_n))
        reports += verify_identities(max_n)
        return reports
    raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")


def _flag(record: CheckRecord) -> str:
    if not record.asserted:
        return "out-of-stated-range"
    return "ok" if record.matched else "MISMATCH"


def format_delimited(reports: Sequence[VerificationReport]) -> str:
    """Tab-separated records, one per (row, n), with a summary line per suite."""
    lines = []
    for report in reports:
        for r in report.records:
            expected = "-" if r.expected is None else str(r.expected)
            lines.append(f"{r.row_id}\t{r.n}\t{r.observed}\t{expected}\t{_flag(r)}")
        lines.append(f"{report.suite}\t{'PASS' if report.passed else 'FAIL'}")
    return "\n".join(lines) + "\n"


def format_structured(reports: Sequence[VerificationReport]) -> str:
    """A single JSON document with the same fields as the delimited format."""
    doc = {
        "passed": all(report.passed for report in reports),
        "suites": [
            {
                "suite": report.suite,
                "passed": report.passed,
                "records": [
                    {
                        "id": r.row_id,
                        "n": r.n,
                        "observed": r.observed,
                        "expected": r.expected,
                        "asserted": r.asserted,
                        "matched": r.matched,
                    }
                    for r in report.records
                ],
            }
            for report in reports
        ],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def format_plain(reports: Sequence[VerificationReport]) -> str:
    """Human-readable summary, one line per suite plus any mismatch detail."""
    lines = []
    for report in reports:
        asserted = sum(1 for r in report.records if r.asserted)
        lines.append(f"{'PASS' if report.passed else 'FAIL'}  {report.suite}  ({asserted} checks)")
        for r in report.records:
            if r.asserted and not r.matched:
                lines.append(
                    f"      n={r.n} {r.row_id}: counted {r.observed}, formula says {r.expected}"
                )
    total = sum(len(r.records) for r in reports)
    failed = sum(1 for r in reports if not r.passed)
    verdict = "all suites passed" if failed == 0 else f"{failed} suite(s) FAILED"
    lines.append(f"{len(reports)} suites, {total} records: {verdict}")
    return "\n".join(lines) + "\n"
