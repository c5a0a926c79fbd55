"""Acceptance checks at full scale, one test per criterion.

Each test prints a PASS/FAIL line, repeated in the terminal summary. Suites
run single-process with no failure budget so every failure is reported.
"""

import time

import pytest

from polyrep.harness import benchmark, run_suite
from polyrep.polygonal import Family

from conftest import record_acceptance

pytestmark = pytest.mark.acceptance


def _check(number, name, n_max, limit):
    report = run_suite(name, n_max, jobs=1, failure_budget=None)
    ok = report.passed and report.elapsed < limit
    detail = f"{report.cases_run} cases, {len(report.failures)} failures, {report.elapsed:.1f}s (limit {limit}s)"
    if report.failures:
        worst = sorted({tuple(sorted((k, v) for k, v in f.inputs.items() if k in ("m", "t", "d", "c")))
                        for f in report.failures})
        detail += f"; failing groups {worst[:8]}; first {report.failures[0].inputs} " \
                  f"expected {report.failures[0].expected}, got {report.failures[0].got}"
    record_acceptance(f"[{'PASS' if ok else 'FAIL'}] criterion {number} ({name}, n <= {n_max}): {detail}")
    for note in report.notes:
        record_acceptance(f"       note: {note}")
    assert report.passed, detail
    assert report.elapsed < limit, detail


def test_criterion_1_divisor_count_closed_form():
    _check(1, "theorem3", 300, 30)


def test_criterion_2_prime_set_characterization():
    _check(2, "corollary1", 300, 10)


def test_criterion_3_count_identity_r_equals_rprime_minus_one():
    _check(3, "theorem2", 200, 60)


def test_criterion_4_prime_target_implies_no_representation():
    _check(4, "theorem1", 200, 60)


def test_criterion_5_class_number_four_closed_form():
    _check(5, "theorem4", 150, 60)


def test_criterion_6_quadratic_form_lemmas():
    _check(6, "lemmas", 2000, 120)


def test_criterion_7_rprime_from_representation_numbers():
    _check(7, "bridge", 200, 30)


def test_criterion_8_benchmark():
    start = time.perf_counter()
    res = benchmark(Family(3, 1), 10**4)
    ok = res.identical and res.speedup > 1
    record_acceptance(
        f"[{'PASS' if ok else 'FAIL'}] criterion 8 (benchmark (3,1), n <= 10000): "
        f"closed {res.closed_seconds:.2f}s, brute {res.brute_seconds:.2f}s, speedup {res.speedup:.1f}x, "
        f"{len(res.mismatches)} mismatches, wall {time.perf_counter() - start:.1f}s"
    )
    assert res.identical, res.mismatches[:10]
    assert res.speedup > 1
