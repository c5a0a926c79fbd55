"""Verification suites that bind the closed forms to the brute-force oracles.

Each suite is split into independent work units (usually one per family or
discriminant). Units run serially or on a process pool; their results are
merged in unit order, so a report does not depend on the worker count.
"""

from __future__ import annotations

import json
import logging
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from math import gcd
from typing import Any, Callable, Iterable

from .arith import is_prime, primes_up_to
from .closedform import (
    SUPPORTED_FAMILIES,
    THEOREM3_CASES,
    THEOREM4_CASES,
    UnsupportedFamily,
    closed_method,
    closed_r,
    r_theorem3,
    r_theorem4,
    r_theorem4_plus_sign,
    rprime_from_R,
    table_FI,
    unsolvable_cor1,
    x_axis_solution,
)
from .polygonal import Family
from .qforms import (
    F_A2_direct,
    F_values,
    HypothesisError,
    CLASS_H1,
    CLASS_H2,
    CLASS_H3,
    CLASS_Z4,
    N_by_enumeration,
    dirichlet_N,
    is_fundamental,
    lemma5_closed,
    lemma7_closed,
    positive_representations,
    reduced_forms,
    represent_count,
)
from .repcount import count_representations, r_table, rprime_table

__all__ = [
    "DEFAULT_N_MAX",
    "Failure",
    "SUITES",
    "VerificationReport",
    "benchmark",
    "run_suite",
    "scan_unsolvable",
    "theorem2_families",
]

log = logging.getLogger(__name__)

DEFAULT_N_MAX = {
    "theorem1": 200,
    "theorem2": 200,
    "theorem3": 300,
    "theorem4": 150,
    "corollary1": 300,
    "lemmas": 2000,
    "bridge": 200,
}
SUITES = tuple(DEFAULT_N_MAX)
FAILURE_BUDGET = 25
COROLLARY1_FLAGSHIP_N = 2000
PROJECT_DISCRIMINANTS = (-3, -4, -8, -24, -40, -56, -88, -136, -184, -232, -328, -568)
PRIME_REP_COEFFS = ((1, 2, 3, 5, 11, 29), (1, 2, 6, 10, 14))


@dataclass
class Failure:
    inputs: dict[str, Any]
    expected: Any
    got: Any
    check: str = ""


@dataclass
class VerificationReport:
    suite: str
    cases_run: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed: float = 0.0
    notes: list[str] = field(default_factory=list)
    aborted: bool = False

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict[str, Any]:
        out = asdict(self)
        out["passed"] = self.passed
        return out

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), default=str, **kwargs)


# A unit returns (cases_run, failures, notes).
UnitResult = tuple[int, list[Failure], list[str]]


def theorem2_families() -> list[Family]:
    odd = [p for p in primes_up_to(60) if p > 2]
    fams = [Family(3, 1)] + [Family(p + 2, 1) for p in odd]
    fams += [Family(3, 2)] + [Family(2 * p + 2, 2) for p in odd if p <= 30]
    for t in (3, 5, 7, 11, 13):
        fams += [Family(m, t) for m in [3] + [p + 2 for p in odd] if m - 2 != t]
    return fams


def _unit_theorem1(m: int, n_max: int) -> UnitResult:
    failures, cases = [], 0
    for t in range(1, 31):
        fam = Family(m, t)
        r, rp = r_table(fam, n_max), rprime_table(fam, n_max)
        for n in range(1, n_max + 1):
            cases += 1
            inputs = {"m": m, "t": t, "n": n}
            if r[n] > rp[n] - 1:
                failures.append(Failure(inputs, f"r <= {rp[n] - 1}", int(r[n]), "r <= r'-1"))
            if r[n] and is_prime(fam.target(n)):
                failures.append(Failure(inputs, 0, int(r[n]), "prime target => r = 0"))
    return cases, failures, []


def _unit_theorem2(m: int, t: int, n_max: int) -> UnitResult:
    fam = Family(m, t)
    r, rp = r_table(fam, n_max), rprime_table(fam, n_max)
    failures = [
        Failure({"m": m, "t": t, "n": n}, int(rp[n]) - 1, int(r[n]), "r = r'-1")
        for n in range(1, n_max + 1)
        if r[n] != rp[n] - 1
    ]
    return n_max, failures, []


def _unit_theorem3(m: int, t: int, n_max: int) -> UnitResult:
    fam = Family(m, t)
    r = r_table(fam, n_max)
    failures = []
    for n in range(1, n_max + 1):
        got = r_theorem3(fam, n)
        if got != r[n]:
            failures.append(Failure({"m": m, "t": t, "n": n}, int(r[n]), got, "closed = brute"))
    return n_max, failures, []


def _unit_corollary1(m: int, t: int, n_max: int) -> UnitResult:
    fam = Family(m, t)
    r = r_table(fam, n_max)
    failures = []
    for n in range(1, n_max + 1):
        cor = unsolvable_cor1(fam, n)
        closed_zero = r_theorem3(fam, n) == 0
        if not cor == closed_zero == (r[n] == 0):
            failures.append(
                Failure({"m": m, "t": t, "n": n}, r[n] == 0, {"cor1": cor, "closed": closed_zero},
                        "prime-set test <=> r = 0")
            )
    return n_max, failures, []


def _unit_flagship(n_max: int) -> UnitResult:
    fam = Family(3, 2)
    r = r_table(fam, n_max)
    failures = []
    for n in range(1, n_max + 1):
        prime = is_prime(n * n + 1)
        if not prime == unsolvable_cor1(fam, n) == (r[n] == 0):
            failures.append(Failure({"m": 3, "t": 2, "n": n}, prime, int(r[n]), "r_{3,2}(n)=0 <=> n^2+1 prime"))
    return n_max, failures, []


def _unit_theorem4(m: int, t: int, n_max: int) -> UnitResult:
    fam = Family(m, t)
    case = THEOREM4_CASES[fam]
    cd = reduced_forms(case.d)
    r = r_table(fam, n_max)
    failures, plus_off = [], []
    for n in range(1, n_max + 1):
        inputs = {"m": m, "t": t, "n": n}
        got = r_theorem4(fam, n)
        if got != r[n]:
            failures.append(Failure(inputs, int(r[n]), got, "Z4 formula = brute"))
        z = case.z(n)
        f_i = F_values(z, cd).F_I
        tab = table_FI(fam, n)
        if tab != f_i:
            failures.append(Failure({**inputs, "z": z}, f_i, tab, "table F(I) = N(z,d)/omega"))
        if r_theorem4_plus_sign(fam, n) != r[n]:
            plus_off.append(n)
    notes = []
    if plus_off:
        notes.append(
            f"{fam}: formula with +2F(A) differs from brute force at {len(plus_off)}/{n_max} n "
            f"(first {plus_off[:5]}); the -2F(A) variant is used"
        )
    return 2 * n_max, failures, notes


def _unit_lemma2(d_min: int) -> UnitResult:
    lists = {"h1": CLASS_H1, "h2": CLASS_H2, "h3": CLASS_H3, "Z4": CLASS_Z4}
    found: dict[str, set[int]] = {k: set() for k in lists}
    cases = 0
    for d in range(-4, d_min - 1, -1):
        if d % 4 not in (0, 1):
            continue
        cases += 1
        cd = reduced_forms(d)
        if cd.structure in found:
            found[cd.structure].add(d)
        if d in CLASS_Z4 and cd.h != 4:
            return cases, [Failure({"d": d}, 4, cd.h, "Z4 list => h = 4")], []
    failures = []
    for tag, listed in lists.items():
        want = {d for d in listed if d_min <= d <= -4}
        for d in sorted(want ^ found[tag], reverse=True):
            failures.append(Failure({"d": d, "list": tag}, d in want, d in found[tag], "class-number list membership"))
    return cases, failures, []


def _unit_dirichlet(d: int, n_max: int) -> UnitResult:
    failures, cases = [], 0
    for n in range(1, n_max + 1):
        if gcd(n, d) != 1:
            continue
        cases += 1
        want, got = N_by_enumeration(n, d), dirichlet_N(n, d)
        if want != got:
            failures.append(Failure({"d": d, "n": n}, want, got, "Dirichlet N = enumeration"))
    return cases, failures, []


def _unit_lemma5(d: int, n_max: int) -> UnitResult:
    cd = reduced_forms(d)
    failures, cases = [], 0
    for n in range(1, n_max + 1):
        try:
            got = lemma5_closed(n, d)
        except HypothesisError:
            continue
        cases += 1
        want = (represent_count(cd.role("I"), n), represent_count(cd.role("A"), n))
        if got != want:
            failures.append(Failure({"d": d, "n": n}, want, got, "h=2 closed form = enumeration"))
    return cases, failures, []


def _unit_lemma7(d: int, n_max: int) -> UnitResult:
    cd = reduced_forms(d)
    failures, cases = [], 0
    for n in range(1, n_max + 1):
        cases += 1
        want = (represent_count(cd.role("I"), n), represent_count(cd.role("A2"), n))
        got = lemma7_closed(n, d, cd)
        if got != want:
            failures.append(Failure({"d": d, "n": n}, want, got, "Z4 closed form = enumeration"))
        direct, rule = F_A2_direct(n, cd), F_values(n, cd).F_A2
        if direct != rule:
            failures.append(Failure({"d": d, "n": n}, direct, rule, "F(A^2) sign rule"))
    return cases, failures, []


def _unit_nagell(c: int, d: int, p_max: int) -> UnitResult:
    failures, cases = [], 0
    for p in primes_up_to(p_max):
        cases += 1
        reps = positive_representations(c, d, p)
        if c == d:
            # (x, y) and (y, x) are the same representation when c = d
            reps = {tuple(sorted(r)) for r in reps}
        if len(reps) > 1:
            failures.append(Failure({"c": c, "d": d, "p": p}, "<= 1", sorted(reps), "unique prime representation"))
    return cases, failures, []


def _unit_bridge(m: int, t: int, n_max: int) -> UnitResult:
    fam = Family(m, t)
    rp = rprime_table(fam, n_max)
    failures = []
    for n in range(1, n_max + 1):
        inputs = {"m": m, "t": t, "n": n}
        if x_axis_solution(fam, n) is not None:
            failures.append(Failure(inputs, None, x_axis_solution(fam, n), "no x-axis solution"))
        got = rprime_from_R(fam, n)
        if got != rp[n]:
            failures.append(Failure(inputs, int(rp[n]), got, "r' from R = brute r'"))
    return n_max, failures, []


def _units(name: str, n_max: int) -> list[tuple[Callable[..., UnitResult], tuple]]:
    if name == "theorem1":
        return [(_unit_theorem1, (m, n_max)) for m in range(3, 61)]
    if name == "theorem2":
        return [(_unit_theorem2, (f.m, f.t, n_max)) for f in theorem2_families()]
    if name == "theorem3":
        return [(_unit_theorem3, (f.m, f.t, n_max)) for f in THEOREM3_CASES]
    if name == "corollary1":
        units = [(_unit_corollary1, (f.m, f.t, n_max)) for f in THEOREM3_CASES]
        return units + [(_unit_flagship, (max(n_max, COROLLARY1_FLAGSHIP_N),))]
    if name == "theorem4":
        return [(_unit_theorem4, (f.m, f.t, n_max)) for f in THEOREM4_CASES]
    if name == "bridge":
        return [(_unit_bridge, (f.m, f.t, n_max)) for f in SUPPORTED_FAMILIES]
    if name == "lemmas":
        units: list = [(_unit_lemma2, (-1600,))]
        units += [(_unit_dirichlet, (d, n_max)) for d in PROJECT_DISCRIMINANTS]
        units += [(_unit_lemma5, (d, n_max)) for d in CLASS_H2 if d != -60 and is_fundamental(d)]
        units += [(_unit_lemma7, (d, n_max)) for d in CLASS_Z4 if is_fundamental(d)]
        c_vals, d_vals = PRIME_REP_COEFFS
        units += [(_unit_nagell, (c, d, 10**4)) for c in c_vals for d in d_vals]
        return units
    raise ValueError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)}")


def _call(unit: tuple[Callable[..., UnitResult], tuple]) -> UnitResult:
    func, args = unit
    return func(*args)


def default_jobs() -> int:
    return int(os.environ.get("POLYREP_JOBS", "1"))


def run_suite(
    name: str,
    n_max: int | None = None,
    *,
    jobs: int | None = None,
    failure_budget: int | None = FAILURE_BUDGET,
) -> VerificationReport:
    """Run one verification suite up to ``n_max`` (suite default when None).

    Failures are collected until ``failure_budget`` is reached, after which
    the remaining units are skipped and the report is marked aborted. Pass
    ``failure_budget=None`` to run everything.
    """
    units = _units(name, DEFAULT_N_MAX[name] if n_max is None else n_max)
    jobs = default_jobs() if jobs is None else jobs
    report = VerificationReport(name)
    start = time.perf_counter()

    def merge(results: Iterable[UnitResult]) -> None:
        for cases, failures, notes in results:
            report.cases_run += cases
            report.notes.extend(notes)
            report.failures.extend(failures)
            if failure_budget is not None and len(report.failures) >= failure_budget:
                del report.failures[failure_budget:]
                report.aborted = True
                return

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            merge(pool.map(_call, units))
    else:
        merge(map(_call, units))
    report.elapsed = time.perf_counter() - start
    log.info("suite %s: %d cases, %d failures, %.2fs", name, report.cases_run,
             len(report.failures), report.elapsed)
    return report


@dataclass
class ScanResult:
    family: Family
    n_max: int
    unsolvable: list[int]
    at_most_one: int
    sample_checked: list[int]
    disagreements: list[int]

    @property
    def density(self) -> float:
        return len(self.unsolvable) / self.n_max if self.n_max else 0.0

    def to_dict(self) -> dict[str, Any]:
        return {
            "m": self.family.m,
            "t": self.family.t,
            "n_max": self.n_max,
            "unsolvable": self.unsolvable,
            "unsolvable_count": len(self.unsolvable),
            "at_most_one": self.at_most_one,
            "density": self.density,
            "sample_checked": len(self.sample_checked),
            "disagreements": self.disagreements,
        }


def scan_unsolvable(family: Family, n_max: int, *, sample_rate: float = 0.01, seed: int = 0) -> ScanResult:
    """All n <= n_max with r_{m,t}(n) = 0, via the closed form.

    A random ``sample_rate`` share of n (at least one) is recomputed by brute
    force; any disagreement is listed in the result.
    """
    if family not in THEOREM3_CASES:
        raise UnsupportedFamily(f"no closed form for {family}")
    counts = {n: r_theorem3(family, n) for n in range(1, n_max + 1)}
    unsolvable = [n for n, r in counts.items() if r == 0]
    k = min(n_max, max(1, round(sample_rate * n_max))) if n_max else 0
    sample = sorted(random.Random(seed).sample(range(1, n_max + 1), k))
    bad = [n for n in sample if count_representations(family, n) != counts[n]]
    return ScanResult(family, n_max, unsolvable, sum(r <= 1 for r in counts.values()), sample, bad)


@dataclass
class BenchmarkResult:
    family: Family
    n_max: int
    method: str
    closed_seconds: float
    brute_seconds: float
    mismatches: list[int]

    @property
    def identical(self) -> bool:
        return not self.mismatches

    @property
    def speedup(self) -> float:
        return self.brute_seconds / self.closed_seconds if self.closed_seconds else float("inf")


def benchmark(family: Family, n_max: int) -> BenchmarkResult:
    """Time the closed form against the scalar brute-force count over 1..n_max."""
    method = closed_method(family)
    if method is None:
        raise UnsupportedFamily(f"no closed form for {family}")
    t0 = time.perf_counter()
    closed = [closed_r(family, n) for n in range(1, n_max + 1)]
    t1 = time.perf_counter()
    brute = [count_representations(family, n) for n in range(1, n_max + 1)]
    t2 = time.perf_counter()
    mismatches = [n for n, (a, b) in enumerate(zip(closed, brute), start=1) if a != b]
    return BenchmarkResult(family, n_max, method, t1 - t0, t2 - t1, mismatches)
