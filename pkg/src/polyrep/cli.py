"""Command-line front end.

    polyrep compute --m 3 --t 2 --n 7
    polyrep compute --m 7 --t 1 --n-range 1:50 --method both --format csv
    polyrep verify --suite all
    polyrep scan --m 3 --t 2 --n-max 20
    polyrep qform --d -56
    polyrep bench --m 3 --t 1 --n-max 2000

Exit codes: 0 success, 1 verification or cross-check failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from dataclasses import dataclass, field
from typing import Any, Sequence

from .arith import rho_seed
from .closedform import UnsupportedFamily, closed_method, closed_r, rprime_from_R
from .harness import SUITES, benchmark, default_jobs, run_suite, scan_unsolvable
from .polygonal import DomainError, Family
from .qforms import DiscriminantError, conductor, reduced_forms
from .repcount import qsolutions, representations

__all__ = ["OutputRecord", "main"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
CSV_COLUMNS = ("m", "t", "n", "r", "r_prime", "method", "reps")

log = logging.getLogger("polyrep")


class UsageError(Exception):
    pass


@dataclass
class OutputRecord:
    m: int
    t: int
    n: int
    r: int
    r_prime: int
    representations: list[dict[str, int]] = field(default_factory=list)
    method: str = "brute"

    def to_dict(self) -> dict[str, Any]:
        return {
            "m": self.m,
            "t": self.t,
            "n": self.n,
            "r": self.r,
            "r_prime": self.r_prime,
            "representations": [dict(rep) for rep in self.representations],
            "method": self.method,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> OutputRecord:
        return cls(**data)

    def csv_row(self) -> list[Any]:
        reps = ";".join(f"{r['a']}:{r['b']}:{r['c']}" for r in self.representations)
        return [self.m, self.t, self.n, self.r, self.r_prime, self.method, reps]


def _family(args) -> Family:
    try:
        return Family(args.m, args.t)
    except DomainError as exc:
        raise UsageError(str(exc)) from None


def _n_values(args) -> range:
    if args.n_range:
        try:
            lo, hi = (int(x) for x in args.n_range.split(":"))
        except ValueError:
            raise UsageError(f"--n-range expects LO:HI, got {args.n_range!r}") from None
        values = range(lo, hi + 1)
    else:
        values = range(args.n, args.n + 1)
    if values and values.start < 1:
        raise UsageError("n must be >= 1")
    return values


def _brute_record(fam: Family, n: int) -> OutputRecord:
    reps = representations(fam, n)
    return OutputRecord(
        fam.m, fam.t, n, len(reps), len(qsolutions(fam, n)),
        [rep._asdict() for rep in reps], "brute",
    )


def _emit(records: list[OutputRecord], fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        for rec in records:
            out.write(json.dumps(rec.to_dict()) + "\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for rec in records:
            writer.writerow(rec.csv_row())
    else:
        out.write(f"{'m':>4} {'t':>4} {'n':>8} {'r':>5} {'r_prime':>8}  {'method':<9} representations\n")
        for rec in records:
            reps = " ".join(f"({r['a']},{r['b']},{r['c']})" for r in rec.representations)
            out.write(f"{rec.m:>4} {rec.t:>4} {rec.n:>8} {rec.r:>5} {rec.r_prime:>8}  {rec.method:<9} {reps}\n")


def cmd_compute(args) -> int:
    fam = _family(args)
    values = _n_values(args)
    method = closed_method(fam)
    if args.method in ("closed", "both") and method is None:
        raise UsageError(f"no closed form for {fam}")
    records, status = [], EXIT_OK
    for n in values:
        if args.method == "closed":
            records.append(OutputRecord(fam.m, fam.t, n, closed_r(fam, n), rprime_from_R(fam, n), [], method))
            continue
        rec = _brute_record(fam, n)
        if args.method == "both":
            closed = closed_r(fam, n)
            if closed != rec.r:
                print(f"mismatch at n={n}: brute r={rec.r}, {method} r={closed}", file=sys.stderr)
                status = EXIT_FAIL
        records.append(rec)
    _emit(records, args.format)
    return status


def cmd_verify(args) -> int:
    names = SUITES if args.suite == "all" else (args.suite,)
    jobs = default_jobs() if args.jobs is None else args.jobs
    budget = None if args.failure_budget < 0 else args.failure_budget
    ok = True
    for name in names:
        report = run_suite(name, args.n_max, jobs=jobs, failure_budget=budget)
        ok &= report.passed
        if args.format == "json":
            print(report.to_json())
            continue
        status = "PASS" if report.passed else "FAIL"
        print(f"{status} {name}: {report.cases_run} cases, {len(report.failures)} failures, "
              f"{report.elapsed:.2f}s{' (aborted)' if report.aborted else ''}")
        for note in report.notes:
            print(f"  note: {note}")
        for f in report.failures[:10]:
            print(f"  {f.check}: {f.inputs} expected {f.expected}, got {f.got}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_scan(args) -> int:
    fam = _family(args)
    if args.n_max < 0:
        raise UsageError("--n-max must be >= 0")
    try:
        result = scan_unsolvable(fam, args.n_max, sample_rate=args.sample_rate, seed=args.seed)
    except UnsupportedFamily as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        print(json.dumps(result.to_dict()))
    elif args.format == "csv":
        print("n")
        for n in result.unsolvable:
            print(n)
    else:
        print(",".join(map(str, result.unsolvable)))
    print(
        f"{fam}: {len(result.unsolvable)} unsolvable n <= {args.n_max} (density {result.density:.4f}), "
        f"{result.at_most_one} with r <= 1, {len(result.sample_checked)} brute-force spot checks",
        file=sys.stderr,
    )
    if result.disagreements:
        print(f"closed form disagrees with brute force at {result.disagreements}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_qform(args) -> int:
    try:
        cd = reduced_forms(args.d)
    except DiscriminantError as exc:
        raise UsageError(str(exc)) from None
    data = {
        "d": cd.d,
        "h": cd.h,
        "structure": cd.structure,
        "conductor": conductor(cd.d),
        "reduced_forms": [list(f) for f in cd.reduced_forms],
        "roles": {k: list(v) for k, v in cd.roles.items()} if cd.roles else None,
    }
    if args.format == "json":
        print(json.dumps(data))
        return EXIT_OK
    print(f"d = {cd.d}, h = {cd.h}, structure = {cd.structure}, conductor = {data['conductor']}")
    for f in cd.reduced_forms:
        roles = [k for k, v in (cd.roles or {}).items() if v == f]
        print(f"  {f}" + (f"  {'/'.join(roles)}" if roles else ""))
    return EXIT_OK


def cmd_bench(args) -> int:
    fam = _family(args)
    try:
        res = benchmark(fam, args.n_max)
    except UnsupportedFamily as exc:
        raise UsageError(str(exc)) from None
    print(f"{fam} n <= {args.n_max}: {res.method} {res.closed_seconds:.3f}s, "
          f"brute {res.brute_seconds:.3f}s, speedup {res.speedup:.1f}x, "
          f"{'identical counts' if res.identical else f'mismatches at {res.mismatches[:10]}'}")
    return EXIT_OK if res.identical else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polyrep", description=__doc__.split("\n\n")[0])
    parser.add_argument("--seed", type=int, default=0, help="seed for the factorization splitter")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def family_args(p):
        p.add_argument("--m", type=int, required=True, help="polygon order")
        p.add_argument("--t", type=int, default=1, help="multiplier (default 1)")

    p = sub.add_parser("compute", help="count and list representations")
    family_args(p)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int)
    group.add_argument("--n-range", metavar="LO:HI")
    p.add_argument("--method", choices=("brute", "closed", "both"), default="brute")
    p.add_argument("--format", choices=("json", "csv", "table"), default="table")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=(*SUITES, "all"), required=True)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default $POLYREP_JOBS or 1)")
    p.add_argument("--failure-budget", type=int, default=25, help="stop after this many failures; -1 for none")
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="list n with no representation")
    family_args(p)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--sample-rate", type=float, default=0.01)
    p.add_argument("--format", choices=("json", "csv", "table"), default="table")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("qform", help="reduced forms and class data for a discriminant")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.set_defaults(func=cmd_qform)

    p = sub.add_parser("bench", help="time the closed form against brute force")
    family_args(p)
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        with rho_seed(args.seed):
            return args.func(args)
    except UsageError as exc:
        parser.exit(EXIT_USAGE, f"polyrep: error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
