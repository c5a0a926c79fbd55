"""Closed formulas for r_{m,t}(n) and their prime-set characterizations.

Two groups of families are covered:

* fourteen families where the relevant class group has order 1 or 2 and
  r_{m,t}(n) is a halved divisor count of a quadratic value z(n);
* ten families with class group Z/4, where r_{m,t}(n) comes from the
  F-functionals of that group evaluated at z(n).

In both cases z(n) is 2(m-2)n^2 + t(m-4)^2 with the content of the form
[t, 0, 2(m-2)] divided out (twice for t = 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import divisor_count_excluding, factorize, is_prime, is_square
from .polygonal import DomainError, Family
from .qforms import F_values, QuadForm, reduced_forms, represent_count

__all__ = [
    "CaseDescriptor",
    "SUPPORTED_FAMILIES",
    "THEOREM3_CASES",
    "THEOREM4_CASES",
    "UnsupportedFamily",
    "closed_method",
    "closed_r",
    "r_theorem3",
    "r_theorem4",
    "r_theorem4_plus_sign",
    "rprime_from_R",
    "table_FI",
    "unsolvable_cor1",
    "x_axis_solution",
]


class UnsupportedFamily(DomainError):
    """No closed form is known for this (m, t)."""


@dataclass(frozen=True)
class CaseDescriptor:
    family: Family
    z_poly: tuple[int, int]
    d: int
    form_I: QuadForm
    excluded: frozenset[int]
    theorem_tag: str
    multipliers: tuple[int, ...] = ()
    form_A: QuadForm | None = None
    form_A2: QuadForm | None = None

    def z(self, n: int) -> int:
        a, b = self.z_poly
        return a * n * n + b


def _t3(m, t, z_poly, d, excluded, multipliers):
    return CaseDescriptor(
        Family(m, t), z_poly, d, reduced_forms(d).role("I"), frozenset(excluded), "T3",
        tuple(multipliers),
    )


THEOREM3_CASES: dict[Family, CaseDescriptor] = {
    c.family: c
    for c in (
        _t3(3, 1, (2, 1), -8, (), (1,)),
        _t3(5, 1, (6, 1), -24, (), (1,)),
        _t3(7, 1, (10, 9), -40, (3,), (1, 9)),
        _t3(13, 1, (22, 81), -88, (3,), (1, 9, 81)),
        _t3(31, 1, (58, 729), -232, (3,), (1, 9, 81, 729)),
        _t3(3, 2, (1, 1), -4, (), (1,)),
        _t3(8, 2, (3, 8), -24, (2,), (1, 4, 8)),
        _t3(12, 2, (5, 32), -40, (2,), (1, 4, 16, 32)),
        _t3(24, 2, (11, 200), -88, (2, 5), (1, 4, 8, 25, 100, 200)),
        _t3(60, 2, (29, 1568), -232, (2, 7), (1, 4, 16, 32, 49, 196, 784, 1568)),
        _t3(3, 3, (2, 3), -24, (3,), (1, 3)),
        _t3(3, 5, (2, 5), -40, (5,), (1, 5)),
        _t3(3, 11, (2, 11), -88, (11,), (1, 11)),
        _t3(3, 29, (2, 29), -232, (29,), (1, 29)),
    )
}


def _t4(m, t, z_poly, d, excluded):
    roles = reduced_forms(d).roles
    return CaseDescriptor(
        Family(m, t), z_poly, d, roles["I"], frozenset(excluded), "T4",
        form_A=roles["A"], form_A2=roles["A2"],
    )


THEOREM4_CASES: dict[Family, CaseDescriptor] = {
    c.family: c
    for c in (
        _t4(9, 1, (14, 25), -56, ()),
        _t4(19, 1, (34, 225), -136, (3,)),
        _t4(25, 1, (46, 441), -184, (3, 7)),
        _t4(43, 1, (82, 1521), -328, (3,)),
        _t4(73, 1, (142, 4761), -568, (3, 23)),
        _t4(16, 2, (7, 72), -56, (2,)),
        _t4(36, 2, (17, 512), -136, (2,)),
        _t4(48, 2, (23, 968), -184, (2,)),
        _t4(84, 2, (41, 3200), -328, (2, 5)),
        _t4(144, 2, (71, 9800), -568, (2, 5, 7)),
    )
}

SUPPORTED_FAMILIES: tuple[Family, ...] = (*THEOREM3_CASES, *THEOREM4_CASES)


def _case(table: dict[Family, CaseDescriptor], family: Family, n: int) -> CaseDescriptor:
    if family not in table:
        raise UnsupportedFamily(f"no closed form for {family}")
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return table[family]


def r_theorem3(family: Family, n: int) -> int:
    """floor((d_A(z) - 1) / 2), or d(n^2 + 1)/2 - 1 for (m, t) = (3, 2)."""
    case = _case(THEOREM3_CASES, family, n)
    z = case.z(n)
    dz = divisor_count_excluding(factorize(z), case.excluded)
    if family == Family(3, 2):
        return dz // 2 - 1
    return (dz - 1) // 2


def unsolvable_cor1(family: Family, n: int) -> bool:
    """True iff z(n) is s*p for a prime p and one of the family's multipliers s."""
    case = _case(THEOREM3_CASES, family, n)
    z = case.z(n)
    return any(z % s == 0 and is_prime(z // s) for s in case.multipliers)


def rprime_from_R(family: Family, n: int) -> int:
    """r'_{m,t}(n) from R([t, 0, 2(m-2)], target).

    Solutions off both axes account for four points of R each, those on the
    y-axis (x = 0) for two, hence (R + 2)/4 when target/t is a square.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    target = family.target(n)
    total = represent_count(QuadForm(family.t, 0, 2 * (family.m - 2)), target)
    if target % family.t == 0 and is_square(target // family.t) is not None:
        total += 2
    q, rem = divmod(total, 4)
    if rem:
        raise ArithmeticError(f"{total} representations do not split into quadrants")
    return q


def x_axis_solution(family: Family, n: int) -> int | None:
    """x > 0 with 2(m-2)x^2 equal to the target value (y = 0), if any."""
    k = 2 * (family.m - 2)
    target = family.target(n)
    return is_square(target // k) if target % k == 0 else None


def _square_branch(case: CaseDescriptor, z: int) -> bool:
    if case.family.t == 1:
        return is_square(z) is not None
    return is_square(2 * z) is not None


def r_theorem4(family: Family, n: int) -> int:
    """r_{m,t}(n) = (F(I,z) + 2s F(A,z) + F(A^2,z))/8 - 1 (or - 1/2 on the square branch).

    s = +1 for t = 1. For t = 2 the halved equation forces y to be even, so
    z(n) is counted by the class A^2 = [2, 0, (m-2)/2] and s = -1.
    """
    case = _case(THEOREM4_CASES, family, n)
    z = case.z(n)
    f_i, f_a, f_a2 = F_values(z, reduced_forms(case.d))
    sign = 1 if family.t == 1 else -1
    total = f_i + 2 * sign * f_a + f_a2
    if _square_branch(case, z):
        total += 4
    q, rem = divmod(total, 8)
    if rem:
        raise ArithmeticError(f"F-sum {total} is not divisible by 8 at n={n}, {family}")
    return q - 1


def r_theorem4_plus_sign(family: Family, n: int) -> Fraction:
    """The Z4 formula with +2F(A) for both t = 1 and t = 2, unrounded."""
    case = _case(THEOREM4_CASES, family, n)
    z = case.z(n)
    f_i, f_a, f_a2 = F_values(z, reduced_forms(case.d))
    shift = Fraction(1, 2) if _square_branch(case, z) else Fraction(1)
    return Fraction(f_i + 2 * f_a + f_a2, 8) - shift


def table_FI(family: Family, n: int) -> int:
    """Tabulated divisor expression for F(I, z): d_A(z) with the row's excluded primes."""
    case = _case(THEOREM4_CASES, family, n)
    return divisor_count_excluding(factorize(case.z(n)), case.excluded)


def closed_method(family: Family) -> str | None:
    if family in THEOREM3_CASES:
        return "theorem3"
    if family in THEOREM4_CASES:
        return "theorem4"
    return None


def closed_r(family: Family, n: int) -> int:
    method = closed_method(family)
    if method == "theorem3":
        return r_theorem3(family, n)
    if method == "theorem4":
        return r_theorem4(family, n)
    raise UnsupportedFamily(f"no closed form for {family}")
