"""Positive definite binary quadratic forms ax^2 + bxy + cy^2.

Covers reduction and class numbers, exact representation counts by
enumeration, Dirichlet's divisor-sum formula for the total count N(n, d),
and the F-functionals used to split N(n, d) across the classes of a
cyclic class group of order 2 or 4.

No composition law is implemented. Class roles (I, A, A^2, A^3) come from
the forms themselves: the principal form is I; in a cyclic group of order 4
the only non-principal ambiguous form is A^2 and the remaining mirror pair
is {A, A^3}. Mirror forms represent the same integers, so which member is
called A does not matter for any count computed here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt, prod
from types import MappingProxyType
from typing import Mapping, NamedTuple

from .arith import divisors, factorize, kronecker

__all__ = [
    "ClassData",
    "DiscriminantError",
    "FValues",
    "HypothesisError",
    "CLASS_H1",
    "CLASS_H2",
    "CLASS_H3",
    "CLASS_Z4",
    "QuadForm",
    "TABLE_ROLES",
    "F_A2_direct",
    "F_values",
    "N_by_enumeration",
    "chi",
    "conductor",
    "dirichlet_N",
    "is_fundamental",
    "lemma5_closed",
    "lemma7_closed",
    "omega",
    "positive_representations",
    "prime_class",
    "principal_R",
    "represent_count",
    "reduced_forms",
]


class DiscriminantError(ValueError):
    """Not a negative discriminant (d < 0, d = 0 or 1 mod 4)."""


class HypothesisError(ValueError):
    """A closed formula was asked for outside its hypotheses.

    Callers fall back to enumeration when they see this.
    """


class QuadForm(NamedTuple):
    a: int
    b: int
    c: int

    def __str__(self):
        return f"[{self.a},{self.b},{self.c}]"

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def content(self) -> int:
        return gcd(self.a, self.b, self.c)

    def primitive(self) -> QuadForm:
        g = self.content
        return QuadForm(self.a // g, self.b // g, self.c // g)

    def mirror(self) -> QuadForm:
        return QuadForm(self.a, -self.b, self.c)

    def __call__(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    @property
    def is_ambiguous(self) -> bool:
        """For a reduced form: equal to its own inverse class."""
        return self.b == 0 or self.b == self.a or self.a == self.c


# Negative discriminants by class group, as tabulated in the literature.
CLASS_H1 = (-3, -4, -7, -8, -11, -12, -16, -19, -27, -28, -43, -67, -163)
CLASS_H2 = (
    -15, -20, -24, -32, -35, -36, -40, -48, -51, -52, -60, -64, -72, -75, -88,
    -91, -99, -100, -112, -115, -123, -147, -148, -187, -232, -235, -267, -403,
    -427,
)
CLASS_H3 = (
    -23, -31, -44, -59, -76, -83, -92, -107, -108, -124, -139, -172, -211, -243,
    -268, -283, -307, -331, -379, -499, -547, -643, -652, -883, -907,
)
CLASS_Z4 = (
    -39, -55, -56, -63, -68, -80, -128, -136, -144, -155, -156, -171, -184, -196,
    -203, -208, -219, -220, -252, -256, -259, -275, -291, -292, -323, -328, -355,
    -363, -387, -388, -400, -475, -507, -568, -592, -603, -667, -723, -763, -772,
    -955, -1003, -1027, -1227, -1243, -1387, -1411, -1467, -1507, -1555,
)

# Class roles for the discriminants of the Z4 closed forms: (I, A, A^2).
TABLE_ROLES = {
    -56: (QuadForm(1, 0, 14), QuadForm(3, 2, 5), QuadForm(2, 0, 7)),
    -136: (QuadForm(1, 0, 34), QuadForm(5, 2, 7), QuadForm(2, 0, 17)),
    -184: (QuadForm(1, 0, 46), QuadForm(5, 4, 10), QuadForm(2, 0, 23)),
    -328: (QuadForm(1, 0, 82), QuadForm(7, 6, 13), QuadForm(2, 0, 41)),
    -568: (QuadForm(1, 0, 142), QuadForm(11, 2, 13), QuadForm(2, 0, 71)),
}


def _check_discriminant(d: int) -> None:
    if d >= 0 or d % 4 not in (0, 1):
        raise DiscriminantError(f"{d} is not a negative discriminant")


def principal_form(d: int) -> QuadForm:
    _check_discriminant(d)
    e = d % 2
    return QuadForm(1, e, (e - d) // 4)


@dataclass(frozen=True)
class ClassData:
    """Reduced primitive forms of discriminant d and their class roles.

    ``structure`` is one of h1, h2, h3, Z4, other. For h = 4 the cyclic and
    Klein cases are told apart by counting ambiguous reduced forms, which
    correspond one-to-one to classes of order <= 2. ``roles`` maps I, A, A2,
    A3 to forms when the group is cyclic of order <= 4, else is None.
    """

    d: int
    reduced_forms: tuple[QuadForm, ...]
    structure: str
    roles: Mapping[str, QuadForm] | None

    @property
    def h(self) -> int:
        return len(self.reduced_forms)

    @property
    def n_ambiguous(self) -> int:
        return sum(f.is_ambiguous for f in self.reduced_forms)

    def role(self, name: str) -> QuadForm:
        if self.roles is None or name not in self.roles:
            raise HypothesisError(f"no class role {name!r} for d={self.d} ({self.structure})")
        return self.roles[name]


def _enumerate_reduced(d: int) -> tuple[QuadForm, ...]:
    forms = []
    for a in range(1, isqrt(-d // 3) + 1):
        for b in range(-a + 1, a + 1):
            if (b - d) % 2:
                continue
            num = b * b - d
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if gcd(a, b, c) == 1:
                forms.append(QuadForm(a, b, c))
    forms.sort(key=lambda f: (f.a, abs(f.b), -f.b))
    return tuple(forms)


def _assign_roles(d: int, forms: tuple[QuadForm, ...], structure: str):
    principal = principal_form(d)
    if structure == "h1":
        return {"I": principal}
    if structure == "h2":
        (other,) = [f for f in forms if f != principal]
        return {"I": principal, "A": other}
    if structure == "h3":
        a = next(f for f in forms if f != principal and f.b > 0)
        return {"I": principal, "A": a, "A2": a.mirror()}
    if structure == "Z4":
        if d in TABLE_ROLES:
            i, a, a2 = TABLE_ROLES[d]
        else:
            i = principal
            a2 = next(f for f in forms if f != principal and f.is_ambiguous)
            a = next(f for f in forms if not f.is_ambiguous and f.b > 0)
        return {"I": i, "A": a, "A2": a2, "A3": a.mirror()}
    return None


@lru_cache(maxsize=4096)
def reduced_forms(d: int) -> ClassData:
    """All primitive reduced forms of discriminant d < 0, with class roles."""
    _check_discriminant(d)
    forms = _enumerate_reduced(d)
    h = len(forms)
    if h <= 3:
        structure = f"h{h}"
    elif h == 4 and sum(f.is_ambiguous for f in forms) == 2:
        structure = "Z4"
    else:
        structure = "other"
    roles = _assign_roles(d, forms, structure)
    return ClassData(d, forms, structure, None if roles is None else MappingProxyType(roles))


def conductor(d: int) -> int:
    """Largest f with d/f^2 still a discriminant."""
    _check_discriminant(d)
    for f in range(isqrt(-d), 0, -1):
        if d % (f * f) == 0 and (d // (f * f)) % 4 in (0, 1):
            return f
    return 1


def is_fundamental(d: int) -> bool:
    return conductor(d) == 1


def omega(d: int) -> int:
    """Number of automorphs of a form of discriminant d < 0."""
    if d >= 0:
        raise DiscriminantError(f"omega needs d < 0, got {d}")
    return {-3: 6, -4: 4}.get(d, 2)


def represent_count(form: QuadForm | tuple[int, int, int], n: int) -> int:
    """Number of integer pairs (x, y) with form(x, y) = n, by enumeration.

    Non-primitive forms are reduced to their primitive part first.
    """
    form = QuadForm(*form)
    if form.discriminant >= 0 or form.a <= 0:
        raise DiscriminantError(f"{form} is not positive definite")
    if n < 1:
        raise ValueError(f"represent_count needs n >= 1, got {n}")
    g = form.content
    if n % g:
        return 0
    a, b, c = form.primitive()
    n //= g
    d = b * b - 4 * a * c
    # for fixed y: a x^2 + (b y) x + (c y^2 - n) = 0 has discriminant 4an + d y^2
    bound = isqrt(4 * a * n // -d)
    count = 0
    for y in range(-bound, bound + 1):
        disc = 4 * a * n + d * y * y
        if disc < 0:
            continue
        s = isqrt(disc)
        if s * s != disc:
            continue
        if (s - b * y) % (2 * a) == 0:
            count += 1
        if s and (-s - b * y) % (2 * a) == 0:
            count += 1
    return count


def dirichlet_N(n: int, d: int) -> int:
    """omega(d) * sum over k | n of (d/f^2 / k), valid when gcd(n, d) = 1."""
    _check_discriminant(d)
    if n < 1 or gcd(n, d) != 1:
        raise HypothesisError(f"Dirichlet's formula needs gcd(n, d) = 1, got n={n}, d={d}")
    f = conductor(d)
    core = d // (f * f)
    return omega(d) * sum(kronecker(core, k) for k in divisors(n))


def N_by_enumeration(n: int, d: int) -> int:
    """Total representations of n over all reduced primitive forms of d."""
    return sum(represent_count(f, n) for f in reduced_forms(d).reduced_forms)


def principal_R(n: int, d: int) -> int:
    """R(I, n) for h(d) = 1, where the principal class carries all of N(n, d)."""
    if reduced_forms(d).h != 1:
        raise HypothesisError(f"principal_R needs h(d) = 1, d={d}")
    return dirichlet_N(n, d)


def prime_class(p: int, classdata: ClassData) -> str | None:
    """Role of the class representing the prime p (A3 reported as A), or None."""
    if classdata.roles is None:
        raise HypothesisError(f"d={classdata.d} has no class roles")
    for name in ("I", "A", "A2"):
        if name in classdata.roles and represent_count(classdata.roles[name], p):
            return name
    return None


class FValues(NamedTuple):
    F_I: int
    F_A: int
    F_A2: int | None


def _N(n: int, d: int) -> int:
    return dirichlet_N(n, d) if gcd(n, d) == 1 else N_by_enumeration(n, d)


def _exact(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num}/{den} is not an integer")
    return q


def _a_class_parity(n: int, classdata: ClassData) -> int:
    """Sum of ord_p(n) over primes p represented by A (or A^3)."""
    return sum(e for p, e in factorize(n) if prime_class(p, classdata) == "A")


def F_values(n: int, classdata: ClassData) -> FValues:
    """F(I, n), F(A, n) and, for a cyclic group of order 4, F(A^2, n).

    F(I) = N(n, d)/omega; F(A) = (R(I) - R(A))/omega for h = 2, 3 and
    (R(I) - R(A^2))/omega for h = 4; F(A^2) = (-1)^(sum of ord_p n over
    primes p in class A) * F(I).
    """
    d, w = classdata.d, omega(classdata.d)
    if classdata.structure not in ("h2", "h3", "Z4"):
        raise HypothesisError(f"F-values need h(d) in (2, 3) or H(d) = Z4, d={d}")
    r_i = represent_count(classdata.role("I"), n)
    f_i = _exact(_N(n, d), w)
    if classdata.structure == "Z4":
        f_a = _exact(r_i - represent_count(classdata.role("A2"), n), w)
        sign = -1 if _a_class_parity(n, classdata) % 2 else 1
        return FValues(f_i, f_a, sign * f_i)
    return FValues(f_i, _exact(r_i - represent_count(classdata.role("A"), n), w), None)


def F_A2_direct(n: int, classdata: ClassData) -> int:
    """(R(I) - 2R(A) + R(A^2))/omega, the same functional straight from counts."""
    if classdata.structure != "Z4":
        raise HypothesisError(f"F(A^2) needs H(d) = Z4, d={classdata.d}")
    r = {k: represent_count(classdata.role(k), n) for k in ("I", "A", "A2")}
    return _exact(r["I"] - 2 * r["A"] + r["A2"], omega(classdata.d))


def _split_product(n: int, core: int) -> int:
    return prod(e + 1 for p, e in factorize(n) if kronecker(core, p) == 1)


def chi(n: int, d: int) -> Fraction:
    """F(A, n) / prod over p with (d/f^2 / p) = 1 of (1 + ord_p n)."""
    cd = reduced_forms(d)
    f = conductor(d)
    if cd.h != 2 or d == -60 or gcd(n, f) != 1:
        raise HypothesisError(f"chi(n, d) needs h(d) = 2, d != -60, gcd(n, f) = 1; n={n}, d={d}")
    return Fraction(F_values(n, cd).F_A, _split_product(n, d // (f * f)))


def lemma5_closed(n: int, d: int) -> tuple[int, int]:
    """(R(I, n), R(A, n)) = ((1 + chi) P, (1 - chi) P), P = prod_{(d/p)=1} (1 + ord_p n)."""
    cd = reduced_forms(d)
    if cd.h != 2 or d == -60 or not is_fundamental(d):
        raise HypothesisError(f"needs fundamental d != -60 with h(d) = 2, got {d}")
    for p, e in factorize(n):
        if e % 2 and kronecker(d, p) == -1:
            raise HypothesisError(f"prime {p} has odd order in {n} but (d/p) = -1")
    ch = chi(n, d)
    p_split = _split_product(n, d)
    r_i, r_a = (1 + ch) * p_split, (1 - ch) * p_split
    if r_i.denominator != 1 or r_a.denominator != 1:
        raise ArithmeticError(f"non-integral closed form at n={n}, d={d}")
    return int(r_i), int(r_a)


def lemma7_closed(n: int, d: int, classdata: ClassData | None = None) -> tuple[int, int]:
    """(R(I, n), R(A^2, n)) = omega (F(I) +- 2F(A) + F(A^2)) / 4."""
    cd = classdata or reduced_forms(d)
    if cd.structure != "Z4" or not is_fundamental(d):
        raise HypothesisError(f"needs a fundamental d with H(d) = Z4, got {d}")
    f_i, f_a, f_a2 = F_values(n, cd)
    w = omega(d)
    return _exact(w * (f_i + 2 * f_a + f_a2), 4), _exact(w * (f_i - 2 * f_a + f_a2), 4)


def positive_representations(c: int, d: int, n: int) -> list[tuple[int, int]]:
    """All (x, y) with x, y >= 1 and c x^2 + d y^2 = n."""
    out = []
    x = 1
    while c * x * x < n:
        rest = n - c * x * x
        if rest % d == 0:
            y = isqrt(rest // d)
            if y >= 1 and y * y == rest // d:
                out.append((x, y))
        x += 1
    return out

