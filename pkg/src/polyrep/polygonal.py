"""Polygonal numbers P(m, c) = c((m-2)c - (m-4))/2 and their inverses.

Index domain: c >= 1 for m in {3, 4}; any integer c for m > 4. On that
domain c -> P(m, c) is injective, so an inverse query has at most one answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

__all__ = [
    "DomainError",
    "Family",
    "is_t_polygonal",
    "polygonal",
    "polygonal_index",
    "valid_index",
]


class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


@dataclass(frozen=True, order=True)
class Family:
    """The pair (m, t): polygon order and multiplier in ab = t*P(m, c)."""

    m: int
    t: int = 1

    def __post_init__(self):
        if self.m < 3:
            raise DomainError(f"polygon order must be >= 3, got m={self.m}")
        if self.t < 1:
            raise DomainError(f"multiplier must be >= 1, got t={self.t}")

    def __str__(self):
        return f"({self.m},{self.t})"

    @property
    def target_offset(self) -> int:
        """t(m-4)^2, the constant term of the quadratic target value."""
        return self.t * (self.m - 4) ** 2

    def target(self, n: int) -> int:
        """2(m-2)n^2 + t(m-4)^2."""
        return 2 * (self.m - 2) * n * n + self.target_offset


def valid_index(m: int, c: int) -> bool:
    return c >= 1 if m in (3, 4) else True


def polygonal(m: int, c: int) -> int:
    if m < 3:
        raise DomainError(f"polygon order must be >= 3, got m={m}")
    if not valid_index(m, c):
        raise DomainError(f"index c={c} is outside the domain for m={m}")
    return c * ((m - 2) * c - (m - 4)) // 2


def polygonal_index(m: int, v: int) -> int | None:
    """The unique valid c with P(m, c) = v, or None.

    Roots of (m-2)c^2 - (m-4)c - 2v = 0 are ((m-4) +- s) / (2(m-2)) with
    s^2 = (m-4)^2 + 8(m-2)v.
    """
    if v < 1:
        raise DomainError(f"polygonal_index needs v >= 1, got {v}")
    disc = (m - 4) ** 2 + 8 * (m - 2) * v
    s = isqrt(disc)
    if s * s != disc:
        return None
    den = 2 * (m - 2)
    for num in (m - 4 + s, m - 4 - s):
        if num % den == 0 and valid_index(m, num // den):
            return num // den
    return None


def is_t_polygonal(family: Family, v: int) -> int | None:
    """Index c with t*P(m, c) = v, or None."""
    if v % family.t:
        return None
    return polygonal_index(family.m, v // family.t)
