"""Brute-force ground truth for r_{m,t}(n) and r'_{m,t}(n).

r_{m,t}(n) counts unordered pairs a >= b >= 1 with a + b = n and
ab = t*P(m, c) for a valid index c. r'_{m,t}(n) counts the nonnegative
solutions (x, y) of

    2(m-2)n^2 + t(m-4)^2 = 2(m-2)x^2 + t*y^2.

Nothing in this module touches quadratic-form theory; it is the oracle the
closed forms are checked against. The ``*_table`` functions are vectorized
versions of the same enumerations for sweeping whole n-ranges.
"""

from __future__ import annotations

from math import isqrt
from typing import NamedTuple

import numpy as np

from .polygonal import DomainError, Family, is_t_polygonal, polygonal, valid_index

__all__ = [
    "QPair",
    "Representation",
    "count_representations",
    "qpair_from_representation",
    "qsolutions",
    "r_table",
    "representation_from_qpair",
    "representations",
    "rprime_table",
]


class Representation(NamedTuple):
    a: int
    b: int
    c: int


class QPair(NamedTuple):
    x: int
    y: int


def _check_n(n: int) -> None:
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")


def representations(family: Family, n: int) -> list[Representation]:
    """All representations of n, sorted by descending a."""
    _check_n(n)
    out = []
    for a in range(n - 1, (n + 1) // 2 - 1, -1):
        b = n - a
        c = is_t_polygonal(family, a * b)
        if c is not None:
            out.append(Representation(a, b, c))
    return out


def count_representations(family: Family, n: int) -> int:
    """len(representations(family, n)) without building the list."""
    _check_n(n)
    m, t = family.m, family.t
    off = (m - 4) ** 2
    k8 = 8 * (m - 2)
    den = 2 * (m - 2)
    small = m in (3, 4)
    count = 0
    for a in range((n + 1) // 2, n):
        v = a * (n - a)
        if v % t:
            continue
        disc = off + k8 * (v // t)
        s = isqrt(disc)
        if s * s != disc:
            continue
        if (m - 4 + s) % den == 0 and (not small or m - 4 + s > 0):
            count += 1
        elif not small and (m - 4 - s) % den == 0:
            count += 1
    return count


def qsolutions(family: Family, n: int) -> list[QPair]:
    """All nonnegative (x, y) on the target ellipse, sorted by x."""
    _check_n(n)
    k, t = 2 * (family.m - 2), family.t
    z = family.target(n)
    out = []
    x = 0
    while k * x * x <= z:
        rest = z - k * x * x
        if rest % t == 0:
            y = isqrt(rest // t)
            if y * y == rest // t:
                out.append(QPair(x, y))
        x += 1
    return out


def _check_rep(family: Family, n: int, rep: Representation) -> None:
    a, b, c = rep
    if not (a >= b >= 1 and a + b == n and valid_index(family.m, c)):
        raise DomainError(f"{rep} is not a representation of n={n}")
    if a * b != family.t * polygonal(family.m, c):
        raise DomainError(f"{rep}: ab != t*P(m,c) for family {family}")


def qpair_from_representation(family: Family, n: int, rep: Representation) -> QPair:
    """(a, b, c) -> (|a-b|, |2(m-2)c - (m-4)|)."""
    _check_rep(family, n, rep)
    m = family.m
    return QPair(abs(rep.a - rep.b), abs(2 * (m - 2) * rep.c - (m - 4)))


def representation_from_qpair(family: Family, n: int, pair: QPair) -> Representation | None:
    """(x, y) -> ((n+x)/2, (n-x)/2, c) when that is a representation.

    c is whichever of ((m-4) + y)/(2(m-2)), ((m-4) - y)/(2(m-2)) is a valid
    index. Returns None for x >= n, odd n + x, or no usable c.
    """
    x, y = pair
    m, t = family.m, family.t
    if 2 * (m - 2) * x * x + t * y * y != family.target(n):
        raise DomainError(f"{pair} is not a solution for n={n}, family {family}")
    if x >= n or (n + x) % 2:
        return None
    a, b = (n + x) // 2, (n - x) // 2
    den = 2 * (m - 2)
    for num in (m - 4 + y, m - 4 - y):
        if num % den == 0 and valid_index(m, num // den):
            c = num // den
            if a * b == t * polygonal(m, c):
                return Representation(a, b, c)
    return None


# Float square roots are exact-then-corrected only while values stay below 2**52.
_FLOAT_SAFE = 1 << 52


def _isqrt_array(values: np.ndarray) -> np.ndarray:
    s = np.sqrt(values.astype(np.float64)).astype(np.int64)
    s -= (s * s > values).astype(np.int64)
    s += ((s + 1) * (s + 1) <= values).astype(np.int64)
    return s


def r_table(family: Family, n_max: int) -> np.ndarray:
    """Brute-force r_{m,t}(n) for n = 0..n_max (index 0 is always 0)."""
    m, t = family.m, family.t
    out = np.zeros(n_max + 1, dtype=np.int64)
    if n_max < 2:
        return out
    if (m - 4) ** 2 + 8 * (m - 2) * (n_max * n_max // 4) >= _FLOAT_SAFE:
        for n in range(1, n_max + 1):
            out[n] = count_representations(family, n)
        return out
    den = 2 * (m - 2)
    small = m in (3, 4)
    # process n in blocks to bound memory at roughly 4M pairs
    block = max(1, min(n_max, int((8_000_000) ** 0.5)))
    for lo in range(2, n_max + 1, block):
        ns = np.arange(lo, min(lo + block, n_max + 1), dtype=np.int64)
        starts = (ns + 1) // 2
        lengths = ns - starts
        nn = np.repeat(ns, lengths)
        offsets = np.arange(lengths.sum()) - np.repeat(np.cumsum(lengths) - lengths, lengths)
        a = np.repeat(starts, lengths) + offsets
        v = a * (nn - a)
        ok = v % t == 0
        disc = (m - 4) ** 2 + 8 * (m - 2) * (v // t)
        s = _isqrt_array(disc)
        ok &= s * s == disc
        plus = (m - 4 + s) % den == 0
        if small:
            plus &= m - 4 + s > 0
            hit = ok & plus
        else:
            hit = ok & (plus | ((m - 4 - s) % den == 0))
        out[lo : lo + len(ns)] = np.bincount(nn[hit] - lo, minlength=len(ns))
    return out


def rprime_table(family: Family, n_max: int) -> np.ndarray:
    """Brute-force r'_{m,t}(n) for n = 0..n_max (index 0 left at 0)."""
    k, t = 2 * (family.m - 2), family.t
    out = np.zeros(n_max + 1, dtype=np.int64)
    if n_max < 1:
        return out
    if family.target(n_max) >= _FLOAT_SAFE:
        for n in range(1, n_max + 1):
            out[n] = len(qsolutions(family, n))
        return out
    block = 512
    for lo in range(1, n_max + 1, block):
        ns = np.arange(lo, min(lo + block, n_max + 1), dtype=np.int64)
        zs = k * ns * ns + family.target_offset
        lengths = _isqrt_array(zs // k) + 1
        nn = np.repeat(ns, lengths)
        xs = np.arange(lengths.sum()) - np.repeat(np.cumsum(lengths) - lengths, lengths)
        rest = np.repeat(zs, lengths) - k * xs * xs
        q = rest // t
        s = _isqrt_array(q)
        hit = (rest % t == 0) & (s * s == q)
        out[lo : lo + len(ns)] = np.bincount(nn[hit] - lo, minlength=len(ns))
    return out
