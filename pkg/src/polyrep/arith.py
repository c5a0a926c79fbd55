"""Exact integer arithmetic: primality, factorization, valuations, divisor
counts, the Kronecker symbol and square detection.

Everything here works on Python ints but is only promised for the 64-bit
range, which is all the representation counts ever need.
"""

from __future__ import annotations

import contextlib
import random
from contextvars import ContextVar
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt, prod
from typing import Iterable, Iterator

__all__ = [
    "Factorization",
    "MAX_WIDTH",
    "divisor_count",
    "divisor_count_excluding",
    "divisors",
    "factorize",
    "is_prime",
    "is_square",
    "kronecker",
    "ord_p",
    "primes_up_to",
    "rho_seed",
]

MAX_WIDTH = 1 << 64
TRIAL_LIMIT = 10**6

# Deterministic for n < 3.3e24, which covers every 64-bit input.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_rho_seed: ContextVar[int] = ContextVar("polyrep_rho_seed", default=0)


@contextlib.contextmanager
def rho_seed(seed: int) -> Iterator[None]:
    """Fix the pseudo-random start points of the rho splitter in this context."""
    token = _rho_seed.set(seed)
    try:
        yield
    finally:
        _rho_seed.reset(token)


@lru_cache(maxsize=None)
def primes_up_to(limit: int) -> tuple[int, ...]:
    """All primes <= limit (sieve of Eratosthenes). The result is immutable."""
    if limit < 2:
        return ()
    sieve = bytearray(b"\x01") * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


_SMALL_PRIMES = primes_up_to(1000)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES[:25]:
        if n % p == 0:
            return n == p
    if n < 101 * 101:
        return True
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of ``value`` as strictly increasing (p, e) pairs."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.value < 1:
            raise ValueError(f"factorization of non-positive value {self.value}")
        if prod(p**e for p, e in self.factors) != self.value:
            raise ValueError(f"factors {self.factors} do not multiply to {self.value}")
        ps = [p for p, _ in self.factors]
        if ps != sorted(set(ps)) or any(e < 1 for _, e in self.factors):
            raise ValueError(f"malformed factor list {self.factors}")

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)


def _brent(n: int, rng: random.Random) -> int:
    """Return a nontrivial factor of the odd composite n (Pollard rho, Brent's cycle)."""
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g


def _split(n: int, rng: random.Random, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _brent(n, rng)
    _split(d, rng, out)
    _split(n // d, rng, out)


def factorize(n: int) -> Factorization:
    """Factor ``n`` by trial division up to 10**6, then Pollard-Brent.

    Raises OverflowError for n >= 2**64.
    """
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    if n >= MAX_WIDTH:
        raise OverflowError(f"{n} exceeds the supported 64-bit width")
    found: dict[int, int] = {}
    rest = n
    for p in _SMALL_PRIMES:
        if p * p > rest:
            break
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            found[p] = e
    if rest > 1 and not is_prime(rest):
        for p in primes_up_to(TRIAL_LIMIT)[len(_SMALL_PRIMES):]:
            if p * p > rest:
                break
            if rest % p == 0:
                e = 0
                while rest % p == 0:
                    rest //= p
                    e += 1
                found[p] = e
                if is_prime(rest):
                    break
        if rest > 1 and not is_prime(rest):
            cofactors: dict[int, int] = {}
            _split(rest, random.Random(_rho_seed.get()), cofactors)
            for p, e in cofactors.items():
                found[p] = found.get(p, 0) + e
            rest = 1
    if rest > 1:
        found[rest] = found.get(rest, 0) + 1
    return Factorization(n, tuple(sorted(found.items())))


def ord_p(n: int, p: int) -> int:
    """Exponent of the prime p in n."""
    if not is_prime(p):
        raise ValueError(f"ord_p needs a prime, got {p}")
    if n < 1:
        raise ValueError(f"ord_p needs n >= 1, got {n}")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def divisor_count_excluding(n: int | Factorization, excluded: Iterable[int] = ()) -> int:
    """Product of (1 + ord_p n) over primes p dividing n and not in ``excluded``.

    With nothing excluded this is the ordinary divisor count d(n).
    """
    fac = n if isinstance(n, Factorization) else factorize(n)
    skip = frozenset(excluded)
    return prod(e + 1 for p, e in fac if p not in skip)


def divisor_count(n: int | Factorization) -> int:
    return divisor_count_excluding(n, ())


def divisors(n: int | Factorization) -> list[int]:
    fac = n if isinstance(n, Factorization) else factorize(n)
    out = [1]
    for p, e in fac:
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


def kronecker(a: int, k: int) -> int:
    """Kronecker symbol (a/k), defined for every integer pair."""
    if k == 0:
        return 1 if abs(a) == 1 else 0
    sign = 1
    if k < 0:
        k = -k
        if a < 0:
            sign = -1
    if k % 2 == 0:
        if a % 2 == 0:
            return 0
        v = 0
        while k % 2 == 0:
            k //= 2
            v += 1
        if v % 2 and a % 8 in (3, 5):
            sign = -sign
    # Jacobi symbol (a/k) for odd positive k.
    a %= k
    while a:
        while a % 2 == 0:
            a //= 2
            if k % 8 in (3, 5):
                sign = -sign
        a, k = k, a
        if a % 4 == 3 and k % 4 == 3:
            sign = -sign
        a %= k
    return sign if k == 1 else 0


def is_square(n: int) -> int | None:
    """Return the square root of n if n is a perfect square, else None."""
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None
