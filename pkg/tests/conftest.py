"""Independent oracles shared by the test modules.

These deliberately use the slowest obvious method so they share no code
path with the package.
"""

import pytest

ACCEPTANCE_LINES: list[str] = []


def trial_factor(n):
    out, p = [], 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def naive_divisor_count(n):
    return sum(1 for k in range(1, n + 1) if n % k == 0)


def naive_is_prime(n):
    return n > 1 and all(n % k for k in range(2, int(n**0.5) + 1))


def euler_kronecker(a, k):
    """Kronecker symbol straight from its definition over the factorization of k."""
    if k == 0:
        return 1 if abs(a) == 1 else 0
    val = 1
    if k < 0:
        k = -k
        if a < 0:
            val = -1
    for p, e in trial_factor(k):
        if p == 2:
            s = 0 if a % 2 == 0 else (1 if a % 8 in (1, 7) else -1)
        else:
            r = pow(a % p, (p - 1) // 2, p)
            s = 0 if a % p == 0 else (1 if r == 1 else -1)
        val *= s**e
    return val


def brute_represent(form, n):
    """Count (x, y) with a x^2 + b x y + c y^2 = n over a generous box."""
    a, b, c = form
    box = int((4 * max(a, c) * n / -(b * b - 4 * a * c)) ** 0.5) + 2
    return sum(
        1
        for x in range(-box, box + 1)
        for y in range(-box, box + 1)
        if a * x * x + b * x * y + c * y * y == n
    )


def record_acceptance(line: str) -> None:
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def oracle():
    class O:
        factor = staticmethod(trial_factor)
        d = staticmethod(naive_divisor_count)
        is_prime = staticmethod(naive_is_prime)
        kronecker = staticmethod(euler_kronecker)
        represent = staticmethod(brute_represent)

    return O
