"""Pell and Pell-Lucas numbers over all signed indices.

Both sequences obey x(n) = 2 x(n-1) + x(n-2).  Seeds are P(0) = 0, P(1) = 1
and Q(0) = Q(1) = 2; negative indices come from running the recurrence
backward, x(n-2) = x(n) - 2 x(n-1).

Several independent evaluation routes live here (plain recurrence, fast
doubling, matrix power) so that they can be checked against each other and
against the closed forms in :mod:`genpell.silver_ring`.
"""

from __future__ import annotations

from collections.abc import Iterator
from functools import lru_cache

Matrix2 = tuple[tuple[int, int], tuple[int, int]]

PELL_SEEDS = (0, 1)
PELL_LUCAS_SEEDS = (2, 2)


def walk(x0: int, x1: int, n: int) -> int:
    """Term ``n`` of the (2, 1)-recurrence with ``x(0) = x0`` and ``x(1) = x1``."""
    if n >= 0:
        a, b = x0, x1
        for _ in range(n):
            a, b = b, 2 * b + a
        return a
    # backward: (x(k-1), x(k)) from (x(k), x(k+1))
    a, b = x0, x1
    for _ in range(-n):
        a, b = b - 2 * a, a
    return a


def terms(x0: int, x1: int, start: int, stop: int) -> Iterator[tuple[int, int]]:
    """Yield ``(k, x(k))`` for ``start <= k <= stop`` in one pass."""
    if stop < start:
        return
    a, b = walk(x0, x1, start), walk(x0, x1, start + 1)
    for k in range(start, stop + 1):
        yield k, a
        a, b = b, 2 * b + a


@lru_cache(maxsize=8192)
def pell(n: int) -> int:
    return walk(*PELL_SEEDS, n)


@lru_cache(maxsize=8192)
def pell_lucas(n: int) -> int:
    return walk(*PELL_LUCAS_SEEDS, n)


def pell_iterative(n: int) -> int:
    """Uncached recurrence; the baseline the faster routes are measured against."""
    return walk(*PELL_SEEDS, n)


def pell_pair_doubling(n: int) -> tuple[int, int]:
    """Return ``(P(n), P(n+1))`` for ``n >= 0`` by index doubling.

    Uses P(2k+1) = P(k)^2 + P(k+1)^2 and P(2k) = 2 P(k+1) P(k) - 2 P(k)^2.
    """
    if n < 0:
        raise ValueError(f"pell_pair_doubling needs n >= 0, got {n}")
    if n == 0:
        return 0, 1
    if n == 1:
        return 1, 2
    a, b = pell_pair_doubling(n // 2)
    even = 2 * a * (b - a)
    odd = a * a + b * b
    if n % 2 == 0:
        return even, odd
    return odd, 2 * odd + even


def pell_doubling(n: int) -> int:
    return pell_pair_doubling(n)[0]


def _mat_mul(x: Matrix2, y: Matrix2, m: int | None = None) -> Matrix2:
    (a, b), (c, d) = x
    (e, f), (g, h) = y
    r = ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))
    if m is None:
        return r
    return ((r[0][0] % m, r[0][1] % m), (r[1][0] % m, r[1][1] % m))


def pell_matrix_pow(n: int, m: int | None = None) -> Matrix2:
    """``[[2, 1], [1, 0]] ** n`` by binary exponentiation, optionally mod ``m``.

    For n >= 1 the result is ``[[P(n+1), P(n)], [P(n), P(n-1)]]``.
    """
    if n < 0:
        raise ValueError(f"pell_matrix_pow needs n >= 0, got {n}")
    result: Matrix2 = ((1, 0), (0, 1))
    base: Matrix2 = ((2, 1), (1, 0))
    if m is not None:
        result = ((1 % m, 0), (0, 1 % m))
        base = ((2 % m, 1 % m), (1 % m, 0))
    while n:
        if n & 1:
            result = _mat_mul(result, base, m)
        base = _mat_mul(base, base, m)
        n >>= 1
    return result


def pell_matrix(n: int) -> int:
    return pell_matrix_pow(n)[0][1]


def _pair_mod(n: int, m: int) -> tuple[int, int]:
    if n == 0:
        return 0, 1 % m
    if n == 1:
        return 1 % m, 2 % m
    a, b = _pair_mod(n // 2, m)
    even = 2 * a * (b - a) % m
    odd = (a * a + b * b) % m
    if n % 2 == 0:
        return even, odd
    return odd, (2 * odd + even) % m


def pell_mod(n: int, m: int) -> int:
    """P(n) mod m via doubling with reduction at every step; result in [0, m)."""
    if m <= 1:
        raise ValueError(f"modulus must exceed 1, got {m}")
    if n < 0:
        raise ValueError(f"pell_mod needs n >= 0, got {n}")
    return _pair_mod(n, m)[0]


def pell_recurrence_mod(n: int, m: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, (2 * b + a) % m
    return a % m


def neg_one_pow(k: int) -> int:
    """(-1)**k for any signed k, as an int."""
    return -1 if k & 1 else 1
