"""The two-parameter generalized Pell sequence G(n) = G_{p,q}(n).

G(0) = q, G(1) = p and G(n) = 2 G(n-1) + G(n-2).  By linearity
G(n) = p P(n) + q P(n-1) for every signed n, which is how values are
computed here; the recurrence run backward gives the same numbers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from genpell.errors import IntegrityError
from genpell.pell_core import pell
from genpell.silver_ring import ALPHA, BETA, ROOT_GAP, QuadInt, alpha_pow, beta_pow


@dataclass(frozen=True, order=True)
class PellParams:
    p: int
    q: int

    def __str__(self) -> str:
        return f"(p={self.p}, q={self.q})"


@lru_cache(maxsize=65536)
def gen_pell_pq(p: int, q: int, n: int) -> int:
    """Cached ``gen_pell`` keyed by plain ints, for sweeps over many (p, q, n)."""
    return p * pell(n) + q * pell(n - 1)


def gen_pell(params: PellParams, n: int) -> int:
    return gen_pell_pq(params.p, params.q, n)


def e_p(params: PellParams) -> int:
    """Cassini constant ``p^2 - 2pq - q^2``: G(n-1) G(n+1) - G(n)^2 = (-1)^n e_p."""
    p, q = params.p, params.q
    return p * p - 2 * p * q - q * q


def gen_pell_addition(params: PellParams, n: int, r: int) -> int:
    """Right-hand side of G(n+r) = G(n) P(r+1) + G(n-1) P(r)."""
    return gen_pell(params, n) * pell(r + 1) + gen_pell(params, n - 1) * pell(r)


def odd_partial_sum(params: PellParams, n: int) -> int:
    """``2 * sum(G(2i+1) for i in 0..n-1)`` by direct summation."""
    if n < 0:
        raise ValueError(f"partial sums need n >= 0, got {n}")
    return 2 * sum(gen_pell(params, 2 * i + 1) for i in range(n))


def even_partial_sum(params: PellParams, n: int) -> int:
    """``2 * sum(G(2i) for i in 1..n)`` by direct summation."""
    if n < 0:
        raise ValueError(f"partial sums need n >= 0, got {n}")
    return 2 * sum(gen_pell(params, 2 * i) for i in range(1, n + 1))


def binet_weights(params: PellParams) -> tuple[QuadInt, QuadInt]:
    """The coefficients of alpha^n and beta^n: p + q(alpha - 2) and its conjugate."""
    a_bar = params.p + params.q * (ALPHA - 2)
    b_bar = params.p + params.q * (BETA - 2)
    return a_bar, b_bar


def gen_pell_binet(params: PellParams, n: int) -> int:
    a_bar, b_bar = binet_weights(params)
    num = a_bar * alpha_pow(n) - b_bar * beta_pow(n)
    if num.a != 0:
        raise IntegrityError(f"Binet numerator {num} has a rational part")
    return num.exact_div(ROOT_GAP).as_int()


def silver_ratio_identity(params: PellParams) -> bool:
    """Check ``p*alpha + q == alpha * (q*alpha + p - 2q)`` exactly in Z[sqrt 2].

    This is why the limit of G(n+1)/G(n) is alpha for every (p, q) whose
    denominator ``q*alpha + p - 2q`` is nonzero.
    """
    p, q = params.p, params.q
    num = ALPHA * p + q
    den = ALPHA * q + (p - 2 * q)
    return num == ALPHA * den


def ratio_convergence(params: PellParams, n: int) -> float:
    """``|G(n+1)/G(n) - (1 + sqrt 2)|`` in double precision."""
    den = gen_pell(params, n)
    if den == 0:
        raise ZeroDivisionError(f"G({n}) = 0 for {params}")
    return abs(gen_pell(params, n + 1) / den - (1 + math.sqrt(2.0)))
