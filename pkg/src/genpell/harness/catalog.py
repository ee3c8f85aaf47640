"""Every printed identity of the Pell / generalized Pell family, as checkable data.

Notation in the ``formula`` strings: P and Q are Pell and Pell-Lucas numbers,
G the generalized Pell sequence G(0) = q, G(1) = p, C(n) = G(n) + i G(n+1),
D(n) = G(n) + eps G(n+1), e_p = p^2 - 2pq - q^2, and <.,.> / x / ||.|| are
the vector dot, cross and norm on (s(n), s(n+1), s(n+2)).

Ids are grouped by family:

    PL  Pell / Pell-Lucas property list          PS  Pell summation formulas
    GP  generalized recurrences, sums, identities  GR  auxiliary Pell relations
    XP  cross-product helper relations           CP  complex identities
    DP  dual identities                          VT  vector theorems (G, C, D)

Entries with ``conjectured=True`` are proposed corrections of printed
identities that fail; they are verified by the same sweep but kept out of the
printed-identity counts.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from genpell.gen_pell import gen_pell_pq as G
from genpell.harness.model import IdentitySpec
from genpell.hypercomplex import Complex, Dual
from genpell.pell_core import neg_one_pow as sgn
from genpell.pell_core import pell as P
from genpell.pell_core import pell_lucas as Q
from genpell.pell_vec import _make_vec, cross, dot

PRINTED_COUNT = 67
CONJECTURED_COUNT = 9

I2 = Complex(2, 2)  # 2 + 2i
E12 = Dual(1, 2)  # 1 + 2 eps
CZERO = Complex(0, 0)
DZERO = Dual(0, 0)


def ep(p: int, q: int) -> int:
    return p * p - 2 * p * q - q * q


@lru_cache(maxsize=8192)
def C(p: int, q: int, n: int) -> Complex:
    return Complex(G(p, q, n), G(p, q, n + 1))


@lru_cache(maxsize=8192)
def D(p: int, q: int, n: int) -> Dual:
    return Dual(G(p, q, n), G(p, q, n + 1))


def vec(kind: str, p: int, q: int, n: int):
    return _make_vec(kind, p, q, n)


@lru_cache(maxsize=256)
def _cross(kind: str, p: int, q: int, n: int, m: int):
    # l is the innermost sweep variable, so a small cache covers it
    return cross(vec(kind, p, q, n), vec(kind, p, q, m))


def _cross_closed(kind: str, p: int, q: int, n: int, m: int):
    e = ep(p, q)
    if kind == "gen":
        s = sgn(m + 1) * P(n - m) * e
    elif kind == "complex":
        s = I2 * (sgn(n) * P(m - n) * e)
    else:
        s = E12 * (sgn(m + 1) * P(n - m) * e)
    return (s, s * 2, -s)


def _mixed(kind: str, p: int, q: int, n: int, m: int, l: int):
    return dot(_cross(kind, p, q, n, m), vec(kind, p, q, l), conjugate=False)


def _spec(id, locator, formula, ring, vars, lhs, rhs, expected="pass", **kw) -> IdentitySpec:
    return IdentitySpec(
        id=id,
        locator=locator,
        formula=formula,
        ring=ring,
        vars=tuple(vars.split()),
        lhs=lhs,
        rhs=rhs,
        expected_status=expected,
        **kw,
    )


def _pell_list() -> list[IdentitySpec]:
    loc = "Pell / Pell-Lucas property list, relation {}"
    return [
        _spec("PL-01", loc.format(1), "P_m P_{n+1} + P_{m-1} P_n = P_{m+n}", "integer", "n m",
              lambda n, m: P(m) * P(n + 1) + P(m - 1) * P(n),
              lambda n, m: P(m + n)),
        _spec("PL-02", loc.format(2), "P_m P_{n+1} - P_{m+1} P_n = (-1)^n P_{m-n}", "integer", "n m",
              lambda n, m: P(m) * P(n + 1) - P(m + 1) * P(n),
              lambda n, m: sgn(n) * P(m - n)),
        _spec("PL-03", loc.format(3), "P_{n-1} P_{n+1} - P_n^2 = (-1)^n", "integer", "n",
              lambda n: P(n - 1) * P(n + 1) - P(n) ** 2,
              lambda n: sgn(n)),
        _spec("PL-04", loc.format(4), "P_n^2 + P_{n+1}^2 = P_{2n+1}", "integer", "n",
              lambda n: P(n) ** 2 + P(n + 1) ** 2,
              lambda n: P(2 * n + 1)),
        _spec("PL-05", loc.format(5), "P_{n+1}^2 - P_{n-1}^2 = 2 P_{2n}", "integer", "n",
              lambda n: P(n + 1) ** 2 - P(n - 1) ** 2,
              lambda n: 2 * P(2 * n)),
        _spec("PL-06", loc.format(6), "2 P_{n+1} P_n - 2 P_n^2 = P_{2n}", "integer", "n",
              lambda n: 2 * P(n + 1) * P(n) - 2 * P(n) ** 2,
              lambda n: P(2 * n)),
        _spec("PL-07", loc.format(7), "P_n^2 + P_{n+3}^2 = 5 P_{2n+3}", "integer", "n",
              lambda n: P(n) ** 2 + P(n + 3) ** 2,
              lambda n: 5 * P(2 * n + 3)),
        _spec("PL-08", loc.format(8), "P_{2n+1} + P_{2n} = 2 P_{n+1}^2 - 2 P_n^2 - (-1)^n", "integer", "n",
              lambda n: P(2 * n + 1) + P(2 * n),
              lambda n: 2 * P(n + 1) ** 2 - 2 * P(n) ** 2 - sgn(n)),
        _spec("PL-09", loc.format(9), "P_n^2 + P_{n-1} P_{n+1} = Q_n / 4", "rational", "n",
              lambda n: 4 * (P(n) ** 2 + P(n - 1) * P(n + 1)),
              lambda n: Q(n), expected="fail",
              notes="checked with the denominator cleared: 4 * lhs against Q_n"),
        _spec("PL-10", loc.format(10), "P_{n+1} + P_{n-1} = Q_n", "integer", "n",
              lambda n: P(n + 1) + P(n - 1),
              lambda n: Q(n)),
        _spec("PL-11", loc.format(11), "P_n Q_n = P_{2n}", "integer", "n",
              lambda n: P(n) * Q(n),
              lambda n: P(2 * n)),
    ]


def _pell_sums() -> list[IdentitySpec]:
    return [
        _spec("PS-01", "Pell square-sum formula",
              "P_1^2 + P_2^2 + ... + P_n^2 = P_n P_{n+1} / 2", "rational", "n",
              lambda n: sum(P(k) ** 2 for k in range(1, n + 1)),
              lambda n: Fraction(P(n) * P(n + 1), 2),
              lower_bounds={"n": 0},
              notes="printed with a stray repeated P_1^2 term; read as the sum over k = 1..n"),
        _spec("PS-02", "binomial sum with powers of two",
              "sum_{k=0}^{n} C(n,k) 2^k P_{2k} = P_{2n}", "integer", "n",
              lambda n: sum(comb(n, k) * 2**k * P(2 * k) for k in range(n + 1)),
              lambda n: P(2 * n), expected="fail", lower_bounds={"n": 0}),
        _spec("PS-03", "binomial convolution sum",
              "sum_{k=0}^{n} C(n,k) P_k P_{n-k} = 2^n P_n", "integer", "n",
              lambda n: sum(comb(n, k) * P(k) * P(n - k) for k in range(n + 1)),
              lambda n: 2**n * P(n), expected="fail", lower_bounds={"n": 0}),
    ]


def _generalized() -> list[IdentitySpec]:
    loc = "generalized Pell identity list, item {}"
    A = lambda p, q: 2 * p - 2 * q  # noqa: E731
    return [
        _spec("GP-01", "generalized Pell addition formula", "G_{n+r} = G_n P_{r+1} + G_{n-1} P_r",
              "integer", "p q n r",
              lambda p, q, n, r: G(p, q, n + r),
              lambda p, q, n, r: G(p, q, n) * P(r + 1) + G(p, q, n - 1) * P(r)),
        _spec("GP-02", "generalized Pell auxiliary recurrence, first",
              "G_{n+1} - 5 G_{n-1} - 2 G_{n-2} = 0", "integer", "p q n",
              lambda p, q, n: G(p, q, n + 1) - 5 * G(p, q, n - 1) - 2 * G(p, q, n - 2),
              lambda p, q, n: 0),
        _spec("GP-03", "generalized Pell auxiliary recurrence, second",
              "2 G_n - 4 G_{n-1} - G_{n-2} = 0", "integer", "p q n",
              lambda p, q, n: 2 * G(p, q, n) - 4 * G(p, q, n - 1) - G(p, q, n - 2),
              lambda p, q, n: 0, expected="fail",
              notes="the left side reduces to G_{n-2} under the recurrence"),
        _spec("GP-04", "generalized Pell odd-index partial sum",
              "2 sum_{i=0}^{n-1} G_{2i+1} = G_{2n} - q", "integer", "p q n",
              lambda p, q, n: 2 * sum(G(p, q, 2 * i + 1) for i in range(n)),
              lambda p, q, n: G(p, q, 2 * n) - q, lower_bounds={"n": 0}),
        _spec("GP-05", "generalized Pell even-index partial sum",
              "2 sum_{i=1}^{n} G_{2i} = G_{2n+1} - p", "integer", "p q n",
              lambda p, q, n: 2 * sum(G(p, q, 2 * i) for i in range(1, n + 1)),
              lambda p, q, n: G(p, q, 2 * n + 1) - p, lower_bounds={"n": 0}),
        _spec("GP-06", loc.format(1), "G_n^2 + G_{n+1}^2 = (2p - 2q) G_{2n+1} - e_p P_{2n+1}",
              "integer", "p q n",
              lambda p, q, n: G(p, q, n) ** 2 + G(p, q, n + 1) ** 2,
              lambda p, q, n: A(p, q) * G(p, q, 2 * n + 1) - ep(p, q) * P(2 * n + 1)),
        _spec("GP-07", loc.format(2), "G_{n+1}^2 - G_{n-1}^2 = 2 [(2p - 2q) G_{2n} - e_p P_{2n}]",
              "integer", "p q n",
              lambda p, q, n: G(p, q, n + 1) ** 2 - G(p, q, n - 1) ** 2,
              lambda p, q, n: 2 * (A(p, q) * G(p, q, 2 * n) - ep(p, q) * P(2 * n))),
        _spec("GP-08", loc.format(3), "G_{n-1} G_{n+1} - G_n^2 = (-1)^n e_p", "integer", "p q n",
              lambda p, q, n: G(p, q, n - 1) * G(p, q, n + 1) - G(p, q, n) ** 2,
              lambda p, q, n: sgn(n) * ep(p, q)),
        _spec("GP-09", loc.format(4), "G_{n+1}^2 + e_p P_n^2 = p G_{2n+1}", "integer", "p q n",
              lambda p, q, n: G(p, q, n + 1) ** 2 + ep(p, q) * P(n) ** 2,
              lambda p, q, n: p * G(p, q, 2 * n + 1)),
        _spec("GP-10", loc.format(5), "G_m G_{n+1} - G_{m+1} G_n = (-1)^n e_p P_{m-n}", "integer",
              "p q n m",
              lambda p, q, n, m: G(p, q, m) * G(p, q, n + 1) - G(p, q, m + 1) * G(p, q, n),
              lambda p, q, n, m: sgn(n) * ep(p, q) * P(m - n)),
        _spec("GP-11", loc.format(6), "G_m G_{n+1} + G_{m-1} G_n = (2p - 2q) G_{m+n} - e_p P_{m+n}",
              "integer", "p q n m",
              lambda p, q, n, m: G(p, q, m) * G(p, q, n + 1) + G(p, q, m - 1) * G(p, q, n),
              lambda p, q, n, m: A(p, q) * G(p, q, m + n) - ep(p, q) * P(m + n)),
        _spec("GP-12", loc.format(7), "G_{n+1-r} G_{n+1+r} - G_{n+1}^2 = (-1)^{n-r} e_p P_r^2",
              "integer", "p q n r",
              lambda p, q, n, r: G(p, q, n + 1 - r) * G(p, q, n + 1 + r) - G(p, q, n + 1) ** 2,
              lambda p, q, n, r: sgn(n - r) * ep(p, q) * P(r) ** 2),
        _spec("GP-13", loc.format(8),
              "G_n G_{n+r+1} - G_{n-s} G_{n+r+s+1} = (-1)^{n+s} e_p P_s P_{r+s+1}",
              "integer", "p q n r s",
              lambda p, q, n, r, s: G(p, q, n) * G(p, q, n + r + 1) - G(p, q, n - s) * G(p, q, n + r + s + 1),
              lambda p, q, n, r, s: sgn(n + s) * ep(p, q) * P(s) * P(r + s + 1)),
        _spec("GP-14", loc.format(9), "(G_{n+r} + (-1)^r G_{n-r}) / G_n = Q_r", "integer", "p q n r",
              lambda p, q, n, r: G(p, q, n + r) + sgn(r) * G(p, q, n - r),
              lambda p, q, n, r: Q(r) * G(p, q, n),
              notes="checked multiplicatively: numerator against Q_r * G_n"),
    ]


def _auxiliary() -> list[IdentitySpec]:
    loc = "auxiliary Pell relations, item {}"
    return [
        _spec("GR-01", loc.format(1), "P_{n+r} + (-1)^r P_{n-r} = Q_r P_n", "integer", "n r",
              lambda n, r: P(n + r) + sgn(r) * P(n - r),
              lambda n, r: Q(r) * P(n)),
        _spec("GR-02", loc.format(2), "P_{n+r} P_{n-r} - P_n^2 = (-1)^{n-r+1} P_r^2", "integer", "n r",
              lambda n, r: P(n + r) * P(n - r) - P(n) ** 2,
              lambda n, r: sgn(n - r + 1) * P(r) ** 2),
        _spec("GR-03", loc.format(3),
              "P_n P_{n+r+1} - P_{n-s} P_{n+r+s+1} = (-1)^{n+s} P_s P_{r+s+1}", "integer", "n r s",
              lambda n, r, s: P(n) * P(n + r + 1) - P(n - s) * P(n + r + s + 1),
              lambda n, r, s: sgn(n + s) * P(s) * P(r + s + 1)),
        _spec("GR-04", loc.format(4),
              "P_{n-1} P_{n+r} - P_{n-s-1} P_{n+r+s} = (-1)^{n+s+1} P_s P_{r+s+1}", "integer", "n r s",
              lambda n, r, s: P(n - 1) * P(n + r) - P(n - s - 1) * P(n + r + s),
              lambda n, r, s: sgn(n + s + 1) * P(s) * P(r + s + 1)),
        _spec("GR-05", loc.format(5),
              "P_n P_{n+r} + P_{n-1} P_{n+r+1} - P_{n-s} P_{n+r+s} - P_{n-s-1} P_{n+r+s+1}"
              " = 2 (-1)^{n+s+1} P_s P_{r+s+1}", "integer", "n r s",
              lambda n, r, s: (P(n) * P(n + r) + P(n - 1) * P(n + r + 1)
                               - P(n - s) * P(n + r + s) - P(n - s - 1) * P(n + r + s + 1)),
              lambda n, r, s: 2 * sgn(n + s + 1) * P(s) * P(r + s + 1)),
    ]


def _cross_helpers() -> list[IdentitySpec]:
    loc = "cross-product helper relations, item {}"
    return [
        _spec("XP-01", loc.format(1), "P_n^2 - P_{n+1} P_{n-1} = (-1)^{n+1}", "integer", "n",
              lambda n: P(n) ** 2 - P(n + 1) * P(n - 1),
              lambda n: sgn(n + 1)),
        _spec("XP-02", loc.format(2), "P_{n-1} P_{m+1} - P_{n+2} P_{m-1} = 5 (-1)^{m-1} P_{n-m}",
              "integer", "n m",
              lambda n, m: P(n - 1) * P(m + 1) - P(n + 2) * P(m - 1),
              lambda n, m: 5 * sgn(m - 1) * P(n - m), expected="fail",
              notes="fails on the diagonal n = m, where the right side vanishes"),
        _spec("XP-03", loc.format(3), "P_{n-1} P_{m+1} - P_{n+1} P_{m-1} = 2 (-1)^{m-1} P_{n-m}",
              "integer", "n m",
              lambda n, m: P(n - 1) * P(m + 1) - P(n + 1) * P(m - 1),
              lambda n, m: 2 * sgn(m - 1) * P(n - m)),
        _spec("XP-04", loc.format(4), "P_n P_{m+2} - P_{n+2} P_m = 2 (-1)^m P_{n-m}", "integer", "n m",
              lambda n, m: P(n) * P(m + 2) - P(n + 2) * P(m),
              lambda n, m: 2 * sgn(m) * P(n - m)),
    ]


def _complex() -> list[IdentitySpec]:
    loc = "complex Pell identity list, item {}"
    A = lambda p, q: Complex(2 * p - 2 * q, 2 * p + 2 * q)  # noqa: E731
    return [
        _spec("CP-01", loc.format(1),
              "C_n^2 + C_{n+1}^2 = [(2p - 2q) + i(2p + 2q)] C_{2n+1} - (2 + 2i) e_p P_{2n+1}",
              "complex", "p q n",
              lambda p, q, n: C(p, q, n) * C(p, q, n) + C(p, q, n + 1) * C(p, q, n + 1),
              lambda p, q, n: A(p, q) * C(p, q, 2 * n + 1) - I2 * (ep(p, q) * P(2 * n + 1))),
        _spec("CP-02", loc.format(2),
              "C_{n+1}^2 - C_{n-1}^2 = 2 [(2p - 2q) + i(2p + 2q)] C_{2n} - 2 (2 + 2i) e_p P_{2n}",
              "complex", "p q n",
              lambda p, q, n: C(p, q, n + 1) * C(p, q, n + 1) - C(p, q, n - 1) * C(p, q, n - 1),
              lambda p, q, n: A(p, q) * C(p, q, 2 * n) * 2 - I2 * (2 * ep(p, q) * P(2 * n))),
        _spec("CP-03", loc.format(3), "C_{n+1}^2 + (2 + 2i) e_p P_n^2 = [(1 + 2i) C_{2n+1}",
              "complex", "p q n",
              lambda p, q, n: C(p, q, n + 1) * C(p, q, n + 1) + I2 * (ep(p, q) * P(n) ** 2),
              lambda p, q, n: Complex(1, 2) * C(p, q, 2 * n + 1), expected="fail",
              notes="unbalanced bracket in print; read as (1 + 2i) C_{2n+1}"),
        _spec("CP-04", loc.format(4), "C_{n-1} C_{n+1} - C_n^2 = (-1)^n (2 + 2i) e_p", "complex",
              "p q n",
              lambda p, q, n: C(p, q, n - 1) * C(p, q, n + 1) - C(p, q, n) * C(p, q, n),
              lambda p, q, n: I2 * (sgn(n) * ep(p, q))),
        _spec("CP-05", loc.format(5),
              "C_m C_{n+1} + C_{m-1} C_n = (2i - 2) [(2p + 2q) R_{m+n} + e_p P_{m+n-1}]",
              "complex", "p q n m", None, None, expected="quarantine",
              notes="R_{m+n} is never defined"),
        _spec("CP-06", loc.format(6),
              "C_n C_{n+r+1} - C_{n-s} C_{n+r+s+1} = (-1)^{n+s} (2 + 2i) e_p P_s P_{r+s+1}",
              "complex", "p q n r s",
              lambda p, q, n, r, s: C(p, q, n) * C(p, q, n + r + 1) - C(p, q, n - s) * C(p, q, n + r + s + 1),
              lambda p, q, n, r, s: I2 * (sgn(n + s) * ep(p, q) * P(s) * P(r + s + 1))),
        _spec("CP-07", loc.format(7), "C_m C_{n+1} - C_{m+1} C_n = (-1)^n P_{m-n} (2 + 2i) e_p",
              "complex", "p q n m",
              lambda p, q, n, m: C(p, q, m) * C(p, q, n + 1) - C(p, q, m + 1) * C(p, q, n),
              lambda p, q, n, m: I2 * (sgn(n) * P(m - n) * ep(p, q))),
        _spec("CP-08", loc.format(8),
              "C_{n+1-r} C_{n+1+r} - C_{n+1}^2 = (-1)^{n-r} (2 + 2i) e_p P_r^2", "complex", "p q n r",
              lambda p, q, n, r: C(p, q, n + 1 - r) * C(p, q, n + 1 + r) - C(p, q, n + 1) * C(p, q, n + 1),
              lambda p, q, n, r: I2 * (sgn(n - r) * ep(p, q) * P(r) ** 2)),
        _spec("CP-09", loc.format(9), "(C_{n+r} + (-1)^r C_{n-r}) / C_n = Q_r", "complex", "p q n r",
              lambda p, q, n, r: C(p, q, n + r) + C(p, q, n - r) * sgn(r),
              lambda p, q, n, r: C(p, q, n) * Q(r),
              notes="checked multiplicatively: numerator against Q_r * C_n"),
    ]


def _dual() -> list[IdentitySpec]:
    loc = "dual Pell identity list, item {}"
    A = lambda p, q: Dual(2 * p - 2 * q, 2 * p + 2 * q)  # noqa: E731
    return [
        _spec("DP-01", loc.format(1),
              "D_n^2 + D_{n-1}^2 = [(2p - 2q) + eps(2p + 2q)] D_{2n-1} - e_p (1 + 2eps) P_{2n-1}",
              "dual", "p q n",
              lambda p, q, n: D(p, q, n) * D(p, q, n) + D(p, q, n - 1) * D(p, q, n - 1),
              lambda p, q, n: A(p, q) * D(p, q, 2 * n - 1) - E12 * (ep(p, q) * P(2 * n - 1))),
        _spec("DP-02", loc.format(2),
              "D_{n+1}^2 + D_n^2 = [(2p - 2q) + eps(2p + 2q)] D_{2n+1} - e_p (1 + 2eps) P_{2n+1}",
              "dual", "p q n",
              lambda p, q, n: D(p, q, n + 1) * D(p, q, n + 1) + D(p, q, n) * D(p, q, n),
              lambda p, q, n: A(p, q) * D(p, q, 2 * n + 1) - E12 * (ep(p, q) * P(2 * n + 1))),
        _spec("DP-03", loc.format(3),
              "D_{n+1}^2 - D_{n-1}^2 = [(4p - 4q) + eps(4p + 4q)] D_{2n} - 2 e_p (1 + 2eps) P_{2n}",
              "dual", "p q n",
              lambda p, q, n: D(p, q, n + 1) * D(p, q, n + 1) - D(p, q, n - 1) * D(p, q, n - 1),
              lambda p, q, n: A(p, q) * D(p, q, 2 * n) * 2 - E12 * (2 * ep(p, q) * P(2 * n))),
        _spec("DP-04", loc.format(4), "D_{n-1} D_{n+1} - D_n^2 = (-1)^n e_p (1 + 2eps)", "dual", "p q n",
              lambda p, q, n: D(p, q, n - 1) * D(p, q, n + 1) - D(p, q, n) * D(p, q, n),
              lambda p, q, n: E12 * (sgn(n) * ep(p, q))),
        _spec("DP-05", loc.format(5), "D_m D_{n+1} - D_{m+1} D_n = (-1)^n e_p (1 + 2eps) P_{m-n}",
              "dual", "p q n m",
              lambda p, q, n, m: D(p, q, m) * D(p, q, n + 1) - D(p, q, m + 1) * D(p, q, n),
              lambda p, q, n, m: E12 * (sgn(n) * ep(p, q) * P(m - n))),
        _spec("DP-06", loc.format(6), "D_{n+1}^2 + e_p (1 + 2eps) P_n^2 = (1 + 2eps) D_{2n+1}", "dual",
              "p q n",
              lambda p, q, n: D(p, q, n + 1) * D(p, q, n + 1) + E12 * (ep(p, q) * P(n) ** 2),
              lambda p, q, n: E12 * D(p, q, 2 * n + 1), expected="fail"),
        _spec("DP-07", loc.format(7),
              "D_n D_{n+r+1} - D_{n-s} D_{n+r+s+1} = (-1)^{n+s} e_p (1 + 2eps) P_s P_{r+s+1}",
              "dual", "p q n r s",
              lambda p, q, n, r, s: D(p, q, n) * D(p, q, n + r + 1) - D(p, q, n - s) * D(p, q, n + r + s + 1),
              lambda p, q, n, r, s: E12 * (sgn(n + s) * ep(p, q) * P(s) * P(r + s + 1))),
        _spec("DP-08", loc.format(8),
              "D_{n+1-r} D_{n+1+r} - D_{n+1}^2 = (-1)^{n-r} e_p (1 + 2eps) P_r^2", "dual", "p q n r",
              lambda p, q, n, r: D(p, q, n + 1 - r) * D(p, q, n + 1 + r) - D(p, q, n + 1) * D(p, q, n + 1),
              lambda p, q, n, r: E12 * (sgn(n - r) * ep(p, q) * P(r) ** 2)),
        _spec("DP-09", loc.format(9), "(D_{n+r} + (-1)^r D_{n-r}) / D_n = Q_r", "dual", "p q n r",
              lambda p, q, n, r: D(p, q, n + r) + D(p, q, n - r) * sgn(r),
              lambda p, q, n, r: D(p, q, n) * Q(r),
              notes="checked multiplicatively: numerator against Q_r * D_n"),
    ]


def _gen_dot_closed(p: int, q: int, n: int, m: int) -> int:
    return (
        p * p * (P(n + m + 3) + P(n) * P(m))
        + p * q * (P(n + m + 2) + 2 * P(n + m) + 2 * P(n + 1) * P(m + 1))
        + q * q * (P(n + m + 1) + P(n - 1) * P(m - 1))
    )


def _dual_dot_closed(p: int, q: int, n: int, m: int) -> Dual:
    k = n + m
    return (
        Dual(P(k + 3) + P(n) * P(m), 2 * P(k + 4) + P(k) + 2 * P(n) * P(m)) * (p * p)
        + Dual(P(k + 2) + 2 * P(n + 1) * P(m + 1) + 2 * P(k),
               2 * P(k + 3) + 4 * P(k + 1) + 2 * P(k + 2) + 4 * P(n + 1) * P(m + 1)) * (p * q)
        + Dual(P(k + 1) + P(n - 1) * P(m - 1), 2 * P(k + 2) + P(k - 2) + 2 * P(n - 1) * P(m - 1)) * (q * q)
    )


def _dual_radicand(p: int, q: int, n: int, pq_eps: int) -> Dual:
    re = (
        p * p * (P(2 * n + 3) + P(n) ** 2)
        + p * q * (P(2 * n + 2) + 2 * P(n + 1) ** 2 + 2 * P(2 * n))
        + q * q * (P(2 * n + 1) + P(n - 1) ** 2)
    )
    du = 2 * (
        p * p * (P(2 * n + 4) + P(n) * P(n + 1))
        + p * q * pq_eps
        + q * q * (P(2 * n + 2) + P(n - 1) * P(n))
    )
    return Dual(re, du)


def _vectors() -> list[IdentitySpec]:
    def hdot(kind, p, q, n, m):
        return dot(vec(kind, p, q, n), vec(kind, p, q, m))

    return [
        _spec("VT-G1", "generalized Pell vector dot-product theorem",
              "<G_n, G_m> = p^2 (P_{n+m+3} + P_n P_m) + pq (P_{n+m+2} + 2 P_{n+m} + 2 P_{n+1} P_{m+1})"
              " + q^2 (P_{n+m+1} + P_{n-1} P_{m-1})", "integer", "p q n m",
              lambda p, q, n, m: hdot("gen", p, q, n, m),
              _gen_dot_closed),
        _spec("VT-G2", "generalized Pell vector squared norm",
              "||G_n||^2 = p^2 (P_{2n+3} + P_n^2) + 2pq (P_{2n+2} + P_n P_{n-1}) + q^2 (P_{2n+1} + P_{n-1}^2)",
              "integer", "p q n",
              lambda p, q, n: hdot("gen", p, q, n, n),
              lambda p, q, n: (p * p * (P(2 * n + 3) + P(n) ** 2)
                               + 2 * p * q * (P(2 * n + 2) + P(n) * P(n - 1))
                               + q * q * (P(2 * n + 1) + P(n - 1) ** 2))),
        _spec("VT-G3", "generalized Pell vector cross-product theorem",
              "G_n x G_m = (-1)^{m+1} P_{n-m} (i + 2j - k) e_p", "integer", "p q n m",
              lambda p, q, n, m: tuple(_cross("gen", p, q, n, m)),
              lambda p, q, n, m: _cross_closed("gen", p, q, n, m)),
        _spec("VT-G4", "generalized Pell vector mixed-product theorem", "<G_n x G_m, G_l> = 0",
              "integer", "p q n m l",
              lambda p, q, n, m, l: _mixed("gen", p, q, n, m, l),
              lambda p, q, n, m, l: 0),
        _spec("VT-C1", "complex Pell vector dot-product theorem",
              "<C_n, C_m> = 7 [p^2 P_{n+m+3} + 2pq P_{n+m+2} + q^2 P_{n+m+1}] + (-1)^n i P_{m-n} e_p",
              "complex", "p q n m",
              lambda p, q, n, m: hdot("complex", p, q, n, m),
              lambda p, q, n, m: Complex(
                  7 * (p * p * P(n + m + 3) + 2 * p * q * P(n + m + 2) + q * q * P(n + m + 1)),
                  sgn(n) * P(m - n) * ep(p, q)),
              notes="Hermitian: the second vector is conjugated"),
        _spec("VT-C2", "complex Pell vector norm",
              "||C_n|| = sqrt(7 [p^2 P_{2n+3} + 2pq P_{2n+2} + q^2 P_{2n+1}])", "complex", "p q n",
              lambda p, q, n: hdot("complex", p, q, n, n),
              lambda p, q, n: Complex(7 * (p * p * P(2 * n + 3) + 2 * p * q * P(2 * n + 2)
                                           + q * q * P(2 * n + 1)), 0),
              notes="compared under the square root: Hermitian self-dot against the radicand"),
        _spec("VT-C3", "complex Pell vector cross-product theorem",
              "C_n x C_m = (-1)^n P_{m-n} (2 + 2i) e_p (i + 2j - k)", "complex", "p q n m",
              lambda p, q, n, m: tuple(_cross("complex", p, q, n, m)),
              lambda p, q, n, m: _cross_closed("complex", p, q, n, m),
              notes="(-1)^n P_{m-n} equals the (-1)^{m+1} P_{n-m} used for G and D"),
        _spec("VT-C4", "complex Pell vector mixed-product theorem", "<C_n x C_m, C_l> = 0",
              "complex", "p q n m l",
              lambda p, q, n, m, l: _mixed("complex", p, q, n, m, l),
              lambda p, q, n, m, l: CZERO,
              notes="determinant form: plain products, no conjugation"),
        _spec("VT-D1", "dual Pell vector dot-product theorem",
              "<D_n, D_m> = p^2 [(P_{n+m+3} + P_n P_m) + eps (2 P_{n+m+4} + P_{n+m} + 2 P_n P_m)]"
              " + pq [(P_{n+m+2} + 2 P_{n+1} P_{m+1} + 2 P_{n+m})"
              " + eps (2 P_{n+m+3} + 4 P_{n+m+1} + 2 P_{n+m+2} + 4 P_{n+1} P_{m+1})]"
              " + q^2 [(P_{n+m+1} + P_{n-1} P_{m-1}) + eps (2 P_{n+m+2} + P_{n+m-2} + 2 P_{n-1} P_{m-1})]",
              "dual", "p q n m",
              lambda p, q, n, m: hdot("dual", p, q, n, m),
              _dual_dot_closed),
        _spec("VT-D2", "dual Pell vector norm",
              "||D_n|| = sqrt(p^2 (P_{2n+3} + P_n^2) + pq (P_{2n+2} + 2 P_{n+1}^2 + 2 P_{2n})"
              " + q^2 (P_{2n+1} + P_{n-1}^2) + 2 eps {p^2 (P_{2n+4} + P_n P_{n+1})"
              " + pq (P_{2n+3} + 2 P_{n+1} P_{n+2}) + q^2 (P_{2n+2} + P_{n-1} P_n)})",
              "dual", "p q n",
              lambda p, q, n: hdot("dual", p, q, n, n),
              lambda p, q, n: _dual_radicand(p, q, n, P(2 * n + 3) + 2 * P(n + 1) * P(n + 2)),
              expected="fail",
              notes="compared under the square root; the pq coefficient of eps is misprinted"),
        _spec("VT-D3", "dual Pell vector cross-product theorem",
              "D_n x D_m = (-1)^{m+1} P_{n-m} (1 + 2eps) e_p (i + 2j - k)", "dual", "p q n m",
              lambda p, q, n, m: tuple(_cross("dual", p, q, n, m)),
              lambda p, q, n, m: _cross_closed("dual", p, q, n, m)),
        _spec("VT-D4", "dual Pell vector mixed-product theorem", "<D_n x D_m, D_l> = 0",
              "dual", "p q n m l",
              lambda p, q, n, m, l: _mixed("dual", p, q, n, m, l),
              lambda p, q, n, m, l: DZERO),
    ]


def _conjectured() -> list[IdentitySpec]:
    kw = {"conjectured": True}
    return [
        _spec("PL-09C", "proposed correction of PL-09", "P_n^2 + P_{n-1} P_{n+1} = Q_n^2 / 4",
              "rational", "n",
              lambda n: 4 * (P(n) ** 2 + P(n - 1) * P(n + 1)),
              lambda n: Q(n) ** 2, corrects="PL-09", **kw),
        _spec("PS-02C", "proposed correction of PS-02", "sum_{k=0}^{n} C(n,k) 2^k P_k = P_{2n}",
              "integer", "n",
              lambda n: sum(comb(n, k) * 2**k * P(k) for k in range(n + 1)),
              lambda n: P(2 * n), lower_bounds={"n": 0}, corrects="PS-02", **kw),
        _spec("PS-03C", "proposed correction of PS-03", "sum_{k=0}^{n} C(n,k) P_k Q_{n-k} = 2^n P_n",
              "integer", "n",
              lambda n: sum(comb(n, k) * P(k) * Q(n - k) for k in range(n + 1)),
              lambda n: 2**n * P(n), lower_bounds={"n": 0}, corrects="PS-03", **kw),
        _spec("GP-03C", "proposed correction of GP-03", "2 G_n - 4 G_{n-1} - 2 G_{n-2} = 0",
              "integer", "p q n",
              lambda p, q, n: 2 * G(p, q, n) - 4 * G(p, q, n - 1) - 2 * G(p, q, n - 2),
              lambda p, q, n: 0, corrects="GP-03", **kw),
        _spec("XP-02C", "proposed correction of XP-02",
              "P_{n-1} P_{m+2} - P_{n+2} P_{m-1} = 5 (-1)^{m-1} P_{n-m}", "integer", "n m",
              lambda n, m: P(n - 1) * P(m + 2) - P(n + 2) * P(m - 1),
              lambda n, m: 5 * sgn(m - 1) * P(n - m), corrects="XP-02", **kw),
        _spec("CP-03C", "proposed correction of CP-03",
              "C_{n+1}^2 + (2 + 2i) e_p P_n^2 = C_1 C_{2n+1},  C_1 = p + i(2p + q)", "complex", "p q n",
              lambda p, q, n: C(p, q, n + 1) * C(p, q, n + 1) + I2 * (ep(p, q) * P(n) ** 2),
              lambda p, q, n: C(p, q, 1) * C(p, q, 2 * n + 1), corrects="CP-03", **kw),
        _spec("CP-05C", "proposed reading of CP-05",
              "C_m C_{n+1} + C_{m-1} C_n = (2i - 2) [(2p + 2q) G_{m+n} + e_p P_{m+n-1}]",
              "complex", "p q n m",
              lambda p, q, n, m: C(p, q, m) * C(p, q, n + 1) + C(p, q, m - 1) * C(p, q, n),
              lambda p, q, n, m: Complex(-2, 2) * ((2 * p + 2 * q) * G(p, q, m + n) + ep(p, q) * P(m + n - 1)),
              corrects="CP-05", notes="undefined R_{m+n} read as G_{m+n}", **kw),
        _spec("DP-06C", "proposed correction of DP-06",
              "D_{n+1}^2 + e_p (1 + 2eps) P_n^2 = D_1 D_{2n+1},  D_1 = p + eps(2p + q)", "dual", "p q n",
              lambda p, q, n: D(p, q, n + 1) * D(p, q, n + 1) + E12 * (ep(p, q) * P(n) ** 2),
              lambda p, q, n: D(p, q, 1) * D(p, q, 2 * n + 1), corrects="DP-06", **kw),
        _spec("VT-D2C", "proposed correction of VT-D2",
              "<D_n, D_n> with the pq coefficient of eps read as 2 P_{2n+3} + P_{2n-1} + 2 P_n P_{n-1}",
              "dual", "p q n",
              lambda p, q, n: dot(vec("dual", p, q, n), vec("dual", p, q, n)),
              lambda p, q, n: _dual_radicand(p, q, n, 2 * P(2 * n + 3) + P(2 * n - 1) + 2 * P(n) * P(n - 1)),
              corrects="VT-D2", **kw),
    ]


@lru_cache(maxsize=1)
def _build() -> tuple[IdentitySpec, ...]:
    specs = (
        _pell_list() + _pell_sums() + _generalized() + _auxiliary() + _cross_helpers()
        + _complex() + _dual() + _vectors() + _conjectured()
    )
    ids = [s.id for s in specs]
    if len(set(ids)) != len(ids):
        raise AssertionError("duplicate identity ids in catalog")
    printed = sum(not s.conjectured for s in specs)
    if printed != PRINTED_COUNT or len(specs) - printed != CONJECTURED_COUNT:
        raise AssertionError(f"catalog holds {printed} printed + {len(specs) - printed} conjectured entries")
    return tuple(sorted(specs, key=lambda s: s.id))


def catalog(include_conjectured: bool = True) -> list[IdentitySpec]:
    """All identities sorted by id (stable)."""
    return [s for s in _build() if include_conjectured or not s.conjectured]


def get(identity_id: str) -> IdentitySpec:
    for spec in _build():
        if spec.id == identity_id:
            return spec
    raise KeyError(f"no identity with id {identity_id!r}")
