"""Ring extensions by i (i^2 = -1) and eps (eps^2 = 0), and the Pell sequences built on them.

:class:`Complex` and :class:`Dual` are generic over their base ring: the
components may be ``int``, ``float`` or :class:`~genpell.silver_ring.QuadInt`.
Anything that is not itself an extension element is treated as a base-ring
scalar, so ``Dual(x, y) * QuadInt(...)`` scales both components.  This is what
lets the dual Binet formula run in Dual[Z[sqrt 2]] with the same code that
handles dual integers.
"""

from __future__ import annotations

import math
from decimal import Decimal
from typing import Any

from genpell.errors import IntegrityError
from genpell.gen_pell import PellParams, gen_pell, gen_pell_binet
from genpell.silver_ring import ALPHA, BETA, ROOT_GAP, QuadInt, alpha_pow, beta_pow


def plain(x: Any) -> str:
    """Shortest round-tripping decimal, never in scientific notation."""
    if isinstance(x, float) and math.isfinite(x):
        return format(Decimal(repr(x)), "f")
    return str(x)


def _fmt(a: Any, b: Any, unit: str) -> str:
    if isinstance(b, (int, float)) and b < 0:
        return f"{plain(a)}-{plain(-b)}{unit}"
    return f"{plain(a)}+{plain(b)}{unit}"


class Complex:
    """``re + i*im`` over an arbitrary commutative base ring."""

    __slots__ = ("re", "im")

    def __init__(self, re: Any = 0, im: Any = 0) -> None:
        self.re = re
        self.im = im

    def __repr__(self) -> str:
        return f"Complex({self.re!r}, {self.im!r})"

    def __str__(self) -> str:
        return _fmt(self.re, self.im, "i")

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Complex):
            return self.re == other.re and self.im == other.im
        if isinstance(other, Dual):
            return NotImplemented
        return self.im == 0 and self.re == other

    def __hash__(self) -> int:
        return hash(("i", self.re, self.im))

    def __neg__(self) -> Complex:
        return Complex(-self.re, -self.im)

    def __add__(self, other: Any) -> Complex:
        if isinstance(other, Complex):
            return Complex(self.re + other.re, self.im + other.im)
        if isinstance(other, Dual):
            return NotImplemented
        return Complex(self.re + other, self.im)

    __radd__ = __add__

    def __sub__(self, other: Any) -> Complex:
        if isinstance(other, Complex):
            return Complex(self.re - other.re, self.im - other.im)
        if isinstance(other, Dual):
            return NotImplemented
        return Complex(self.re - other, self.im)

    def __rsub__(self, other: Any) -> Complex:
        return Complex(other - self.re, -self.im)

    def __mul__(self, other: Any) -> Complex:
        if isinstance(other, Complex):
            a, b, c, d = self.re, self.im, other.re, other.im
            return Complex(a * c - b * d, a * d + b * c)
        if isinstance(other, Dual):
            return NotImplemented
        return Complex(self.re * other, self.im * other)

    __rmul__ = __mul__

    def conj(self) -> Complex:
        return Complex(self.re, -self.im)

    def norm_sq(self) -> Any:
        return self.re * self.re + self.im * self.im


class Dual:
    """``re + eps*du`` with eps^2 = 0, over an arbitrary commutative base ring."""

    __slots__ = ("re", "du")

    def __init__(self, re: Any = 0, du: Any = 0) -> None:
        self.re = re
        self.du = du

    def __repr__(self) -> str:
        return f"Dual({self.re!r}, {self.du!r})"

    def __str__(self) -> str:
        return _fmt(self.re, self.du, "e")

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Dual):
            return self.re == other.re and self.du == other.du
        if isinstance(other, Complex):
            return NotImplemented
        return self.du == 0 and self.re == other

    def __hash__(self) -> int:
        return hash(("e", self.re, self.du))

    def __neg__(self) -> Dual:
        return Dual(-self.re, -self.du)

    def __add__(self, other: Any) -> Dual:
        if isinstance(other, Dual):
            return Dual(self.re + other.re, self.du + other.du)
        if isinstance(other, Complex):
            return NotImplemented
        return Dual(self.re + other, self.du)

    __radd__ = __add__

    def __sub__(self, other: Any) -> Dual:
        if isinstance(other, Dual):
            return Dual(self.re - other.re, self.du - other.du)
        if isinstance(other, Complex):
            return NotImplemented
        return Dual(self.re - other, self.du)

    def __rsub__(self, other: Any) -> Dual:
        return Dual(other - self.re, -self.du)

    def __mul__(self, other: Any) -> Dual:
        if isinstance(other, Dual):
            a, b, c, d = self.re, self.du, other.re, other.du
            return Dual(a * c, a * d + b * c)
        if isinstance(other, Complex):
            return NotImplemented
        return Dual(self.re * other, self.du * other)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> Dual:
        if not isinstance(other, Dual):
            return Dual(self.re / other, self.du / other)
        if other.re == 0:
            raise ZeroDivisionError("dual division by a pure-eps value")
        return Dual(
            self.re / other.re,
            (self.du * other.re - self.re * other.du) / (other.re * other.re),
        )

    def conj(self) -> Dual:
        return Dual(self.re, -self.du)


I = Complex(0, 1)
EPS = Dual(0, 1)


def complex_pell(params: PellParams, n: int) -> Complex:
    return Complex(gen_pell(params, n), gen_pell(params, n + 1))


def dual_pell(params: PellParams, n: int) -> Dual:
    return Dual(gen_pell(params, n), gen_pell(params, n + 1))


def complex_pell_binet(params: PellParams, n: int) -> Complex:
    """Closed form for C(n): the generalized Binet formula applied to each component."""
    return Complex(gen_pell_binet(params, n), gen_pell_binet(params, n + 1))


def dual_binet_weights(params: PellParams) -> tuple[Dual, Dual]:
    """``(p - 2q + eps q) + root * (q + eps p)`` for root = alpha and root = beta."""
    p, q = params.p, params.q
    head = Dual(QuadInt(p - 2 * q), QuadInt(q))
    tail = Dual(QuadInt(q), QuadInt(p))
    return head + tail * ALPHA, head + tail * BETA


def dual_pell_binet(params: PellParams, n: int) -> Dual:
    """D(n) from powers of alpha and beta, computed in Dual[Z[sqrt 2]]."""
    a_bar, b_bar = dual_binet_weights(params)
    num = a_bar * alpha_pow(n) - b_bar * beta_pow(n)
    parts = []
    for comp in (num.re, num.du):
        if comp.a != 0:
            raise IntegrityError(f"dual Binet numerator component {comp} has a rational part")
        parts.append(comp.exact_div(ROOT_GAP).as_int())
    return Dual(*parts)


def dual_sqrt(x: Dual) -> Dual:
    """``sqrt(a + eps a*) = sqrt(a) + eps a* / (2 sqrt(a))`` in floating point."""
    a = float(x.re)
    if not a > 0:
        raise ValueError(f"dual square root needs a positive real part, got {x.re}")
    root = math.sqrt(a)
    return Dual(root, float(x.du) / (2.0 * root))


def dual_ratio_term(params: PellParams, n: int) -> Dual:
    """D(n+1)/D(n) as a float dual; the eps part is (G(n+2)G(n) - G(n+1)^2) / G(n)^2."""
    g0 = gen_pell(params, n)
    if g0 == 0:
        raise ZeroDivisionError(f"G({n}) = 0 for {params}")
    g1 = gen_pell(params, n + 1)
    g2 = gen_pell(params, n + 2)
    return Dual(g1 / g0, (g2 * g0 - g1 * g1) / (g0 * g0))


def dual_silver_ratio_identity(params: PellParams) -> bool:
    """Both printed rational forms of lim D(n+1)/D(n) equal alpha exactly in Z[sqrt 2].

    The eps part of the limit carries the factor alpha^2 - 2 alpha - 1 = 0, so
    only the real part needs checking.
    """
    p, q = params.p, params.q
    a2 = ALPHA * ALPHA
    forms = (
        ((2 * p * p + p * q) * a2 + (p * p + 2 * p * q + q * q) * ALPHA + p * q,
         p * p * a2 + 2 * p * q * ALPHA + q * q),
        (p * q * a2 + (p * p - 2 * p * q + q * q) * ALPHA + (p * q - 2 * q * q),
         q * q * a2 + (2 * p * q - 4 * q * q) * ALPHA + (p * p - 4 * p * q + 4 * q * q)),
    )
    return a2 - 2 * ALPHA - 1 == 0 and all(num == ALPHA * den for num, den in forms)
